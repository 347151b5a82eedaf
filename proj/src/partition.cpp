#include "deltaq/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deltaq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int arm_length, int leg_length) {
  if (arm_length < 1 || leg_length < 0) throw std::invalid_argument("invalid hook");
  std::vector<int> parts{arm_length};
  parts.insert(parts.end(), leg_length, 1);
  return Partition(std::move(parts));
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw std::invalid_argument("partition must start with '['");
  ++i;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("expected a part in partition");
      parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw std::invalid_argument("malformed partition");
    }
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("trailing characters after partition");
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

int Partition::nstat() const {
  int s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
  return s;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::vector<CellStats> Partition::cell_stats() const {
  std::vector<CellStats> cells;
  cells.reserve(size_);
  const Partition conj = conjugate();
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) {
      CellStats c;
      c.row = i;
      c.col = j;
      c.arm = parts_[i] - j - 1;
      c.leg = conj[j] - i - 1;
      c.content = j - i;
      c.hook = c.arm + c.leg + 1;
      cells.push_back(c);
    }
  return cells;
}

bool Partition::is_hook() const {
  return parts_.size() <= 1 || parts_[1] == 1;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

bool dominates(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("dominance needs equal sizes");
  int a = 0;
  int b = 0;
  const int len = std::max(lambda.length(), rho.length());
  for (int i = 0; i < len; ++i) {
    a += i < lambda.length() ? lambda[i] : 0;
    b += i < rho.length() ? rho[i] : 0;
    if (a < b) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              std::vector<Partition>& out, int length_filter) {
  if (remaining == 0) {
    if (length_filter < 0 || static_cast<int>(current.size()) == length_filter)
      out.emplace_back(current);
    return;
  }
  if (length_filter >= 0) {
    const int slots = length_filter - static_cast<int>(current.size());
    if (slots <= 0 || remaining > slots * max_part || remaining < slots) return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out, length_filter);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int length_filter) {
  if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, n, current, out, length_filter);
  return out;
}

std::int64_t zee(const Partition& lambda) {
  std::int64_t z = 1;
  for (auto [part, mult] : lambda.multiplicities())
    for (int k = 1; k <= mult; ++k) z *= static_cast<std::int64_t>(part) * k;
  return z;
}

}  // namespace deltaq
