// Integer partitions and the diagram statistics used throughout the engine.
//
// Diagrams are in English notation with 0-indexed cells: row 0 is the longest
// row, and cell (i, j) has content j - i.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace deltaq {

struct CellStats {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int content = 0;
  int hook = 0;
};

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing; throws otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The hook (a, 1^b).
  static Partition hook(int arm_length, int leg_length);
  /// Sorts and drops zero parts.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses "[3,1,1]"; "[]" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// n(mu) = sum_i (i-1) mu_i, with i counted from one.
  int nstat() const;
  /// Part size -> number of occurrences.
  std::map<int, int> multiplicities() const;
  std::vector<CellStats> cell_stats() const;
  bool is_hook() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Dominance order; throws std::invalid_argument when sizes differ.
bool dominates(const Partition& lambda, const Partition& rho);

/// All partitions of n in reverse lexicographic order, optionally restricted
/// to an exact length.
std::vector<Partition> partitions_of(int n, int length_filter = -1);

/// z_lambda = prod_i i^{m_i} m_i!.
std::int64_t zee(const Partition& lambda);

/// Partitions are ordered with the largest in lexicographic order first.
using PartitionOrder = std::greater<Partition>;

}  // namespace deltaq
