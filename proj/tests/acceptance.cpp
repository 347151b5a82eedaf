// Acceptance suite: one PASS/FAIL line per criterion, with parameter ranges
// and runtime limits pinned here. Exit status is nonzero when any criterion
// fails, except for the documented known failures listed below.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "deltaq/delta_ops.hpp"
#include "deltaq/hall_littlewood.hpp"
#include "deltaq/parking.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/verify.hpp"

using namespace deltaq;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Criteria whose failure is understood and recorded; the reason is printed
// next to the FAIL line.
const std::map<std::string, std::string> kKnownFailures = {
    {"cor32",
     "the printed identity needs l >= k+2: outside it the right side is 0 while the left side is "
     "nonzero exactly when m+l < k+2; every case with k+2 <= l holds"},
};

std::string describe(const std::vector<IdentityReport>& reports) {
  const SuiteSummary s = summarize(reports);
  std::ostringstream out;
  out << s.equal << "/" << reports.size() << " equal";
  if (s.skipped) out << ", " << s.skipped << " skipped";
  for (const auto& r : reports)
    if (r.status == Status::mismatch) {
      out << "; first mismatch " << r.identity_id << "(";
      bool first = true;
      for (const auto& [k, v] : r.params) {
        out << (first ? "" : ",") << k << "=" << v;
        first = false;
      }
      out << ")";
      if (r.witness) out << " at " << r.witness->partition;
      break;
    }
  return out.str();
}

Outcome all_equal(const std::vector<IdentityReport>& reports) {
  const SuiteSummary s = summarize(reports);
  return {s.mismatch == 0 && s.skipped == 0 && !reports.empty(), describe(reports)};
}

Outcome suite(const std::string& id, int nmax) { return all_equal(run_suite(id, nmax)); }

Outcome prop31() { return suite("prop31", 11); }

// Literal range 0 <= m, k <= 8, 0 <= l <= 10.
Outcome cor32() {
  const auto reports = run_suite("cor32", 8);
  int inside = 0;
  int inside_equal = 0;
  int outside_mismatch = 0;
  int outside_mismatch_predicted = 0;
  for (const auto& r : reports) {
    const int m = std::stoi(r.params.at("m"));
    const int k = std::stoi(r.params.at("k"));
    const int l = std::stoi(r.params.at("l"));
    if (l >= k + 2) {
      ++inside;
      if (r.status == Status::equal) ++inside_equal;
    } else if (r.status == Status::mismatch) {
      ++outside_mismatch;
      if (m + l < k + 2) ++outside_mismatch_predicted;
    }
  }
  Outcome o = all_equal(reports);
  std::ostringstream extra;
  extra << "; within k+2<=l: " << inside_equal << "/" << inside << " equal; mismatches with l<k+2: "
        << outside_mismatch << " (" << outside_mismatch_predicted << " with m+l<k+2)";
  o.detail += extra.str();
  return o;
}

Outcome prop33() {
  std::vector<IdentityReport> reports = run_suite("prop33a", 12);
  for (const char* id : {"prop33b", "eq17", "eq17_outside"}) {
    auto more = run_suite(id, 12);
    reports.insert(reports.end(), more.begin(), more.end());
  }
  return all_equal(reports);
}

Outcome cauchy_expansions() {
  auto reports = run_suite("eq12", 7);
  auto more = run_suite("eq16", 7);
  reports.insert(reports.end(), more.begin(), more.end());
  return all_equal(reports);
}

Outcome delta_conjecture() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto t0 = run_suite("t0-delta", 6);
  const double t0_seconds = std::chrono::duration<double>(clock::now() - start).count();
  const auto mid = clock::now();
  const auto q0 = run_suite("q0-delta", 5);
  const double q0_seconds = std::chrono::duration<double>(clock::now() - mid).count();
  // Each endpoint carries its own limit.
  constexpr double kEndpointLimit = 600;
  const Outcome a = all_equal(t0);
  const Outcome b = all_equal(q0);
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << "t=0 n<=6: " << a.detail << " in " << t0_seconds
      << " s; q=0 n<=5: " << b.detail << " in " << q0_seconds << " s";
  return {a.pass && b.pass && t0_seconds < kEndpointLimit && q0_seconds < kEndpointLimit, out.str()};
}

Outcome llt_symmetry() {
  int paths = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& path : enumerate_paths(n)) {
      try {
        const SymFunc f = llt_sum(path);
        if (f.is_zero()) return {false, "zero LLT sum on a path of size " + std::to_string(n)};
      } catch (const NonSymmetricError& e) {
        return {false, e.what()};
      }
      ++paths;
    }
  return {true, std::to_string(paths) + " paths, every sum symmetric"};
}

Outcome span_report() {
  std::ostringstream out;
  bool pass = true;
  for (int n : {4, 5}) {
    const SpanReport s = span_dimension_report(n, n);
    pass = pass && s.rank > n;
    out << (n == 4 ? "" : "; ") << "n=" << n << ": rank " << s.rank << " from " << s.count_nu
        << " operators, p(n)=" << s.partition_count;
  }
  return {pass, out.str()};
}

bool round_trips() {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const SymFunc f = SymFunc::schur(lambda, CoefQT::parse("1 + q")) +
                        SymFunc::schur(partitions_of(n).back(), CoefQT::t());
      for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s})
        if (!(SymFunc::from_basis(b, basis_convert(f, b)) == f)) return false;
    }
  return true;
}

bool kostka_foulkes_structure() {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        const CoefQT k = kostka_foulkes(lambda, mu);
        if (!k.is_polynomial()) return false;
        for (const auto& term : k.numerator().terms())
          if (term.coef <= 0) return false;
        if (lambda == mu && !k.is_one()) return false;
        if (!dominates(lambda, mu) && !k.is_zero()) return false;
        // At q = 1 the Kostka numbers come back.
        if (!(subs(k, CoefQT(1), CoefQT::t()) == CoefQT(static_cast<long>(kostka_number(lambda, mu))))) return false;
      }
  return true;
}

// sum_mu P_mu[X] Q_mu[Y] = h_n[XY(1-q)], compared in the monomial tensor basis.
bool cauchy_kernel() {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = partitions_of(n);
    std::map<std::pair<Partition, Partition>, CoefQT> lhs, rhs;
    for (const auto& mu : parts)
      for (const auto& [a, ca] : basis_convert(hl_P(mu), Basis::m))
        for (const auto& [b, cb] : basis_convert(hl_Q(mu), Basis::m)) lhs[{a, b}] += ca * cb;
    for (const auto& rho : parts) {
      CoefQT weight = CoefQT::rational(1, zee(rho));
      for (int part : rho.parts()) weight *= CoefQT(1) - CoefQT::monomial(part);
      const auto pm = basis_convert(SymFunc::power(rho), Basis::m);
      for (const auto& [a, ca] : pm)
        for (const auto& [b, cb] : pm) rhs[{a, b}] += weight * ca * cb;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Outcome infrastructure() {
  const bool a = round_trips();
  const bool b = kostka_foulkes_structure();
  const bool c = cauchy_kernel();
  const Outcome w = suite("wmu_consistency", 6);
  std::ostringstream out;
  out << "round trips <=8: " << (a ? "ok" : "FAILED") << "; Kostka-Foulkes <=8: " << (b ? "ok" : "FAILED")
      << "; Cauchy kernel n<=5: " << (c ? "ok" : "FAILED") << "; w(0,q) displays n<=6: " << w.detail;
  return {a && b && c && w.pass, out.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"prop31", 10, prop31},
      {"cor32", 10, cor32},
      {"prop33", 30, prop33},
      {"eq12_eq16", 120, cauchy_expansions},
      {"eq10", 300, [] { return suite("hook", 6); }},
      {"thm41", 300, [] { return suite("thm41", 5); }},
      {"cor42", 300, [] { return suite("cor42", 5); }},
      {"thm43", 60, [] { return suite("thm43", 6); }},
      {"thm44", 300, [] { return suite("thm44", 5); }},
      {"ghry23", 300, [] { return suite("ghry23", 6); }},
      {"hook_expansion", 60, [] { return suite("hook_support", 8); }},
      {"delta_conjecture", 1200, delta_conjecture},
      {"llt_symmetry", 300, llt_symmetry},
      {"span_report", 300, span_report},
      {"infrastructure", 300, infrastructure},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << std::fixed << std::setprecision(2)
              << " [" << seconds << " s, limit " << c.limit_seconds << " s]";
    if (!in_time) std::cout << " runtime limit exceeded";
    if (!pass) {
      auto known = kKnownFailures.find(c.name);
      if (known != kKnownFailures.end() && in_time)
        std::cout << " (known failure: " << known->second << ")";
      else
        ++unexpected;
    }
    std::cout << std::endl;
  }
  return unexpected == 0 ? 0 : 1;
}
