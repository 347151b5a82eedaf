// Dyck paths, parking functions and the combinatorial side of the Delta
// conjecture.

#pragma once

#include <stdexcept>
#include <vector>

#include "deltaq/qfield.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

/// A Dyck path stored by its area sequence (a_1, ..., a_n).
class DyckPath {
 public:
  /// Throws std::invalid_argument unless a_1 = 0 and a_{i+1} <= a_i + 1.
  explicit DyckPath(std::vector<int> area_seq);

  const std::vector<int>& area_seq() const { return area_; }
  int size() const { return static_cast<int>(area_.size()); }
  int area() const;
  /// u_i = i - 1 - a_i (1-indexed i), the x-coordinate of row i's north step.
  int u(int i) const { return i - 1 - area_[i - 1]; }
  /// Rows i >= 2 (1-indexed) whose north step sits directly above the previous one.
  std::vector<int> rises() const;

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.area_ == b.area_; }

 private:
  std::vector<int> area_;
};

/// A Dyck path with cars 1..n, increasing up each north segment.
class ParkingFunction {
 public:
  /// Throws std::invalid_argument on an invalid labelling.
  ParkingFunction(DyckPath path, std::vector<int> cars);

  const DyckPath& path() const { return path_; }
  const std::vector<int>& cars() const { return cars_; }
  int size() const { return path_.size(); }

 private:
  DyckPath path_;
  std::vector<int> cars_;
};

std::vector<DyckPath> enumerate_paths(int n);
std::vector<ParkingFunction> enumerate_pfs(const DyckPath& path);
std::vector<ParkingFunction> enumerate_pfs(int n);

int area(const ParkingFunction& pf);
int dinv(const ParkingFunction& pf);
/// Cars read by decreasing area number, right to left within an area value.
std::vector<int> word(const ParkingFunction& pf);
/// Descent composition of the inverse of word(pf).
std::vector<int> ides(const ParkingFunction& pf);

/// Coefficients of z^0, z^1, ... of prod over rises (1 + z t^{-a_i}).
std::vector<CoefQT> haglund_factor(const DyckPath& path);

/// How a descent composition contributes a degree-n symmetric function.
enum class IdesMode {
  fundamental,  ///< Gessel fundamental quasisymmetric function
  schur,        ///< composition-indexed Schur function, straightened
};

/// Raised when an aggregate of fundamental quasisymmetric functions is not symmetric.
class NonSymmetricError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// sum over parking functions on the path of t^area q^dinv G(ides).
SymFunc llt_sum(const DyckPath& path, IdesMode mode = IdesMode::fundamental);

enum class Endpoint { generic, t_zero, q_zero };

/// Coefficient of z^{n-k} in sum_D LLT_D(X;q,t) H_D(z;t), optionally at an endpoint.
SymFunc delta_side_combinatorial(int n, int k, Endpoint endpoint, IdesMode mode = IdesMode::fundamental);
inline SymFunc delta_side_combinatorial(int n, int k, bool t_zero) {
  return delta_side_combinatorial(n, k, t_zero ? Endpoint::t_zero : Endpoint::generic);
}

/// Composition-indexed Schur function s_alpha straightened to +-s_lambda or 0.
SymFunc composition_schur(const std::vector<int>& alpha);

}  // namespace deltaq
