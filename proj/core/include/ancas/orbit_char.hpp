#ifndef ANCAS_ORBIT_CHAR_HPP
#define ANCAS_ORBIT_CHAR_HPP

#include <map>

#include "ancas/orbits.hpp"
#include "ancas/symfun.hpp"

namespace ancas {

/// Closed-form orbital sum: over partitions of s into k <= sigma parts,
///   1/(N+1-sigma)! * sum_k (N+1-k)! * xi(part) * M(part) * q(part) * mu(part),
/// where q(part) is evaluated numerically on the positive coordinates and
/// mu(part) stays a formal monomial generator.
SymExpr omega(std::span<const int> q_desc_positive, int s, int rank_n);

enum class ChMethod { formula, bruteforce };

/// Power-sum character of the Weyl orbit of a dominant weight, as a
/// monomial-basis expression. The formula route divides omega by xi; the
/// brute-force route enumerates the orbit and expands each weight's s-th
/// power, bucketing exponent patterns. jobs > 1 splits the brute-force
/// enumeration; the combine is exact addition, so results are identical
/// for any job count.
SymExpr ch_orbit(const LambdaWeight& w, int s, ChMethod method, int jobs = 1);
SymExpr ch_orbit(const MuTuple& dominant_sorted, int s, ChMethod method,
                 int jobs = 1);

/// Brute-force expansion with every coordinate shifted by a uniform
/// constant first. The monomial-basis result depends on the shift; the
/// extracted cof vector must not (gauge invariance).
SymExpr ch_orbit_shifted(const MuTuple& dominant_sorted, int shift, int s,
                         int jobs = 1);

/// Coefficients of ch_s over products of power sums after imposing
/// mu(1) = 0; keyed by partitions of s with no part equal to 1.
struct CofVector {
  int order = 0;
  std::map<Partition, Rat, std::greater<Partition>> coef;

  Rat at(const Partition& cls) const;
  friend bool operator==(const CofVector&, const CofVector&) = default;
};

/// Reduces a homogeneous monomial-basis expression of degree `order` to
/// power products, drops every term containing mu(1), and collects the rest.
CofVector cof_extract(const SymExpr& mono_expr, int order);

} // namespace ancas

#endif
