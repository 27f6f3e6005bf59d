#ifndef ANCAS_SYMFUN_HPP
#define ANCAS_SYMFUN_HPP

#include <map>
#include <span>
#include <string>

#include "ancas/partition.hpp"

namespace ancas {

/// Basis of a formal symmetric expression. In the monomial basis a key
/// (s_1,...,s_k) stands for the monomial-symmetric generator: the sum over
/// distinct index monomials with that exponent pattern, each distinct
/// monomial counted once. In the power-product basis the same key stands
/// for the product of power sums q(s_1)*...*q(s_k); the empty key is the
/// constant 1.
enum class Basis { monomial, power_product };

/// Exact-rational linear combination over one of the two bases. Terms are
/// kept in lexicographically decreasing key order; zero coefficients are
/// never stored.
class SymExpr {
 public:
  using Terms = std::map<Partition, Rat, std::greater<Partition>>;

  explicit SymExpr(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of key (0 if absent).
  Rat coeff(const Partition& key) const;

  void add_term(const Partition& key, const Rat& c);
  SymExpr& operator+=(const SymExpr& other);
  SymExpr& operator*=(const Rat& c);

  /// Largest total degree among keys (0 for the zero expression).
  int degree() const;
  bool homogeneous(int deg) const;

  /// "2 mu(2) + 2 mu(1,1)" / "1/2 q(2)q(2) - 1/2 q(4)".
  std::string str() const;

  friend bool operator==(const SymExpr&, const SymExpr&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

/// Expresses a monomial-symmetric generator as an exact polynomial in power
/// sums. Recursion pivots on the largest part; results are memoized and
/// independent of the number of variables.
SymExpr reduce_to_power(const Partition& p);

/// Linear extension of reduce_to_power to a whole monomial-basis expression.
SymExpr reduce_expr_to_power(const SymExpr& mono);

/// Monomial symmetric function m_p evaluated on a value tuple; every
/// distinct index monomial contributes once. Throws std::invalid_argument
/// if the tuple is shorter than the number of parts (undefined generator).
Rat eval_monomial(const Partition& p, std::span<const Rat> values);

/// Substitutes q(s) -> sum of s-th powers of the values and evaluates.
Rat eval_power_product(const SymExpr& expr, std::span<const Rat> values);

/// Consistency check of the reduction engine against the elementary Schur
/// function expansion: the complete symmetric function h_k, assembled from
/// the monomial generators of all partitions of k, must reduce to S_k(x)
/// under the substitution q(s) -> s*x_s.
struct SchurCheckResult {
  int k = 0;
  bool equal = false;
  /// x-monomial expansions keyed by the partition of exponent rows.
  SymExpr::Terms reduced_h;  // h_k after reduction and substitution
  SymExpr::Terms schur;      // S_k(x) expanded directly
};
SchurCheckResult schur_check(int k);

} // namespace ancas

#endif
