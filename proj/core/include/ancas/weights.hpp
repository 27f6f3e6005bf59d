#ifndef ANCAS_WEIGHTS_HPP
#define ANCAS_WEIGHTS_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ancas/rational.hpp"

namespace ancas {

/// Rank N of the algebra A_N; weight tuples have N+1 slots.
class Rank {
 public:
  explicit Rank(int n);
  int value() const { return n_; }
  int tuple_size() const { return n_ + 1; }
  friend auto operator<=>(const Rank&, const Rank&) = default;

 private:
  int n_;
};

/// A weight written over the basis of the N fundamental dominant weights;
/// coefficients may be negative. Dominant iff all coefficients >= 0.
class LambdaWeight {
 public:
  explicit LambdaWeight(std::vector<int> coeffs);

  static LambdaWeight zero(Rank rank);
  /// The i-th fundamental dominant weight, 1 <= i <= N.
  static LambdaWeight fundamental(Rank rank, int i);

  int rank() const { return static_cast<int>(m_.size()); }
  std::span<const int> coeffs() const { return m_; }
  int operator[](int i) const { return m_[static_cast<size_t>(i)]; }

  bool dominant() const;
  bool is_zero() const;

  /// "1,0,1" (coefficients joined by commas).
  std::string str() const;

  friend auto operator<=>(const LambdaWeight&, const LambdaWeight&) = default;

 private:
  std::vector<int> m_;
};

/// A weight as an (N+1)-tuple of coordinates over the N+1 weights of the
/// defining representation. Those weights sum to zero, so coordinates are
/// defined only up to a uniform shift; the canonical gauge kept by this
/// type has min entry = 0 (hence all entries >= 0).
class MuTuple {
 public:
  /// Shifts arbitrary coordinates into the canonical gauge.
  static MuTuple from_coords(std::vector<int> coords);

  int rank() const { return static_cast<int>(a_.size()) - 1; }
  int size() const { return static_cast<int>(a_.size()); }
  std::span<const int> coords() const { return a_; }
  int operator[](int i) const { return a_[static_cast<size_t>(i)]; }

  bool sorted_descending() const;
  /// Count of strictly positive entries (canonical gauge).
  int sigma() const;
  int max_entry() const;

  std::string str() const;

  friend auto operator<=>(const MuTuple&, const MuTuple&) = default;

 private:
  MuTuple() = default;
  std::vector<int> a_;
};

/// Basis change lambda_i = mu_1 + ... + mu_i, inverted: the coordinate over
/// mu_I is the tail sum of lambda coefficients, shifted to canonical gauge.
MuTuple lambda_to_mu(const LambdaWeight& w);

/// Inverse conversion: m_i = a_i - a_{i+1}. Gauge-independent.
LambdaWeight mu_to_lambda(const MuTuple& t);

/// Repetition factor of a dominant weight: product over distinct nonzero
/// tuple values of (multiplicity)!. Throws if w is not dominant.
Int xi(const LambdaWeight& w);
Int xi(const MuTuple& dominant_sorted);

} // namespace ancas

#endif
