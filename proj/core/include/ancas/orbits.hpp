#ifndef ANCAS_ORBITS_HPP
#define ANCAS_ORBITS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "ancas/weights.hpp"

namespace ancas {

/// Number of weights in the Weyl orbit of a dominant weight:
/// (N+1)! / (xi(w) * (N+1-i_sigma)!), i_sigma the largest index with a
/// nonzero coefficient. The zero weight has a one-element orbit.
Int orbit_dimension(const LambdaWeight& w);

/// Sorts the coordinates descending and converts back to the lambda basis.
/// Idempotent; the result is always dominant.
LambdaWeight dominant_representative(const MuTuple& t);

/// Sorted-descending canonical tuple of the orbit containing t.
MuTuple sorted_descending(const MuTuple& t);

/// A Weyl orbit of A_N, realized as the distinct permutations of the
/// dominant coordinate tuple. Elements are streamed, never materialized,
/// in lexicographically decreasing order.
class Orbit {
 public:
  explicit Orbit(const LambdaWeight& dominant);
  explicit Orbit(MuTuple dominant_sorted);

  const MuTuple& dominant() const { return dominant_; }
  Int size() const;

  /// Calls f(std::span<const int>) for every element, lex-decreasing.
  /// The span is only valid during the call.
  template <class F>
  void for_each(F&& f) const {
    std::vector<int> buf(dominant_.coords().begin(), dominant_.coords().end());
    do {
      f(std::span<const int>(buf));
    } while (std::prev_permutation(buf.begin(), buf.end()));
  }

  /// Materializes at most `limit` leading elements (tests, --list).
  std::vector<MuTuple> elements(std::size_t limit = SIZE_MAX) const;

 private:
  MuTuple dominant_;
};

} // namespace ancas

#endif
