#include "ancas/orbits.hpp"

#include <stdexcept>

namespace ancas {

Int orbit_dimension(const LambdaWeight& w) {
  if (!w.dominant())
    throw std::invalid_argument("orbit_dimension expects a dominant weight");
  int i_sigma = 0;
  for (int i = w.rank(); i >= 1; --i) {
    if (w[i - 1] != 0) {
      i_sigma = i;
      break;
    }
  }
  if (i_sigma == 0) return 1;
  int n1 = w.rank() + 1;
  return factorial(n1) / (xi(w) * factorial(n1 - i_sigma));
}

MuTuple sorted_descending(const MuTuple& t) {
  std::vector<int> a(t.coords().begin(), t.coords().end());
  std::sort(a.begin(), a.end(), std::greater<int>());
  return MuTuple::from_coords(std::move(a));
}

LambdaWeight dominant_representative(const MuTuple& t) {
  return mu_to_lambda(sorted_descending(t));
}

Orbit::Orbit(const LambdaWeight& dominant)
    : dominant_(lambda_to_mu(dominant)) {
  if (!dominant.dominant())
    throw std::invalid_argument("orbit requires a dominant weight");
}

Orbit::Orbit(MuTuple dominant_sorted) : dominant_(std::move(dominant_sorted)) {
  if (!dominant_.sorted_descending())
    throw std::invalid_argument("orbit requires the sorted dominant tuple");
}

Int Orbit::size() const { return orbit_dimension(mu_to_lambda(dominant_)); }

std::vector<MuTuple> Orbit::elements(std::size_t limit) const {
  std::vector<MuTuple> out;
  std::vector<int> buf(dominant_.coords().begin(), dominant_.coords().end());
  do {
    if (out.size() >= limit) break;
    out.push_back(MuTuple::from_coords(buf));
  } while (std::prev_permutation(buf.begin(), buf.end()));
  return out;
}

} // namespace ancas
