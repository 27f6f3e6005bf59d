#include "ancas/weights.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ancas {

Rank::Rank(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

LambdaWeight::LambdaWeight(std::vector<int> coeffs) : m_(std::move(coeffs)) {
  if (m_.empty()) throw std::invalid_argument("weight needs rank >= 1");
}

LambdaWeight LambdaWeight::zero(Rank rank) {
  return LambdaWeight(std::vector<int>(static_cast<size_t>(rank.value()), 0));
}

LambdaWeight LambdaWeight::fundamental(Rank rank, int i) {
  if (i < 1 || i > rank.value())
    throw std::invalid_argument("fundamental weight index out of range");
  std::vector<int> m(static_cast<size_t>(rank.value()), 0);
  m[static_cast<size_t>(i - 1)] = 1;
  return LambdaWeight(std::move(m));
}

bool LambdaWeight::dominant() const {
  return std::all_of(m_.begin(), m_.end(), [](int x) { return x >= 0; });
}

bool LambdaWeight::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](int x) { return x == 0; });
}

std::string LambdaWeight::str() const {
  std::string out;
  for (size_t i = 0; i < m_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m_[i]);
  }
  return out;
}

MuTuple MuTuple::from_coords(std::vector<int> coords) {
  if (coords.size() < 2)
    throw std::invalid_argument("mu tuple needs at least 2 slots");
  int mn = *std::min_element(coords.begin(), coords.end());
  for (int& x : coords) x -= mn;
  MuTuple t;
  t.a_ = std::move(coords);
  return t;
}

bool MuTuple::sorted_descending() const {
  return std::is_sorted(a_.begin(), a_.end(), std::greater<int>());
}

int MuTuple::sigma() const {
  return static_cast<int>(
      std::count_if(a_.begin(), a_.end(), [](int x) { return x != 0; }));
}

int MuTuple::max_entry() const {
  return *std::max_element(a_.begin(), a_.end());
}

std::string MuTuple::str() const {
  std::string out;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a_[i]);
  }
  return out;
}

MuTuple lambda_to_mu(const LambdaWeight& w) {
  int n = w.rank();
  std::vector<int> a(static_cast<size_t>(n) + 1, 0);
  int tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    tail += w[i];
    a[static_cast<size_t>(i)] = tail;
  }
  return MuTuple::from_coords(std::move(a));
}

LambdaWeight mu_to_lambda(const MuTuple& t) {
  std::vector<int> m(static_cast<size_t>(t.rank()));
  for (int i = 0; i < t.rank(); ++i) m[static_cast<size_t>(i)] = t[i] - t[i + 1];
  return LambdaWeight(std::move(m));
}

Int xi(const MuTuple& dominant_sorted) {
  if (!dominant_sorted.sorted_descending())
    throw std::invalid_argument("xi expects a sorted dominant tuple");
  Int r = 1;
  auto a = dominant_sorted.coords();
  size_t i = 0;
  while (i < a.size()) {
    size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if (a[i] != 0) r *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

Int xi(const LambdaWeight& w) {
  if (!w.dominant()) throw std::invalid_argument("xi expects a dominant weight");
  // Product of (i_j - i_{j-1})! over positions of nonzero coefficients.
  Int r = 1;
  int prev = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    if (w[i - 1] != 0) {
      r *= factorial(i - prev);
      prev = i;
    }
  }
  return r;
}

} // namespace ancas
