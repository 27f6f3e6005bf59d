#include "ancas/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ancas {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  if (!parts_.empty() && parts_.back() < 1)
    throw std::invalid_argument("partition parts must be positive");
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::count(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int s, int min_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(mx, rem); p >= min_part; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (s >= 0) rec(s, s);
  return out;
}

std::vector<Partition> partitions_into_k(int s, int k) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(s))
    if (p.size() == k) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> partitions_no_ones(int s) { return partitions_of(s, 2); }

int kappa(int s) { return static_cast<int>(partitions_no_ones(s).size()); }

Int multinomial(const Partition& p) {
  Int r = factorial(p.sum());
  for (int x : p.parts()) r /= factorial(x);
  return r;
}

Int xi(const Partition& p) {
  Int r = 1;
  int run = 0;
  for (int i = 0; i < p.size(); ++i) {
    ++run;
    if (i + 1 == p.size() || p[i + 1] != p[i]) {
      r *= factorial(run);
      run = 0;
    }
  }
  return r;
}

} // namespace ancas
