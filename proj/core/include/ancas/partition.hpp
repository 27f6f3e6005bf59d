#ifndef ANCAS_PARTITION_HPP
#define ANCAS_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ancas/rational.hpp"

namespace ancas {

/// An integer partition s = s_1 + ... + s_k with s_1 >= ... >= s_k >= 1,
/// stored non-increasing. The empty partition is allowed (it keys the
/// constant term of power-product expressions).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int sum() const { return sum_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  /// Multiplicity of the value v among the parts.
  int count(int v) const;

  /// "3,1" for {3,1}; "" for the empty partition.
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// All partitions of s, lexicographically decreasing. min_part bounds the
/// smallest admissible part (2 excludes ones).
std::vector<Partition> partitions_of(int s, int min_part = 1);

/// Partitions of s into exactly k parts, lexicographically decreasing.
std::vector<Partition> partitions_into_k(int s, int k);

/// Partitions of s with every part >= 2; their number is kappa(s).
std::vector<Partition> partitions_no_ones(int s);

int kappa(int s);

/// M(s_1,...,s_k) = (s_1+...+s_k)! / (s_1! ... s_k!).
Int multinomial(const Partition& p);

/// Product of factorials of multiplicities of equal parts.
Int xi(const Partition& p);

} // namespace ancas

#endif
