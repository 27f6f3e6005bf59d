#ifndef ANCAS_VERIFY_HPP
#define ANCAS_VERIFY_HPP

#include <cstdint>
#include <random>

#include "ancas/eigenpoly.hpp"

namespace ancas {

/// Outcome of one verification sweep.
struct SuiteCheck {
  std::string name;
  bool pass = false;
  long checks = 0;      // individual exact comparisons performed
  std::string detail;   // first failure, or a short summary
};

/// Uniformly samples a nonzero dominant weight whose orbit stays under
/// orbit_cap: few nonzero coefficients, values in 1..coeff_max.
/// Deterministic for a given generator state across platforms.
LambdaWeight random_dominant(int rank_n, std::mt19937_64& rng, int coeff_max,
                             long orbit_cap);

/// Orbit-size formula against streamed enumeration: every dominant weight
/// with coefficients <= coeff_max for ranks <= rank_max, plus
/// random_per_rank random weights with leading coordinate <= q1_max.
SuiteCheck check_orbit_dimension_sweep(int rank_max, int coeff_max,
                                       int random_per_rank, int q1_max,
                                       std::uint64_t seed);

/// Round-trip of the worked basis-change example and its dominant
/// representative.
SuiteCheck check_conversion_example();

/// Reduction engine versus direct monomial evaluation on random rational
/// tuples, every partition of every order <= order_max.
SuiteCheck check_reduction_oracle(int order_max, int tuples_per_partition,
                                  std::uint64_t seed);

/// The ten closed-form reduction identities of orders 4 and 5, compared
/// symbol-for-symbol with the generic recursion.
SuiteCheck check_reduction_golden();

SuiteCheck check_schur(int order_max);

/// Orbital character: closed formula versus brute-force expansion, random
/// dominant weights per (rank, order) cell.
SuiteCheck check_ch_equivalence(int rank_max, int order_max,
                                int weights_per_cell, long orbit_cap,
                                std::uint64_t seed, int jobs);

/// cof_p(lambda_i) = 0 for i < #parts(p), orders <= order_max.
SuiteCheck check_cof_vanishing(int rank_max, int order_max);

/// weyl_dim(lambda_i) = binomial(N+1, i).
SuiteCheck check_base_dimensions(int rank_max);

/// Sum of multiplicity-weighted orbit sizes equals the Weyl dimension for
/// every dominant weight with leading coordinate <= q1_max.
SuiteCheck check_dimension_sums(int rank_max, int q1_max);

/// Known inner multiplicities of the rank-2 and rank-3 adjoints.
SuiteCheck check_freudenthal_anchors();

/// kappa(s) = 2, 2, 4, 4 for s = 4..7 and the class tables agree.
SuiteCheck check_kappa_bookkeeping();

/// Two-tier verification of all twelve families, three ranks each.
struct EigenVerification {
  bool tier_a_all = true;
  bool tier_b_no_unexplained = true;
  bool tier_b_all_match = true;
  std::vector<VerificationReport> reports;
};
EigenVerification check_eigen_classes(int jobs = 1);

/// Ranks at which one family is verified: three consecutive values starting
/// at max(n_min, order - 1).
std::vector<long> verification_ranks(const EigenClass& c);

} // namespace ancas

#endif
