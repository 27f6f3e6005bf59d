#ifndef ANCAS_EIGENPOLY_HPP
#define ANCAS_EIGENPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ancas/reps.hpp"

namespace ancas {

/// rho-shifted, zero-sum coordinates of a dominant weight: consecutive
/// differences are 1 + r_i and the entries sum to zero.
struct ThetaTuple {
  std::vector<Rat> theta;
  int rank() const { return static_cast<int>(theta.size()) - 1; }
};

ThetaTuple theta(const LambdaWeight& w);
Rat theta_power(int s, const ThetaTuple& t);
Rat theta_power(int s, const LambdaWeight& w);

/// Integer-coefficient polynomial in the rank N, with a display form used
/// in domain-error messages and audit notes.
struct NPoly {
  std::vector<long> coeffs;  // highest degree first
  std::string name;
  Int eval(long n) const;
};

/// Exact rational function of N of the shape
///   num_scale * prod(num) / (den_scale * prod(den)).
struct CoeffExpr {
  bool zero = false;
  long num_scale = 1;
  std::vector<NPoly> num;
  long den_scale = 1;
  std::vector<NPoly> den;

  Rat eval(long n) const;
  std::optional<std::string> vanishing_factor(long n) const;
};

enum class NormMode { default_norm, unit };

/// One closed-form eigenvalue polynomial family: its partition class, the
/// Theta-monomial term list, and the coefficient of every term as an exact
/// rational multiple of the single free coefficient.
struct EigenClass {
  Partition cls;
  std::string name;                    // "43" for class 4+3
  std::vector<Partition> monomials;    // Theta degree multisets; {} = constant
  int free_index = 0;
  std::vector<CoeffExpr> ratios;         // table used for evaluation
  std::vector<CoeffExpr> source_ratios;  // literal transcription of the source
  bool source_differs = false;           // true when the two tables disagree
  CoeffExpr normalization;               // free coefficient under default norm

  int order() const { return cls.sum(); }
  std::string k_name(int term_index) const;

  /// Smallest rank at which no stored denominator factor vanishes
  /// (including the default normalization's when that mode is in play).
  long n_min(NormMode mode) const;
  std::optional<std::string> vanishing_factor(long n, NormMode mode) const;
};

/// The twelve families of orders 4..7, kappa(s) per order.
const std::vector<EigenClass>& eigen_classes();
const EigenClass* find_eigen_class(const Partition& cls);

/// Evaluates the closed-form polynomial at a dominant weight. Throws
/// std::domain_error naming the vanishing factor when the rank is below
/// n_min, and std::invalid_argument for classes without a closed form.
Rat eval_closed(const Partition& cls, const LambdaWeight& w, NormMode norm);
Rat eval_closed(const EigenClass& c, const LambdaWeight& w, NormMode norm);

/// Eigenvalue via the coefficient route: scales reference_value (the value
/// at the fundamental weight with as many indices as the class has parts)
/// by the cof and dimension ratios. Works for any class with parts >= 2,
/// including orders 2 and 3. Throws std::domain_error when the reference
/// cof vanishes.
Rat eval_from_cof(const Partition& cls, const LambdaWeight& w,
                  const Rat& reference_value, int jobs = 1);

struct CoefficientAudit {
  std::string k_name;
  Partition monomial;
  Rat printed;  // literal source ratio at this N
  Rat fitted;   // exact linear solve from character data
  enum class Status { match, explained_erratum, unexplained } status;
  std::string note;
};

/// Two-tier verification of one family at one rank.
/// Tier A: cof/dim divided by the closed form is the same constant for
/// every sample weight. Tier B: the Theta-monomial coefficients recovered
/// by an exact linear solve are compared term-by-term with the source
/// table; mismatches become erratum candidates, never silent corrections.
struct VerificationReport {
  Partition cls;
  long rank_n = 0;
  bool tier_a_pass = false;
  Rat tier_a_constant;
  bool full_rank = false;
  bool consistent = false;
  std::vector<CoefficientAudit> audits;

  bool tier_b_match() const;      // every coefficient matches the source
  bool tier_b_explained() const;  // no unexplained mismatch
  std::vector<std::string> erratum_candidates() const;
};

VerificationReport verify_class(const Partition& cls, long rank_n,
                                std::span<const LambdaWeight> sample,
                                int jobs = 1);

/// Deterministic list of small dominant weights used for verification
/// sweeps; always starts with the fundamental weights.
std::vector<LambdaWeight> default_sample_weights(int rank_n, int count);

} // namespace ancas

#endif
