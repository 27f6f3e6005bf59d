#include <doctest.h>

#include <random>

#include "ancas/eigenpoly.hpp"
#include "ancas/verify.hpp"

using namespace ancas;

TEST_CASE("theta coordinates") {
  ThetaTuple t0 = theta(LambdaWeight::zero(Rank(1)));
  REQUIRE(t0.theta.size() == 2);
  CHECK(t0.theta[0] == Rat(1, 2));
  CHECK(t0.theta[1] == Rat(-1, 2));

  ThetaTuple t1 = theta(LambdaWeight({1, 0}));
  CHECK(t1.theta == std::vector<Rat>{Rat(5, 3), Rat(-1, 3), Rat(-4, 3)});
  CHECK(theta_power(2, LambdaWeight({1, 0})) == Rat(14, 3));

  // zero weight reproduces the half-integer ladder (N+2)/2 - i
  for (int n = 1; n <= 8; ++n) {
    ThetaTuple t = theta(LambdaWeight::zero(Rank(n)));
    for (int i = 0; i < n + 1; ++i) {
      Rat expected(n + 2 - 2 * (i + 1), 2);
      expected.canonicalize();
      CHECK(t.theta[static_cast<size_t>(i)] == expected);
    }
  }
}

TEST_CASE("theta power sums vanish at order one") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    LambdaWeight w = random_dominant(n, rng, 4, 1L << 62);
    CHECK(theta_power(1, w) == 0);
    // consecutive differences are 1 + r_i
    ThetaTuple t = theta(w);
    for (int i = 0; i < n; ++i)
      CHECK(t.theta[static_cast<size_t>(i)] - t.theta[static_cast<size_t>(i + 1)] ==
            Rat(1 + w[i]));
  }
}

TEST_CASE("frozen theta power sums") {
  LambdaWeight w({1, 0, 0, 0, 0});
  CHECK(theta_power(2, w) == Rat(70, 3));
  CHECK(theta_power(3, w) == Rat(140, 9));
  CHECK(theta_power(4, w) == Rat(1666, 9));
}

TEST_CASE("class table shape") {
  CHECK(eigen_classes().size() == 12);
  CHECK(find_eigen_class(Partition{4}) != nullptr);
  CHECK(find_eigen_class(Partition{3, 2, 2}) != nullptr);
  CHECK(find_eigen_class(Partition{2}) == nullptr);
  CHECK(find_eigen_class(Partition{4, 4}) == nullptr);
  SuiteCheck kb = check_kappa_bookkeeping();
  CHECK(kb.pass);

  const EigenClass* c7 = find_eigen_class(Partition{7});
  REQUIRE(c7 != nullptr);
  REQUIRE(c7->monomials.size() == 4);
  CHECK(c7->monomials[0] == Partition{7});
  CHECK(c7->monomials[1] == Partition{5, 2});
  CHECK(c7->monomials[2] == Partition{4, 3});
  CHECK(c7->monomials[3] == Partition{3, 2, 2});
}

TEST_CASE("admissible rank thresholds from the stored denominators") {
  auto nmin = [](std::initializer_list<int> cls, NormMode m) {
    return find_eigen_class(Partition(cls))->n_min(m);
  };
  CHECK(nmin({4}, NormMode::unit) == 3);
  CHECK(nmin({2, 2}, NormMode::unit) == 3);
  CHECK(nmin({5}, NormMode::unit) == 1);
  CHECK(nmin({5}, NormMode::default_norm) == 4);
  CHECK(nmin({3, 2}, NormMode::unit) == 4);
  CHECK(nmin({3, 2}, NormMode::default_norm) == 4);
  CHECK(nmin({6}, NormMode::unit) == 5);
  CHECK(nmin({3, 3}, NormMode::unit) == 5);
  CHECK(nmin({4, 2}, NormMode::unit) == 5);
  CHECK(nmin({2, 2, 2}, NormMode::unit) == 5);
  CHECK(nmin({7}, NormMode::unit) == 1);
  CHECK(nmin({4, 3}, NormMode::unit) == 6);
  CHECK(nmin({5, 2}, NormMode::unit) == 6);
  CHECK(nmin({3, 2, 2}, NormMode::unit) == 6);
}

TEST_CASE("below the threshold the evaluation names the vanishing factor") {
  LambdaWeight w({1, 0});
  try {
    eval_closed(Partition{4}, w, NormMode::unit);
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("(N-2)") != std::string::npos);
  }
}

TEST_CASE("frozen closed-form values at rank 5") {
  LambdaWeight l1({1, 0, 0, 0, 0});
  LambdaWeight l2({0, 1, 0, 0, 0});
  LambdaWeight two_l1({2, 0, 0, 0, 0});
  CHECK(eval_closed(Partition{4}, l1, NormMode::unit) == Rat(10, 3));
  CHECK(eval_closed(Partition{4}, l1, NormMode::default_norm) == 84);
  CHECK(eval_closed(Partition{4}, two_l1, NormMode::default_norm) == 336);
  CHECK(eval_closed(Partition{2, 2}, l2, NormMode::default_norm) ==
        Rat(1008, 5));
  CHECK(eval_closed(Partition{5}, l1, NormMode::default_norm) == 210);
  CHECK(eval_closed(Partition{3, 2}, l2, NormMode::default_norm) == 1008);
}

TEST_CASE("default normalizations evaluate to the stored constants") {
  const EigenClass* c4 = find_eigen_class(Partition{4});
  CHECK(c4->normalization.eval(5) == Rat(126, 5));
  const EigenClass* c5 = find_eigen_class(Partition{5});
  CHECK(c5->normalization.eval(5) == Rat(-17, 2));
  const EigenClass* c32 = find_eigen_class(Partition{3, 2});
  CHECK(c32->normalization.eval(5) == -81);
  // ratio anchor: leading coefficient of the order-5 family
  CHECK(c5->ratios[0].eval(4) == Rat(-30, 23));
}

TEST_CASE("unsupported classes are rejected") {
  LambdaWeight w({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(eval_closed(Partition{2}, w, NormMode::unit),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_closed(Partition{8}, w, NormMode::unit),
                  std::invalid_argument);
}

TEST_CASE("coefficient route") {
  // at the reference weight the reference value is returned untouched
  LambdaWeight l2({0, 1, 0, 0});
  CHECK(eval_from_cof(Partition{2, 2}, l2, Rat(7, 3)) == Rat(7, 3));

  // order 2 on the rank-2 adjoint relative to unit reference
  CHECK(eval_from_cof(Partition{2}, LambdaWeight({1, 1}), 1) == Rat(9, 4));

  // a vanishing numerator cof is a value, not an error
  CHECK(eval_from_cof(Partition{2, 2}, LambdaWeight({1, 0, 0}), 1) == 0);

  // degenerate reference: a two-part class has no reference weight at rank 1
  CHECK_THROWS_AS(eval_from_cof(Partition{2, 2}, LambdaWeight({1}), 1),
                  std::domain_error);

  // agreement with the closed form across a few weights and classes
  for (const auto& cls : {Partition{4}, Partition{2, 2}}) {
    const EigenClass* c = find_eigen_class(cls);
    LambdaWeight ref = LambdaWeight::fundamental(Rank(5), cls.size());
    Rat reference = eval_closed(*c, ref, NormMode::default_norm);
    for (const auto& w : default_sample_weights(5, 6)) {
      CAPTURE(cls.str());
      CAPTURE(w.str());
      CHECK(eval_from_cof(cls, w, reference) ==
            eval_closed(*c, w, NormMode::default_norm));
    }
  }
}

TEST_CASE("two-tier verification, frozen constants") {
  auto run = [](std::initializer_list<int> cls, long n) {
    Partition p(cls);
    const EigenClass* c = find_eigen_class(p);
    REQUIRE(c != nullptr);
    int want = std::max<int>(8, static_cast<int>(c->monomials.size()) + 3);
    auto sample = default_sample_weights(static_cast<int>(n), want);
    return verify_class(p, n, sample, 2);
  };

  VerificationReport r4 = run({4}, 5);
  CHECK(r4.tier_a_pass);
  CHECK(r4.tier_a_constant == Rat(1, 20));
  CHECK(r4.full_rank);
  CHECK(r4.consistent);
  CHECK(r4.tier_b_match());

  VerificationReport r22 = run({2, 2}, 4);
  CHECK(r22.tier_a_pass);
  CHECK(r22.tier_a_constant == Rat(131, 240));
  CHECK(r22.tier_b_match());

  VerificationReport r6 = run({6}, 6);
  CHECK(r6.tier_a_pass);
  CHECK(r6.tier_a_constant == Rat(-1, 36));
  CHECK(r6.tier_b_match());

  VerificationReport r7 = run({7}, 7);
  CHECK(r7.tier_a_pass);
  CHECK(r7.tier_a_constant == Rat(37, 45045));
  CHECK(r7.tier_b_match());

  VerificationReport r322 = run({3, 2, 2}, 8);
  CHECK(r322.tier_a_pass);
  CHECK(r322.tier_a_constant == Rat(1233, 7040));
  CHECK(r322.tier_b_match());
}

TEST_CASE("family 43 audit flags the transcription defect and explains it") {
  Partition p{4, 3};
  const EigenClass* c = find_eigen_class(p);
  REQUIRE(c != nullptr);
  CHECK(c->source_differs);
  VerificationReport r = verify_class(p, 7, default_sample_weights(7, 9), 2);
  CHECK(r.tier_a_pass);                 // the corrected table is proportional
  CHECK(r.tier_a_constant == Rat(4, 405));
  CHECK_FALSE(r.tier_b_match());        // the literal table is not
  CHECK(r.tier_b_explained());          // and the difference is the g_7 factor
  auto errata = r.erratum_candidates();
  REQUIRE(errata.size() == 4);
  for (const auto& line : errata) CHECK(line.find("g_7") != std::string::npos);
  CHECK(errata[0].find("k_43(1,N)") != std::string::npos);
}

TEST_CASE("omitted coefficients fit to exactly zero") {
  // the order-4 families list no Theta(3) or Theta(2) coefficients; the
  // exact fit must return zero for them rather than something small
  VerificationReport r = verify_class(Partition{4}, 5,
                                      default_sample_weights(5, 8), 1);
  REQUIRE(r.audits.size() == 5);
  CHECK(r.audits[2].fitted == 0);
  CHECK(r.audits[3].fitted == 0);
  CHECK(r.audits[2].status == CoefficientAudit::Status::match);
}

TEST_CASE("verification plan covers three admissible ranks per class") {
  for (const auto& c : eigen_classes()) {
    auto ranks = verification_ranks(c);
    REQUIRE(ranks.size() == 3);
    for (long n : ranks) {
      CHECK(n >= c.n_min(NormMode::unit));
      CHECK(n >= c.order() - 1);
    }
  }
}

TEST_CASE("sample weight lists are deterministic and dominant") {
  auto s1 = default_sample_weights(5, 10);
  auto s2 = default_sample_weights(5, 10);
  CHECK(s1 == s2);
  CHECK(s1.size() == 10);
  for (const auto& w : s1) CHECK(w.dominant());
  CHECK(s1[0] == LambdaWeight::fundamental(Rank(5), 1));
}
