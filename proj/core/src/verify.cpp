#include "ancas/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ancas {

namespace {

// Modulo draw; std::uniform_int_distribution is implementation-defined and
// would break cross-platform reproducibility of seeded sweeps.
long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

LambdaWeight random_dominant(int rank_n, std::mt19937_64& rng, int coeff_max,
                             long orbit_cap) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<int> m(static_cast<size_t>(rank_n), 0);
    int nonzero = static_cast<int>(pick(rng, 1, std::min(6, rank_n)));
    for (int t = 0; t < nonzero; ++t) {
      int pos = static_cast<int>(pick(rng, 0, rank_n - 1));
      m[static_cast<size_t>(pos)] = static_cast<int>(pick(rng, 1, coeff_max));
    }
    LambdaWeight w(std::move(m));
    if (w.is_zero()) continue;
    if (orbit_dimension(w) <= orbit_cap) return w;
  }
  return LambdaWeight::fundamental(Rank(rank_n), 1);
}

namespace {

// Enumerates dominant weights with every coefficient in 0..coeff_max.
template <class F>
void for_each_dominant(int rank_n, int coeff_max, F&& f) {
  std::vector<int> m(static_cast<size_t>(rank_n), 0);
  for (;;) {
    f(LambdaWeight(m));
    int i = 0;
    while (i < rank_n && m[static_cast<size_t>(i)] == coeff_max) {
      m[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == rank_n) break;
    ++m[static_cast<size_t>(i)];
  }
}

// Enumerates canonical non-increasing coordinate tuples with first entry
// <= q1_max (the dominant weights with bounded leading coordinate).
template <class F>
void for_each_dominant_tuple(int rank_n, int q1_max, F&& f) {
  int n = rank_n + 1;
  std::vector<int> t(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      if (t.back() == 0) f(MuTuple::from_coords(t));
      return;
    }
    for (int v = mx; v >= 0; --v) {
      t[static_cast<size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, q1_max);
}

} // namespace

SuiteCheck check_orbit_dimension_sweep(int rank_max, int coeff_max,
                                       int random_per_rank, int q1_max,
                                       std::uint64_t seed) {
  SuiteCheck res{"orbit dimension formula vs enumeration", true, 0, ""};
  auto check_one = [&](const LambdaWeight& w) {
    Int formula = orbit_dimension(w);
    Int counted = 0;
    Orbit(w).for_each([&](std::span<const int>) { counted += 1; });
    ++res.checks;
    if (formula != counted && res.pass) {
      res.pass = false;
      res.detail = "mismatch at weight (" + w.str() + "): formula " +
                   formula.get_str() + " vs count " + counted.get_str();
    }
  };
  for (int n = 1; n <= rank_max; ++n)
    for_each_dominant(n, coeff_max, check_one);
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= rank_max; ++n) {
    for (int t = 0; t < random_per_rank; ++t) {
      // leading coordinate = sum of coefficients; rejection keeps it bounded
      LambdaWeight w = random_dominant(n, rng, q1_max, 1L << 62);
      int q1 = 0;
      for (int c : w.coeffs()) q1 += c;
      if (q1 > q1_max) {
        --t;
        continue;
      }
      check_one(w);
    }
  }
  return res;
}

SuiteCheck check_conversion_example() {
  SuiteCheck res{"worked basis-change example", true, 0, ""};
  LambdaWeight w({-1, 2, -1, 1, 1, -1, 1});
  MuTuple t = lambda_to_mu(w);
  ++res.checks;
  if (t != MuTuple::from_coords({2, 3, 1, 2, 1, 0, 1, 0})) {
    res.pass = false;
    res.detail = "conversion gave (" + t.str() + ")";
    return res;
  }
  ++res.checks;
  if (mu_to_lambda(t) != w) {
    res.pass = false;
    res.detail = "inverse conversion failed";
    return res;
  }
  LambdaWeight dom = dominant_representative(t);
  LambdaWeight expect({1, 0, 1, 0, 0, 1, 0});
  ++res.checks;
  if (dom != expect) {
    res.pass = false;
    res.detail = "dominant representative gave (" + dom.str() + ")";
    return res;
  }
  ++res.checks;
  if (orbit_dimension(expect) != 1680) {
    res.pass = false;
    res.detail = "orbit dimension of the representative is not 1680";
  }
  return res;
}

SuiteCheck check_reduction_oracle(int order_max, int tuples_per_partition,
                                  std::uint64_t seed) {
  SuiteCheck res{"reduction vs direct monomial evaluation", true, 0, ""};
  std::mt19937_64 rng(seed);
  for (int s = 1; s <= order_max; ++s) {
    for (const auto& p : partitions_of(s)) {
      SymExpr red = reduce_to_power(p);
      if (!red.homogeneous(s)) {
        res.pass = false;
        res.detail = "inhomogeneous reduction for (" + p.str() + ")";
      }
      for (int t = 0; t < tuples_per_partition; ++t) {
        int len = static_cast<int>(pick(rng, std::max(3L, long(p.size())), 9));
        std::vector<Rat> vals;
        vals.reserve(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
          Rat v(pick(rng, -6, 6), pick(rng, 1, 4));
          v.canonicalize();
          vals.push_back(std::move(v));
        }
        ++res.checks;
        if (eval_power_product(red, vals) != eval_monomial(p, vals) &&
            res.pass) {
          res.pass = false;
          res.detail = "oracle mismatch for partition (" + p.str() + ")";
        }
      }
    }
  }
  return res;
}

namespace {

SymExpr pp(std::initializer_list<std::pair<Partition, Rat>> terms) {
  SymExpr e(Basis::power_product);
  for (const auto& [k, c] : terms) e.add_term(k, c);
  return e;
}

} // namespace

SuiteCheck check_reduction_golden() {
  SuiteCheck res{"closed reduction rules of orders 4 and 5", true, 0, ""};
  const std::vector<std::pair<Partition, SymExpr>> golden = {
      {{2, 2}, pp({{{2, 2}, Rat(1, 2)}, {{4}, Rat(-1, 2)}})},
      {{3, 1}, pp({{{3, 1}, 1}, {{4}, -1}})},
      {{2, 1, 1},
       pp({{{2, 1, 1}, Rat(1, 2)}, {{2, 2}, Rat(-1, 2)}, {{3, 1}, -1}, {{4}, 1}})},
      {{1, 1, 1, 1},
       pp({{{1, 1, 1, 1}, Rat(1, 24)},
           {{2, 1, 1}, Rat(-1, 4)},
           {{2, 2}, Rat(1, 8)},
           {{3, 1}, Rat(1, 3)},
           {{4}, Rat(-1, 4)}})},
      {{4, 1}, pp({{{4, 1}, 1}, {{5}, -1}})},
      {{3, 2}, pp({{{3, 2}, 1}, {{5}, -1}})},
      {{3, 1, 1},
       pp({{{3, 1, 1}, Rat(1, 2)}, {{3, 2}, Rat(-1, 2)}, {{4, 1}, -1}, {{5}, 1}})},
      {{2, 2, 1},
       pp({{{2, 2, 1}, Rat(1, 2)}, {{3, 2}, -1}, {{4, 1}, Rat(-1, 2)}, {{5}, 1}})},
      {{2, 1, 1, 1},
       pp({{{2, 1, 1, 1}, Rat(1, 6)},
           {{2, 2, 1}, Rat(-1, 2)},
           {{3, 1, 1}, Rat(-1, 2)},
           {{3, 2}, Rat(5, 6)},
           {{4, 1}, 1},
           {{5}, -1}})},
      {{1, 1, 1, 1, 1},
       pp({{{1, 1, 1, 1, 1}, Rat(1, 120)},
           {{2, 1, 1, 1}, Rat(-1, 12)},
           {{2, 2, 1}, Rat(1, 8)},
           {{3, 1, 1}, Rat(1, 6)},
           {{3, 2}, Rat(-1, 6)},
           {{4, 1}, Rat(-1, 4)},
           {{5}, Rat(1, 5)}})},
  };
  for (const auto& [p, expect] : golden) {
    ++res.checks;
    if (reduce_to_power(p) != expect && res.pass) {
      res.pass = false;
      res.detail = "generic recursion deviates from the printed rule for (" +
                   p.str() + ")";
    }
  }
  return res;
}

SuiteCheck check_schur(int order_max) {
  SuiteCheck res{"complete symmetric vs elementary Schur expansion", true, 0,
                 ""};
  for (int k = 1; k <= order_max; ++k) {
    ++res.checks;
    if (!schur_check(k).equal && res.pass) {
      res.pass = false;
      res.detail = "h_k != S_k at k=" + std::to_string(k);
    }
  }
  return res;
}

SuiteCheck check_ch_equivalence(int rank_max, int order_max,
                                int weights_per_cell, long orbit_cap,
                                std::uint64_t seed, int jobs) {
  SuiteCheck res{"orbital character: formula vs brute force", true, 0, ""};
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= rank_max; ++n) {
    for (int s = 2; s <= order_max; ++s) {
      for (int t = 0; t < weights_per_cell; ++t) {
        LambdaWeight w = random_dominant(n, rng, 3, orbit_cap);
        SymExpr a = ch_orbit(w, s, ChMethod::formula);
        SymExpr b = ch_orbit(w, s, ChMethod::bruteforce, jobs);
        ++res.checks;
        if (a != b && res.pass) {
          res.pass = false;
          res.detail = "mismatch at N=" + std::to_string(n) +
                       " s=" + std::to_string(s) + " weight (" + w.str() + ")";
        }
      }
    }
  }
  return res;
}

SuiteCheck check_cof_vanishing(int rank_max, int order_max) {
  SuiteCheck res{"cof vanishing below the class part count", true, 0, ""};
  for (int n = 2; n <= rank_max; ++n) {
    for (int s = 2; s <= order_max; ++s) {
      auto classes = partitions_no_ones(s);
      int max_parts = 0;
      for (const auto& c : classes) max_parts = std::max(max_parts, c.size());
      for (int i = 1; i < max_parts && i <= n; ++i) {
        CofVector cof = cof_rep(LambdaWeight::fundamental(Rank(n), i), s);
        for (const auto& cls : classes) {
          if (i >= cls.size()) continue;
          ++res.checks;
          if (cof.at(cls) != 0 && res.pass) {
            res.pass = false;
            res.detail = "cof_" + cls.str() + " at fundamental " +
                         std::to_string(i) + ", N=" + std::to_string(n) +
                         " is " + to_string(cof.at(cls));
          }
        }
      }
    }
  }
  return res;
}

SuiteCheck check_base_dimensions(int rank_max) {
  SuiteCheck res{"fundamental representation dimensions", true, 0, ""};
  for (int n = 1; n <= rank_max; ++n) {
    for (int i = 1; i <= n; ++i) {
      ++res.checks;
      if (weyl_dim(LambdaWeight::fundamental(Rank(n), i)) !=
          binomial(n + 1, i)) {
        res.pass = false;
        res.detail =
            "dim at N=" + std::to_string(n) + " i=" + std::to_string(i);
      }
    }
  }
  return res;
}

SuiteCheck check_dimension_sums(int rank_max, int q1_max) {
  SuiteCheck res{"multiplicity-weighted orbit sizes vs Weyl dimension", true,
                 0, ""};
  for (int n = 1; n <= rank_max; ++n) {
    for_each_dominant_tuple(n, q1_max, [&](const MuTuple& t) {
      LambdaWeight w = mu_to_lambda(t);
      Int total = 0;
      for (const auto& e : freudenthal(w))
        total += e.multiplicity * orbit_dimension(e.weight);
      ++res.checks;
      if (total != weyl_dim(w) && res.pass) {
        res.pass = false;
        res.detail = "decomposition of (" + w.str() + ") at N=" +
                     std::to_string(n) + " sums to " + total.get_str();
      }
    });
  }
  return res;
}

SuiteCheck check_freudenthal_anchors() {
  SuiteCheck res{"adjoint zero-weight multiplicities", true, 0, ""};
  auto zero_mult = [](const LambdaWeight& w) -> Int {
    for (const auto& e : freudenthal(w))
      if (e.weight.is_zero()) return e.multiplicity;
    return 0;
  };
  ++res.checks;
  if (zero_mult(LambdaWeight({1, 1})) != 2) {
    res.pass = false;
    res.detail = "rank-2 adjoint zero-weight multiplicity";
    return res;
  }
  ++res.checks;
  if (zero_mult(LambdaWeight({1, 0, 1})) != 3) {
    res.pass = false;
    res.detail = "rank-3 adjoint zero-weight multiplicity";
  }
  return res;
}

SuiteCheck check_kappa_bookkeeping() {
  SuiteCheck res{"class counts per order", true, 0, ""};
  const std::vector<std::pair<int, int>> expected = {{4, 2}, {5, 2}, {6, 4},
                                                     {7, 4}};
  for (auto [s, k] : expected) {
    ++res.checks;
    if (kappa(s) != k) {
      res.pass = false;
      res.detail = "kappa(" + std::to_string(s) + ") != " + std::to_string(k);
      return res;
    }
    int have = 0;
    for (const auto& c : eigen_classes())
      if (c.order() == s) ++have;
    ++res.checks;
    if (have != k) {
      res.pass = false;
      res.detail = "table holds " + std::to_string(have) + " classes of order " +
                   std::to_string(s);
      return res;
    }
  }
  // every class key is a partition with parts >= 2 matching its order
  for (const auto& c : eigen_classes()) {
    ++res.checks;
    if (c.cls.count(1) != 0 || c.cls.sum() != c.order()) {
      res.pass = false;
      res.detail = "malformed class " + c.cls.str();
    }
  }
  return res;
}

std::vector<long> verification_ranks(const EigenClass& c) {
  long base = std::max<long>(c.n_min(NormMode::unit), c.order() - 1);
  return {base, base + 1, base + 2};
}

EigenVerification check_eigen_classes(int jobs) {
  EigenVerification out;
  for (const auto& c : eigen_classes()) {
    for (long n : verification_ranks(c)) {
      int want = std::max<int>(8, static_cast<int>(c.monomials.size()) + 3);
      std::vector<LambdaWeight> sample =
          default_sample_weights(static_cast<int>(n), want);
      VerificationReport rep = verify_class(c.cls, n, sample, jobs);
      out.tier_a_all = out.tier_a_all && rep.tier_a_pass;
      out.tier_b_no_unexplained =
          out.tier_b_no_unexplained && rep.tier_b_explained() &&
          rep.full_rank && rep.consistent;
      out.tier_b_all_match = out.tier_b_all_match && rep.tier_b_match();
      out.reports.push_back(std::move(rep));
    }
  }
  return out;
}

} // namespace ancas
