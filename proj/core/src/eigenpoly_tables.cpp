#include "ancas/eigenpoly.hpp"

// Coefficient tables of the twelve closed-form eigenvalue polynomial
// families (orders 4..7). Every non-free coefficient is stored as an exact
// rational function of N relative to the family's free coefficient. The
// `source_ratios` of family 43 keep the literal transcription, which drops
// the g_7(N) part of its denominators; the evaluation table restores it
// (g_43(N) = (N+1) g_7(N)). The audit machinery reports that difference.

namespace ancas {

namespace {

std::string poly_name(const std::vector<long>& coeffs) {
  std::string s = "(";
  int deg = static_cast<int>(coeffs.size()) - 1;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i, --deg) {
    long c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? "-" : "+";
    }
    long a = std::abs(c);
    if (deg == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a);
      s += "N";
      if (deg > 1) s += "^" + std::to_string(deg);
    }
  }
  s += ")";
  return s;
}

NPoly P(std::vector<long> coeffs) {
  std::string n = poly_name(coeffs);
  return NPoly{std::move(coeffs), std::move(n)};
}

NPoly L(long shift) { return P({1, shift}); }

std::vector<NPoly> lins(std::initializer_list<long> shifts) {
  std::vector<NPoly> out;
  for (long s : shifts) out.push_back(L(s));
  return out;
}

std::vector<NPoly> cat(std::vector<NPoly> a, std::vector<NPoly> b) {
  for (auto& x : b) a.push_back(std::move(x));
  return a;
}

std::vector<NPoly> cat(std::vector<NPoly> a, NPoly b) {
  a.push_back(std::move(b));
  return a;
}

// Denominator products shared across families.
std::vector<NPoly> g4() { return lins({-2, -1, 0, 1, 2, 3, 4}); }
std::vector<NPoly> g22() { return cat(g4(), P({5, 10, 11})); }
std::vector<NPoly> g5() { return lins({-3, -2, -1, 0, 1, 2, 3, 4, 5}); }
std::vector<NPoly> g6() { return lins({-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6}); }
std::vector<NPoly> g42() { return cat(g6(), P({7, 14, 47})); }
std::vector<NPoly> g222() { return cat(g6(), P({5, 10, 23})); }
std::vector<NPoly> g7() {
  return lins({-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7});
}
std::vector<NPoly> g52() { return cat(g7(), P({1, 2, -1})); }
std::vector<NPoly> g322() { return cat(g7(), P({5, 10, 11})); }

CoeffExpr ce(long num_scale, std::vector<NPoly> num, long den_scale = 1,
             std::vector<NPoly> den = {}) {
  CoeffExpr e;
  e.num_scale = num_scale;
  e.num = std::move(num);
  e.den_scale = den_scale;
  e.den = std::move(den);
  return e;
}

CoeffExpr zero() {
  CoeffExpr e;
  e.zero = true;
  return e;
}

CoeffExpr one() { return ce(1, {}); }

Partition mono(std::initializer_list<int> degs) { return Partition(degs); }

EigenClass make_class(Partition cls, std::string name,
                      std::vector<Partition> monomials, int free_index,
                      std::vector<CoeffExpr> ratios, CoeffExpr norm) {
  EigenClass c;
  c.cls = std::move(cls);
  c.name = std::move(name);
  c.monomials = std::move(monomials);
  c.free_index = free_index;
  c.ratios = std::move(ratios);
  c.source_ratios = c.ratios;
  c.normalization = std::move(norm);
  return c;
}

std::vector<EigenClass> build_classes() {
  std::vector<EigenClass> out;

  // ----- order 4 -----
  out.push_back(make_class(
      Partition{4}, "4",
      {mono({4}), mono({2, 2}), mono({3}), mono({2}), mono({})}, 4,
      {ce(720, {P({1, 2, 2})}, 1, g4()),
       ce(-720, {P({2, 4, -1})}, 1, cat(g4(), L(1))),
       zero(), zero(), one()},
      ce(1, lins({1, 1, 2, 3, 4}), 720)));

  out.push_back(make_class(
      Partition{2, 2}, "22",
      {mono({4}), mono({2, 2}), mono({3}), mono({2}), mono({})}, 4,
      {ce(-1440, {P({2, 4, -1})}, 1, g22()),
       ce(720, {P({1, 4, 0, -8, 13})}, 1, cat(g22(), L(1))),
       zero(),
       ce(-120, lins({-2, -1, 1, 1, 3, 4}), 1, g22()), one()},
      ce(1, cat(lins({1, 2, 3, 4}), P({5, 10, 11})), 720)));

  // ----- order 5 -----
  out.push_back(make_class(
      Partition{5}, "5", {mono({5}), mono({3, 2})}, 1,
      {ce(-1, {L(1), P({1, 2, 6})}, 5, {P({1, 2, -1})}), one()},
      ce(-5, {L(1), P({1, 2, -1})}, 1, lins({0, -1, -2, -3}))));

  out.push_back(make_class(
      Partition{3, 2}, "32", {mono({5}), mono({3, 2}), mono({3})}, 2,
      {ce(72, cat(lins({-1, 0, 2, 3}), P({1, 2, -1})), 1, cat(g5(), L(1))),
       ce(-12, cat(lins({-1, 0, 2, 3}), P({1, 4, 6, 4, 25})), 1,
          cat(g5(), lins({1, 1}))),
       one()},
      ce(-1, lins({1, 1, 1, 4, 5}), 12, lins({0, -1}))));

  // ----- order 6 -----
  out.push_back(make_class(
      Partition{6}, "6",
      {mono({6}), mono({4, 2}), mono({3, 3}), mono({2, 2, 2}), mono({})}, 4,
      {ce(-30240, {P({1, 4, 21, 34, 24})}, 1, g6()),
       ce(181440, cat(lins({-1, 3}), P({1, 2, 6})), 1, cat(g6(), L(1))),
       ce(30240, {P({3, 12, 7, -10, 72})}, 1, cat(g6(), L(1))),
       ce(-211680, {P({1, 2, -6})}, 1, g6()), one()},
      one()));

  out.push_back(make_class(
      Partition{3, 3}, "33",
      {mono({6}), mono({4, 2}), mono({3, 3}), mono({2, 2, 2}), mono({})}, 4,
      {ce(-3024, {P({3, 12, 7, -10, 72})}, 1, g6()),
       ce(45360, {P({1, 6, 5, -20, -20, 16, 96})}, 1,
          cat(g6(), lins({0, 1, 2}))),
       ce(1008, {P({1, 8, 0, -112, 127, 1404, 580, -2032, -3840})}, 1,
          cat(g6(), lins({0, 1, 2}))),
       ce(-12096, {P({4, 16, -35, -102, 180})}, 1, cat(g6(), lins({0, 2}))),
       one()},
      one()));

  out.push_back(make_class(
      Partition{4, 2}, "42",
      {mono({6}), mono({4, 2}), mono({3, 3}), mono({2, 2, 2}), mono({4}),
       mono({2, 2}), mono({2}), mono({})},
      7,
      {ce(483840, cat(lins({-1, 3}), P({1, 2, 6})), 1, g42()),
       ce(-60480, cat(cat(lins({-1, 3}), P({1, 2, 6})), P({1, 4, 5, 2, 120})),
          1, cat(g42(), lins({0, 1, 2}))),
       ce(-1209600, {P({1, 6, 5, -20, -20, 16, 96})}, 1,
          cat(g42(), lins({0, 1, 2}))),
       ce(60480, cat(lins({-1, 3}), P({2, 8, -25, -66, 360})), 1,
          cat(g42(), lins({0, 2}))),
       ce(5040, cat(lins({-4, -3, 1, 1, 5, 6}), P({1, 2, 2})), 1, g42()),
       ce(-5040, cat(lins({-4, -3, 1, 5, 6}), P({2, 4, -1})), 1, g42()),
       ce(-84, lins({-4, -3, -2, -1, 1, 1, 3, 4, 5, 6}), 1, g42()), one()},
      one()));

  out.push_back(make_class(
      Partition{2, 2, 2}, "222",
      {mono({6}), mono({4, 2}), mono({3, 3}), mono({2, 2, 2}), mono({4}),
       mono({2, 2}), mono({2}), mono({})},
      7,
      {ce(-483840, {P({1, 2, -6})}, 1, g222()),
       ce(51840, cat(lins({-1, 3}), P({2, 8, -25, -66, 360})), 1,
          cat(g222(), lins({0, 1, 2}))),
       ce(276480, {P({4, 16, -35, -102, 180})}, 1,
          cat(g222(), lins({0, 1, 2}))),
       ce(-8640, {P({1, 8, -7, -154, -79, 860, 1777, 1338, -3240})}, 1,
          cat(g222(), lins({0, 1, 1, 2}))),
       ce(-4320, cat(lins({-4, -3, 5, 6}), P({2, 4, -1})), 1, g222()),
       ce(2160, cat(lins({-4, -3, 5, 6}), P({1, 4, 0, -8, 13})), 1,
          cat(g222(), L(1))),
       ce(-36, cat(lins({-4, -3, -2, -1, 3, 4, 5, 6}), P({5, 10, 11})), 1,
          g222()),
       one()},
      one()));

  // ----- order 7 -----
  out.push_back(make_class(
      Partition{7}, "7",
      {mono({7}), mono({5, 2}), mono({4, 3}), mono({3, 2, 2})}, 3,
      {ce(1, {P({1, 4, 41, 74, 120})}, 14, {P({2, 4, -15})}),
       ce(-1, {P({1, 4, 17, 26, -96})}, 2, {L(1), P({2, 4, -15})}),
       ce(-1, {P({1, 4, 5, 2, 60})}, 2, {L(1), P({2, 4, -15})}), one()},
      one()));

  {
    // Family 43: the evaluation table divides by g_43(N) = (N+1) g_7(N);
    // the literal source drops the g_7 part, which the audit reports.
    EigenClass c = make_class(
        Partition{4, 3}, "43",
        {mono({7}), mono({5, 2}), mono({4, 3}), mono({3, 2, 2}), mono({3})},
        4,
        {ce(-8640, cat(lins({-1, 0, 2, 3}), P({1, 4, 5, 2, 60})), 1,
            cat(g7(), L(1))),
         ce(8640, cat(lins({-1, 3}), P({6, 36, 13, -188, -1, 470, 840})), 1,
            cat(g7(), lins({1, 1}))),
         ce(720,
            cat(lins({-1, 3}),
                P({1, 8, 16, -16, 681, 2980, -986, -8060, -8400})),
            1, cat(g7(), lins({1, 1}))),
         ce(-720, cat(lins({-1, 3}), P({2, 12, 121, 404, -957, -2690, 4200})),
            1, cat(g7(), L(1))),
         one()},
        one());
    c.source_ratios = {
        ce(-8640, cat(lins({-1, 0, 2, 3}), P({1, 4, 5, 2, 60})), 1, {L(1)}),
        ce(8640, cat(lins({-1, 3}), P({6, 36, 13, -188, -1, 470, 840})), 1,
           lins({1, 1})),
        ce(720,
           cat(lins({-1, 3}),
               P({1, 8, 16, -16, 681, 2980, -986, -8060, -8400})),
           1, lins({1, 1})),
        ce(-720, cat(lins({-1, 3}), P({2, 12, 121, 404, -957, -2690, 4200})),
           1, {L(1)}),
        one()};
    c.source_differs = true;
    out.push_back(std::move(c));
  }

  out.push_back(make_class(
      Partition{5, 2}, "52",
      {mono({7}), mono({5, 2}), mono({4, 3}), mono({3, 2, 2}), mono({5}),
       mono({3, 2})},
      5,
      {ce(-24,
          cat(lins({-3, -2, -1, 0, 2, 3, 4, 5}), P({1, 4, 17, 26, -96})), 1,
          g52()),
       ce(12,
          cat(lins({-3, -2, -1, 3, 4, 5}),
              P({1, 8, 32, 80, 515, 1676, 1648, 72, -10080})),
          5, cat(g52(), L(1))),
       ce(24,
          cat(lins({-3, -2, -1, 3, 4, 5}),
              P({6, 36, 13, -188, -1, 470, 840})),
          1, cat(g52(), L(1))),
       ce(-12,
          cat(lins({-3, -2, -1, 3, 4, 5}), P({1, 6, -6, -64, 281, 706, -840})),
          1, g52()),
       ce(-1,
          cat(lins({-5, -4, -3, -2, -1, 0, 1, 1, 2, 3, 4, 5, 6, 7}),
              P({1, 2, 6})),
          5, g52()),
       one()},
      one()));

  out.push_back(make_class(
      Partition{3, 2, 2}, "322",
      {mono({7}), mono({5, 2}), mono({4, 3}), mono({3, 2, 2}), mono({5}),
       mono({3, 2}), mono({3})},
      6,
      {ce(34560, cat(lins({-1, 0, 1, 2, 3}), P({2, 4, -15})), 1, g322()),
       ce(-8640, cat(lins({-1, 3}), P({1, 6, -6, -64, 281, 706, -840})), 1,
          g322()),
       ce(-1440, cat(lins({-1, 3}), P({2, 12, 121, 404, -957, -2690, 4200})),
          1, g322()),
       ce(720,
          cat(lins({-1, 3}),
              P({1, 8, -3, -130, 109, 1452, 5113, 6890, -4200})),
          1, cat(g322(), L(1))),
       ce(720, cat(lins({-5, -4, -1, 0, 1, 2, 3, 6, 7}), P({1, 2, -1})), 1,
          g322()),
       ce(-120, cat(lins({-5, -4, -1, 0, 2, 3, 6, 7}), P({1, 4, 6, 4, 25})),
          1, g322()),
       one()},
      one()));

  return out;
}

} // namespace

const std::vector<EigenClass>& eigen_classes() {
  static const std::vector<EigenClass> classes = build_classes();
  return classes;
}

const EigenClass* find_eigen_class(const Partition& cls) {
  for (const auto& c : eigen_classes())
    if (c.cls == cls) return &c;
  return nullptr;
}

} // namespace ancas
