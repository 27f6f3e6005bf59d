#include "ancas/reps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ancas {

Rat weight_inner_product(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner product needs equal-length tuples");
  long dot = 0, sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<long>(a[i]) * b[i];
    sa += a[i];
    sb += b[i];
  }
  Rat r = Rat(dot) - Rat(sa * sb, static_cast<long>(a.size()));
  r.canonicalize();
  return r;
}

Int weyl_dim(const LambdaWeight& w) {
  if (!w.dominant())
    throw std::invalid_argument("weyl_dim expects a dominant weight");
  int n = w.rank() + 1;
  MuTuple a = lambda_to_mu(w);
  std::vector<long> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = a[i] + (n - 1 - i);
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= t[static_cast<size_t>(i)] - t[static_cast<size_t>(j)];
      den *= j - i;
    }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl_dim: non-integer product");
  return q;
}

namespace {

using Tuple = std::vector<int>;  // fixed-sum gauge during the recursion

long sum_of(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0L); }

long sumsq(const Tuple& t) {
  long s = 0;
  for (int x : t) s += static_cast<long>(x) * x;
  return s;
}

// Prefix-sum dominance with equal totals; exactly the condition that the
// difference lies in the non-negative root span.
bool majorized_by(const Tuple& top, const Tuple& t) {
  long sa = 0, sb = 0;
  for (size_t i = 0; i < top.size(); ++i) {
    sa += top[i];
    sb += t[i];
    if (sb > sa) return false;
  }
  return sa == sb;
}

// All non-increasing tuples with the same total, majorized by `top`
// (the dominant subweight set), including `top` itself.
std::vector<Tuple> subdominant_tuples(const Tuple& top) {
  int n = static_cast<int>(top.size());
  long total = sum_of(top);
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(long, int, int)> rec = [&](long rem, int mx, int slots) {
    if (slots == 0) {
      if (rem == 0) {
        Tuple t = cur;
        if (majorized_by(top, t)) out.push_back(std::move(t));
      }
      return;
    }
    long lo = (rem + slots - 1) / slots;  // parts non-increasing
    for (int v = static_cast<int>(std::min<long>(mx, rem)); v >= lo && v >= 0; --v) {
      cur.push_back(v);
      rec(rem - v, v, slots - 1);
      cur.pop_back();
    }
  };
  rec(total, top.empty() ? 0 : top[0], n);
  return out;
}

} // namespace

std::vector<OrbitalDecomposition::Entry> freudenthal(const LambdaWeight& w) {
  if (!w.dominant())
    throw std::invalid_argument("freudenthal expects a dominant weight");
  int n = w.rank() + 1;
  MuTuple a = lambda_to_mu(w);
  Tuple top(a.coords().begin(), a.coords().end());

  std::vector<Tuple> subs = subdominant_tuples(top);
  // Any weight reached by adding positive roots strictly grows the sum of
  // squares, so processing in decreasing order makes the recursion well
  // founded. Ties are Weyl-incomparable and may come in any fixed order.
  std::sort(subs.begin(), subs.end(), [](const Tuple& x, const Tuple& y) {
    long sx = sumsq(x), sy = sumsq(y);
    if (sx != sy) return sx > sy;
    return x > y;
  });

  std::vector<int> rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] = n - 1 - i;
  auto rho_shifted_sumsq = [&](const Tuple& t) {
    long s = 0;
    for (int i = 0; i < n; ++i) {
      long v = t[static_cast<size_t>(i)] + rho[static_cast<size_t>(i)];
      s += v * v;
    }
    return s;
  };
  long top_norm = rho_shifted_sumsq(top);
  long top_sumsq = sumsq(top);

  std::map<Tuple, Int> mult;
  for (size_t si = 0; si < subs.size(); ++si) {
    const Tuple& t = subs[si];
    if (si == 0) {
      mult[t] = 1;
      continue;
    }
    // numerator: 2 * sum over positive roots e_i - e_j (i < j) and k >= 1
    // of m(t + k(e_i - e_j)) * <t + k(e_i - e_j), e_i - e_j>.
    Int num = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 1;; ++k) {
          Tuple up = t;
          up[static_cast<size_t>(i)] += k;
          up[static_cast<size_t>(j)] -= k;
          if (sumsq(up) > top_sumsq) break;
          Tuple dom = up;
          std::sort(dom.begin(), dom.end(), std::greater<int>());
          auto it = mult.find(dom);
          if (it == mult.end() || it->second == 0) continue;
          long pairing = up[static_cast<size_t>(i)] - up[static_cast<size_t>(j)];
          num += it->second * (2 * pairing);
        }
      }
    }
    long den = top_norm - rho_shifted_sumsq(t);
    if (den <= 0) throw std::logic_error("freudenthal: non-positive denominator");
    Int q, r;
    Int di(den);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), di.get_mpz_t());
    if (r != 0) throw std::logic_error("freudenthal: non-integer multiplicity");
    mult[t] = q;
  }

  std::vector<OrbitalDecomposition::Entry> out;
  out.reserve(subs.size());
  for (const Tuple& t : subs) {
    Int m = mult.at(t);
    if (m == 0) continue;
    MuTuple canon = MuTuple::from_coords(t);
    out.push_back({mu_to_lambda(canon), canon, m});
  }
  return out;
}

OrbitalDecomposition orbital_decomposition(const LambdaWeight& w) {
  OrbitalDecomposition d{w, freudenthal(w)};
  return d;
}

SymExpr ch_rep(const LambdaWeight& w, int s, int jobs) {
  SymExpr out(Basis::monomial);
  for (const auto& e : freudenthal(w)) {
    SymExpr ce = ch_orbit(e.tuple, s, ChMethod::formula, jobs);
    ce *= Rat(e.multiplicity);
    out += ce;
  }
  return out;
}

CofVector cof_rep(const LambdaWeight& w, int s, int jobs) {
  return cof_extract(ch_rep(w, s, jobs), s);
}

} // namespace ancas
