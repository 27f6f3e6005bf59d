#include "ancas/orbit_char.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ancas {

SymExpr omega(std::span<const int> q, int s, int rank_n) {
  int sigma = static_cast<int>(q.size());
  if (sigma < 1 || sigma > rank_n + 1)
    throw std::invalid_argument("omega: sigma out of range");
  for (int i = 0; i < sigma; ++i) {
    if (q[static_cast<size_t>(i)] <= 0)
      throw std::invalid_argument("omega: coordinates must be positive");
    if (i && q[static_cast<size_t>(i)] > q[static_cast<size_t>(i - 1)])
      throw std::invalid_argument("omega: coordinates must be non-increasing");
  }
  if (s < 1) throw std::invalid_argument("omega: order must be >= 1");

  std::vector<Rat> qv(q.begin(), q.end());
  Int denom = factorial(rank_n + 1 - sigma);
  SymExpr out(Basis::monomial);
  for (int k = 1; k <= std::min(sigma, s); ++k) {
    Int pref = factorial(rank_n + 1 - k);
    for (const auto& p : partitions_into_k(s, k)) {
      Rat c(pref * xi(p) * multinomial(p), denom);
      c.canonicalize();
      out.add_term(p, c * eval_monomial(p, qv));
    }
  }
  return out;
}

namespace {

// Pattern sums over (a chunk of) an orbit: for each exponent pattern p of
// order s, sums prod_j w[j]^{p_j} over the leading coordinates of every
// enumerated element. Products stay in int64 whenever max|value|^s fits;
// otherwise each product is taken over Int.
class PatternSummer {
 public:
  PatternSummer(const std::vector<Partition>& patterns, int min_val,
                int max_val, int s)
      : patterns_(patterns), min_val_(min_val) {
    int64_t safe_cap = int64_t{1} << 62;
    int abs_max = std::max(std::abs(min_val), std::abs(max_val));
    int64_fits_ = true;
    int64_t acc = 1;
    for (int e = 0; e < s; ++e) {
      if (std::abs(acc) > safe_cap / std::max(1, abs_max)) {
        int64_fits_ = false;
        break;
      }
      acc *= std::max(1, abs_max);
    }
    pow_.resize(static_cast<size_t>(max_val - min_val + 1));
    for (int v = min_val; v <= max_val; ++v) {
      auto& row = pow_[static_cast<size_t>(v - min_val)];
      row.assign(static_cast<size_t>(s) + 1, 1);
      for (int e = 1; e <= s; ++e)
        row[static_cast<size_t>(e)] = row[static_cast<size_t>(e - 1)] * v;
    }
    sums_.assign(patterns.size(), Int(0));
  }

  void visit(std::span<const int> w) {
    for (size_t pi = 0; pi < patterns_.size(); ++pi) {
      const Partition& p = patterns_[pi];
      if (int64_fits_) {
        int64_t prod = 1;
        for (int j = 0; j < p.size(); ++j)
          prod *= pow_[static_cast<size_t>(w[static_cast<size_t>(j)] - min_val_)]
                      [static_cast<size_t>(p[j])];
        if (prod > 0)
          sums_[pi] += static_cast<unsigned long>(prod);
        else if (prod < 0)
          sums_[pi] -= static_cast<unsigned long>(-prod);
      } else {
        Int prod = 1;
        for (int j = 0; j < p.size(); ++j)
          prod *= ipow(Int(w[static_cast<size_t>(j)]), p[j]);
        sums_[pi] += prod;
      }
    }
  }

  std::vector<Int>& sums() { return sums_; }

 private:
  const std::vector<Partition>& patterns_;
  int min_val_;
  bool int64_fits_;
  std::vector<std::vector<int64_t>> pow_;
  std::vector<Int> sums_;
};

// Distinct length-d prefixes of the multiset, lexicographically decreasing,
// each paired with the remaining multiset sorted descending.
struct Chunk {
  std::vector<int> prefix;
  std::vector<int> rest_desc;
};

std::vector<Chunk> split_orbit(const std::vector<int>& desc, int depth) {
  std::vector<Chunk> out;
  std::function<void(std::vector<int>&, std::vector<int>&, int)> rec =
      [&](std::vector<int>& prefix, std::vector<int>& rest, int d) {
        if (d == 0) {
          out.push_back({prefix, rest});
          return;
        }
        for (size_t i = 0; i < rest.size(); ++i) {
          if (i && rest[i] == rest[i - 1]) continue;  // distinct values only
          int v = rest[i];
          prefix.push_back(v);
          std::vector<int> nrest = rest;
          nrest.erase(nrest.begin() + static_cast<long>(i));
          rec(prefix, nrest, d - 1);
          prefix.pop_back();
        }
      };
  std::vector<int> prefix;
  std::vector<int> rest = desc;
  rec(prefix, rest, depth);
  return out;
}

SymExpr ch_bruteforce(const MuTuple& dom, int shift, int s, int jobs) {
  int n = dom.size();
  std::vector<int> desc(dom.coords().begin(), dom.coords().end());
  for (int& x : desc) x += shift;

  std::vector<Partition> patterns;
  for (const auto& p : partitions_of(s))
    if (p.size() <= n) patterns.push_back(p);

  int min_val = desc.back();
  int max_val = desc.front();

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = std::max(1, hw);
  int depth = 0;
  if (jobs > 1 && n >= 3) depth = (n >= 4) ? 2 : 1;

  std::vector<Chunk> chunks = split_orbit(desc, depth);
  std::vector<PatternSummer> partials;
  partials.reserve(chunks.size());
  for (size_t i = 0; i < chunks.size(); ++i)
    partials.emplace_back(patterns, min_val, max_val, s);

  auto run_chunk = [&](size_t ci) {
    const Chunk& c = chunks[ci];
    PatternSummer& acc = partials[ci];
    std::vector<int> w = c.prefix;
    w.insert(w.end(), c.rest_desc.begin(), c.rest_desc.end());
    auto mid = w.begin() + static_cast<long>(c.prefix.size());
    do {
      acc.visit(w);
    } while (std::prev_permutation(mid, w.end()));
  };

  if (jobs <= 1 || chunks.size() <= 1) {
    for (size_t i = 0; i < chunks.size(); ++i) run_chunk(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= chunks.size()) break;
        run_chunk(i);
      }
    };
    int nthreads = std::min<int>(jobs, static_cast<int>(chunks.size()));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SymExpr out(Basis::monomial);
  for (size_t pi = 0; pi < patterns.size(); ++pi) {
    Int total = 0;
    for (auto& part : partials) total += part.sums()[pi];
    out.add_term(patterns[pi], Rat(multinomial(patterns[pi]) * total));
  }
  return out;
}

} // namespace

SymExpr ch_orbit(const MuTuple& dom, int s, ChMethod method, int jobs) {
  if (!dom.sorted_descending())
    throw std::invalid_argument("ch_orbit expects the sorted dominant tuple");
  if (s < 1) throw std::invalid_argument("ch_orbit: order must be >= 1");
  int sigma = dom.sigma();
  if (sigma == 0) return SymExpr(Basis::monomial);  // zero weight
  if (method == ChMethod::formula) {
    SymExpr om = omega(dom.coords().subspan(0, static_cast<size_t>(sigma)), s,
                       dom.rank());
    om *= Rat(1, xi(dom));
    return om;
  }
  return ch_bruteforce(dom, 0, s, jobs);
}

SymExpr ch_orbit(const LambdaWeight& w, int s, ChMethod method, int jobs) {
  if (!w.dominant())
    throw std::invalid_argument("ch_orbit expects a dominant weight");
  return ch_orbit(lambda_to_mu(w), s, method, jobs);
}

SymExpr ch_orbit_shifted(const MuTuple& dom, int shift, int s, int jobs) {
  if (!dom.sorted_descending())
    throw std::invalid_argument("ch_orbit_shifted expects the sorted tuple");
  if (dom.sigma() == 0 && shift == 0) return SymExpr(Basis::monomial);
  return ch_bruteforce(dom, shift, s, jobs);
}

Rat CofVector::at(const Partition& cls) const {
  auto it = coef.find(cls);
  return it == coef.end() ? Rat(0) : it->second;
}

CofVector cof_extract(const SymExpr& mono_expr, int order) {
  if (mono_expr.basis() != Basis::monomial)
    throw std::invalid_argument("cof_extract expects a monomial-basis expression");
  if (!mono_expr.homogeneous(order))
    throw std::invalid_argument("cof_extract expects a homogeneous expression");
  CofVector out;
  out.order = order;
  SymExpr pp = reduce_expr_to_power(mono_expr);
  for (const auto& [key, c] : pp.terms()) {
    if (key.count(1) > 0) continue;  // mu(1) = 0
    if (c == 0) continue;
    out.coef.emplace(key, c);
  }
  return out;
}

} // namespace ancas
