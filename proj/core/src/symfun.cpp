#include "ancas/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace ancas {

Rat SymExpr::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymExpr::add_term(const Partition& key, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& other) {
  if (basis_ != other.basis_)
    throw std::invalid_argument("adding expressions over different bases");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

SymExpr& SymExpr::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

int SymExpr::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.sum());
  return d;
}

bool SymExpr::homogeneous(int deg) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [deg](const auto& t) { return t.first.sum() == deg; });
}

std::string SymExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || k.empty()) out += to_string(a) + " ";
    if (basis_ == Basis::monomial) {
      out += "mu(" + k.str() + ")";
    } else {
      std::string prod;
      for (int s : k.parts()) prod += "q(" + std::to_string(s) + ")";
      out += prod;
    }
  }
  return out;
}

namespace {

// p_r * m_rest re-expands over monomial generators as
//   (mult_rest(r)+1) m_{rest+{r}}
//   + sum over distinct v in rest of (mult_rest(v+r)+1) m_{rest with v->v+r}.
// Solving for the first term drives the recursion; every generator on the
// right has fewer parts than the target.
class ReductionCache {
 public:
  SymExpr get(const Partition& p);

 private:
  std::mutex mu_;
  std::map<Partition, SymExpr> cache_;
};

} // namespace

static SymExpr multiply_power_sum(const SymExpr& pp, int r) {
  SymExpr out(Basis::power_product);
  for (const auto& [k, c] : pp.terms()) {
    std::vector<int> parts(k.parts().begin(), k.parts().end());
    parts.push_back(r);
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

SymExpr reduce_to_power(const Partition& p) {
  static ReductionCache cache;
  return cache.get(p);
}

namespace {

SymExpr compute_reduction(const Partition& p) {
  if (p.empty()) {
    SymExpr one(Basis::power_product);
    one.add_term(Partition{}, 1);
    return one;
  }
  if (p.size() == 1) {
    SymExpr out(Basis::power_product);
    out.add_term(p, 1);
    return out;
  }
  int r = p[0];
  std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
  Partition prest(rest);

  SymExpr acc = multiply_power_sum(reduce_to_power(prest), r);

  std::set<int, std::greater<int>> distinct(rest.begin(), rest.end());
  for (int v : distinct) {
    std::vector<int> merged = rest;
    merged.erase(std::find(merged.begin(), merged.end(), v));
    merged.push_back(v + r);
    Partition pm(std::move(merged));
    int coef = prest.count(v + r) + 1;
    SymExpr term = reduce_to_power(pm);
    term *= Rat(-coef);
    acc += term;
  }
  acc *= Rat(1, prest.count(r) + 1);
  return acc;
}

SymExpr ReductionCache::get(const Partition& p) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
  }
  // Computed outside the lock; recursive calls re-enter get(). Identical
  // values may race to insert, which is benign.
  SymExpr r = compute_reduction(p);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(p, r);
  return r;
}

} // namespace

SymExpr reduce_expr_to_power(const SymExpr& mono) {
  if (mono.basis() != Basis::monomial)
    throw std::invalid_argument("reduce_expr_to_power expects monomial basis");
  SymExpr out(Basis::power_product);
  for (const auto& [k, c] : mono.terms()) {
    SymExpr red = reduce_to_power(k);
    red *= c;
    out += red;
  }
  return out;
}

Rat eval_monomial(const Partition& p, std::span<const Rat> values) {
  if (static_cast<int>(values.size()) < p.size())
    throw std::invalid_argument(
        "monomial generator undefined: tuple shorter than part count");
  if (p.empty()) return 1;
  // Group equal parts, then sum over choices of disjoint index subsets.
  std::vector<std::pair<int, int>> groups;  // (value, multiplicity), desc
  for (int i = 0; i < p.size();) {
    int j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    groups.emplace_back(p[i], j - i);
    i = j;
  }
  int n = static_cast<int>(values.size());
  Rat total = 0;
  std::vector<int> avail(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i;

  std::function<void(size_t, std::vector<int>&, const Rat&)> rec =
      [&](size_t gi, std::vector<int>& pool, const Rat& acc) {
        if (gi == groups.size()) {
          total += acc;
          return;
        }
        auto [val, mult] = groups[gi];
        int m = static_cast<int>(pool.size());
        if (mult > m) return;
        std::vector<int> idx(static_cast<size_t>(mult));
        for (int i = 0; i < mult; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
          Rat prod = acc;
          for (int i : idx) prod *= rpow(values[static_cast<size_t>(pool[static_cast<size_t>(i)])], val);
          std::vector<int> rest;
          rest.reserve(pool.size() - idx.size());
          size_t t = 0;
          for (int i = 0; i < m; ++i) {
            if (t < idx.size() && idx[t] == i) {
              ++t;
            } else {
              rest.push_back(pool[static_cast<size_t>(i)]);
            }
          }
          rec(gi + 1, rest, prod);
          // next combination
          int pos = mult - 1;
          while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - mult + pos) --pos;
          if (pos < 0) break;
          ++idx[static_cast<size_t>(pos)];
          for (int i = pos + 1; i < mult; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
      };
  rec(0, avail, Rat(1));
  return total;
}

Rat eval_power_product(const SymExpr& expr, std::span<const Rat> values) {
  if (expr.basis() != Basis::power_product)
    throw std::invalid_argument("eval_power_product expects power-product basis");
  // Power sums appearing in the expression, computed once.
  std::map<int, Rat> psum;
  for (const auto& [k, c] : expr.terms())
    for (int s : k.parts()) psum.emplace(s, 0);
  for (auto& [s, v] : psum)
    for (const Rat& x : values) v += rpow(x, s);
  Rat total = 0;
  for (const auto& [k, c] : expr.terms()) {
    Rat t = c;
    for (int s : k.parts()) t *= psum.at(s);
    total += t;
  }
  return total;
}

SchurCheckResult schur_check(int k) {
  if (k < 1) throw std::invalid_argument("schur_check needs k >= 1");
  SchurCheckResult res;
  res.k = k;
  // h_k = sum over all partitions of k of the monomial generator; reduce to
  // power products, then substitute q(s) -> s * x_s. An x-monomial
  // x_1^{e_1} x_2^{e_2}... is keyed by the partition with e_j copies of j.
  SymExpr h(Basis::monomial);
  for (const auto& p : partitions_of(k)) h.add_term(p, 1);
  SymExpr red = reduce_expr_to_power(h);
  for (const auto& [key, c] : red.terms()) {
    Rat scaled = c;
    for (int s : key.parts()) scaled *= s;
    if (scaled == 0) continue;
    auto [it, inserted] = res.reduced_h.emplace(key, scaled);
    if (!inserted) {
      it->second += scaled;
      if (it->second == 0) res.reduced_h.erase(it);
    }
  }
  // S_k(x) = sum over partitions of k of prod_j x_j^{e_j} / e_j!.
  for (const auto& p : partitions_of(k)) {
    Rat c = 1;
    for (int i = 0; i < p.size();) {
      int j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      c /= Rat(factorial(j - i));
      i = j;
    }
    res.schur.emplace(p, c);
  }
  res.equal = res.reduced_h == res.schur;
  return res;
}

} // namespace ancas
