#include "qsymkit/unimodal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "qsymkit/error.hpp"

namespace qsym::unimodal {

namespace {

// Interior of block i as a mask: positions a..b-1 where [a,b] is the block.
std::vector<SubsetMask> block_interiors(const Composition& alpha) {
  std::vector<SubsetMask> r;
  int start = 1;
  for (int p : alpha.parts()) {
    int end = start + p - 1;
    SubsetMask m = 0;
    for (int k = start; k < end; ++k) m |= mask_bit(k);
    r.push_back(m);
    start = end + 1;
  }
  return r;
}

bool is_prefix_of(SubsetMask part, SubsetMask whole) {
  // part is {first k elements of whole} for some k.
  if (part & ~whole) return false;
  SubsetMask rest = whole & ~part;
  if (!part || !rest) return true;
  return (31 - __builtin_clz(part)) < __builtin_ctz(rest);
}

}  // namespace

bool is_alpha_unimodal(SubsetMask s, const Composition& alpha) {
  if (alpha.size() > 0 && (s & ~full_mask(alpha.size() - 1)))
    throw InvalidArgument("unimodal set must lie in [n-1]");
  for (SubsetMask interior : block_interiors(alpha))
    if (!is_prefix_of(s & interior, interior)) return false;
  return true;
}

bool is_alpha_unimodal_local(SubsetMask s, const Composition& alpha) {
  SubsetMask set = alpha.set_mask();
  for (int k : mask_elements(s & ~set)) {
    if (k == 1) continue;
    if (!mask_has(s, k - 1) && !mask_has(set, k - 1)) return false;
  }
  return true;
}

std::vector<SubsetMask> enumerate_unimodal(const Composition& alpha) {
  std::vector<SubsetMask> r;
  const int n = alpha.size();
  if (n == 0) return {0};
  for (SubsetMask s = 0; s < (SubsetMask(1) << (n - 1)); ++s)
    if (is_alpha_unimodal(s, alpha)) r.push_back(s);
  return r;
}

Integer count_unimodal(const Composition& alpha) {
  if (alpha.empty()) return 1;
  Integer r = 1;
  r <<= static_cast<unsigned>(alpha.length() - 1);
  for (int p : alpha.parts()) r *= p;
  return r;
}

int moebius_unimodal(const Composition& alpha, SubsetMask s) {
  const int n = alpha.size();
  SubsetMask set = alpha.set_mask();
  SubsetMask allowed = set | ((set << 1U) & full_mask(n - 1)) | (n > 1 ? mask_bit(1) : 0);
  if (s & ~allowed) return 0;
  return mask_size(s) % 2 ? -1 : 1;
}

std::vector<Composition> enumerate_v(const Composition& alpha) {
  std::vector<Composition> r;
  SubsetMask set = alpha.set_mask();
  for (const Composition& g : compositions(alpha.size()))
    if (is_alpha_unimodal(set, g)) r.push_back(g);
  return r;
}

Integer count_v(const Composition& alpha) {
  const int n = alpha.size();
  if (n == 0) return 1;
  int m = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i)
    if (alpha[static_cast<std::size_t>(i)] > 1) ++m;
  Integer r = 1;
  r <<= static_cast<unsigned>(n - 1 - 2 * m);
  for (int i = 0; i < m; ++i) r *= 3;
  return r;
}

bool is_order_ideal_of_refinement(const std::vector<Composition>& family, int n) {
  std::set<SubsetMask> sets;
  for (const Composition& c : family) sets.insert(c.set_mask());
  // Closed under refinement: adding any element to a set stays inside.
  for (SubsetMask s : sets)
    for (int k = 1; k < n; ++k)
      if (!mask_has(s, k) && !sets.count(s | mask_bit(k))) return false;
  return true;
}

std::optional<SublatticeWitness> find_non_sublattice_witness(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& alpha : compositions(n)) {
      std::vector<Composition> v = enumerate_v(alpha);
      std::set<SubsetMask> sets;
      for (const Composition& c : v) sets.insert(c.set_mask());
      for (const Composition& g : v)
        for (const Composition& d : v) {
          SubsetMask join = g.set_mask() & d.set_mask();
          if (!sets.count(join)) return SublatticeWitness{alpha, g, d, Composition::from_set(join, n)};
        }
    }
  }
  return std::nullopt;
}

Integer unimodal_pair_count(int n) {
  if (n == 0) return 0;
  Integer r = 0;
  for (const Composition& a : compositions(n)) r += Integer(enumerate_unimodal(a).size());
  return r;
}

Integer unimodal_pair_recursion(int n) {
  Integer a = 0, b = 1;
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    Integer c = 4 * b - a;
    a = b;
    b = c;
  }
  return b;
}

ParamPoly unimodal_series_coefficient(int n) {
  // F_n = [n=1] t + (1+q)(1+t) F_{n-1} - q F_{n-2}
  const ParamPoly q = ParamPoly::var(Param::q), t = ParamPoly::var(Param::y);
  const ParamPoly step = (ParamPoly(1) + q) * (ParamPoly(1) + t);
  std::vector<ParamPoly> f{ParamPoly()};
  for (int k = 1; k <= n; ++k) {
    ParamPoly next = step * f[static_cast<std::size_t>(k - 1)];
    if (k == 1) next += t;
    if (k >= 2) next -= q * f[static_cast<std::size_t>(k - 2)];
    f.push_back(next);
  }
  return f[static_cast<std::size_t>(n)];
}

ParamPoly unimodal_series_enumerated(int n) {
  ParamPoly r;
  if (n == 0) return r;
  for (const Composition& a : compositions(n)) {
    for (SubsetMask s : enumerate_unimodal(a)) {
      Exponent e;
      e.e[0] = static_cast<std::uint16_t>(mask_size(s));
      e.e[1] = static_cast<std::uint16_t>(a.length());
      r.add_term(e, 1);
    }
  }
  return r;
}

bool is_consistent(const Permutation& sigma, const Composition& alpha, const Composition& beta) {
  const int n = alpha.size();
  if (static_cast<int>(sigma.size()) != n || beta.size() != n) throw InvalidArgument("is_consistent: size mismatch");
  if (!refines(alpha, beta)) throw InvalidArgument("is_consistent: alpha must refine beta");
  std::vector<int> ends = alpha.prefix_sums();
  int start = 1;
  for (int e : ends) {
    for (int j = start; j < e; ++j)
      if (sigma[static_cast<std::size_t>(j - 1)] > sigma[static_cast<std::size_t>(e - 1)]) return false;
    start = e + 1;
  }
  SubsetMask bset = beta.set_mask();
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    if (mask_has(bset, ends[i])) continue;  // next alpha-block starts a new beta-block
    if (sigma[static_cast<std::size_t>(ends[i] - 1)] > sigma[static_cast<std::size_t>(ends[i + 1] - 1)]) return false;
  }
  return true;
}

HookForest hook_forest(const Composition& alpha, const Composition& beta) {
  if (!refines(alpha, beta)) throw InvalidArgument("hook_forest: alpha must refine beta");
  const int n = alpha.size();
  HookForest f;
  f.parent.assign(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> ends = alpha.prefix_sums();
  int start = 1;
  for (int e : ends) {
    for (int j = start; j < e; ++j) f.parent[static_cast<std::size_t>(j)] = e;
    start = e + 1;
  }
  SubsetMask bset = beta.set_mask();
  for (std::size_t i = 0; i + 1 < ends.size(); ++i)
    if (!mask_has(bset, ends[i])) f.parent[static_cast<std::size_t>(ends[i])] = ends[i + 1];
  f.hook.assign(static_cast<std::size_t>(n + 1), 1);
  f.hook[0] = 0;
  for (int v = 1; v <= n; ++v) {
    for (int p = f.parent[static_cast<std::size_t>(v)]; p; p = f.parent[static_cast<std::size_t>(p)])
      ++f.hook[static_cast<std::size_t>(p)];
  }
  return f;
}

Integer HookForest::hook_product() const {
  Integer r = 1;
  for (std::size_t v = 1; v < hook.size(); ++v) r *= hook[v];
  return r;
}

std::vector<Permutation> forest_labelings(const HookForest& f) {
  const int n = static_cast<int>(f.parent.size()) - 1;
  // Assign values n, n-1, ..., 1; a vertex is available once its parent has a value.
  std::vector<Permutation> out;
  Permutation sigma(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int value) {
    if (value == 0) {
      out.push_back(sigma);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (sigma[static_cast<std::size_t>(v - 1)]) continue;
      int p = f.parent[static_cast<std::size_t>(v)];
      if (p && !sigma[static_cast<std::size_t>(p - 1)]) continue;
      sigma[static_cast<std::size_t>(v - 1)] = value;
      rec(value - 1);
      sigma[static_cast<std::size_t>(v - 1)] = 0;
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_cons(const Composition& alpha, const Composition& beta) {
  const int n = alpha.size();
  if (!refines(alpha, beta)) throw InvalidArgument("enumerate_cons: alpha must refine beta");
  if (n > 8) return forest_labelings(hook_forest(alpha, beta));
  std::vector<Permutation> out;
  Permutation sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    if (is_consistent(sigma, alpha, beta)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Integer cons_count(const Composition& alpha, const Composition& beta) {
  static std::mutex mu;
  static std::map<std::pair<Composition, Composition>, Integer> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({alpha, beta});
    if (it != cache.end()) return it->second;
  }
  Integer c(enumerate_cons(alpha, beta).size());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(alpha, beta), c);
  return c;
}

Integer cons_alternating_sum(const Composition& beta, const Composition& gamma) {
  if (beta.size() != gamma.size()) throw InvalidArgument("cons_alternating_sum: size mismatch");
  SubsetMask g = gamma.set_mask();
  Integer total = 0;
  for (const Composition& alpha : refinements(beta)) {
    if (!is_alpha_unimodal(g, alpha)) continue;
    Integer c = cons_count(alpha, beta);
    if (mask_size(g & ~alpha.set_mask()) % 2) total -= c;
    else total += c;
  }
  return total;
}

}  // namespace qsym::unimodal
