#include "qsymkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qsymkit/error.hpp"

namespace qsym::posets {

namespace {

ElementMask bit(int x) { return ElementMask(1) << x; }

std::vector<int> elements_of(ElementMask m) {
  std::vector<int> r;
  while (m) {
    int x = std::countr_zero(m);
    r.push_back(x);
    m &= m - 1;
  }
  return r;
}

// Reflexive-transitive closure; nullopt on a directed cycle.
std::optional<std::vector<ElementMask>> closure(int n, const std::vector<std::pair<int, int>>& less) {
  std::vector<ElementMask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) up[static_cast<std::size_t>(x)] = bit(x);
  for (auto [x, y] : less) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidArgument("relation refers to a missing element");
    if (x == y) return std::nullopt;
    up[static_cast<std::size_t>(x)] |= bit(y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      ElementMask acc = up[static_cast<std::size_t>(x)];
      for (int y : elements_of(acc)) acc |= up[static_cast<std::size_t>(y)];
      if (acc != up[static_cast<std::size_t>(x)]) {
        up[static_cast<std::size_t>(x)] = acc;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y : elements_of(up[static_cast<std::size_t>(x)]))
      if (y != x && (up[static_cast<std::size_t>(y)] & bit(x))) return std::nullopt;
  return up;
}

}  // namespace

Poset::Poset(int n) : n_(n) {
  if (n < 0 || n > kMaxPosetSize) throw InvalidArgument("poset size out of range");
  up_.resize(static_cast<std::size_t>(n));
  down_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) up_[static_cast<std::size_t>(x)] = down_[static_cast<std::size_t>(x)] = bit(x);
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less) {
  Poset p(n);
  auto up = closure(n, less);
  if (!up) throw InvalidArgument("relations contain a cycle");
  p.up_ = *up;
  for (int x = 0; x < n; ++x) p.down_[static_cast<std::size_t>(x)] = 0;
  for (int x = 0; x < n; ++x)
    for (int y : elements_of(p.up_[static_cast<std::size_t>(x)])) p.down_[static_cast<std::size_t>(y)] |= bit(x);
  return p;
}

ElementMask Poset::all() const { return n_ == 32 ? ~ElementMask(0) : bit(n_) - 1; }

std::vector<std::pair<int, int>> Poset::strict_relations() const {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (less(x, y)) r.emplace_back(x, y);
  return r;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> r;
  for (auto [x, y] : strict_relations()) {
    ElementMask between = (up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)]) & ~(bit(x) | bit(y));
    if (!between) r.emplace_back(x, y);
  }
  return r;
}

ElementMask Poset::minimal_in(ElementMask subset) const {
  ElementMask r = 0;
  for (int x : elements_of(subset))
    if ((down_[static_cast<std::size_t>(x)] & subset) == bit(x)) r |= bit(x);
  return r;
}

ElementMask Poset::maximal_in(ElementMask subset) const {
  ElementMask r = 0;
  for (int x : elements_of(subset))
    if ((up_[static_cast<std::size_t>(x)] & subset) == bit(x)) r |= bit(x);
  return r;
}

bool Poset::is_down_set(ElementMask m) const {
  for (int x : elements_of(m))
    if (down_[static_cast<std::size_t>(x)] & ~m) return false;
  return true;
}

bool Poset::is_chain(ElementMask m) const {
  std::vector<int> xs = elements_of(m);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!comparable(xs[i], xs[j])) return false;
  return true;
}

bool Poset::is_antichain() const { return strict_relations().empty(); }

Poset Poset::relabeled(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : strict_relations()) rel.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
  return from_relations(n_, rel);
}

Poset Poset::dual() const {
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : strict_relations()) rel.emplace_back(y, x);
  return from_relations(n_, rel);
}

LabeledPoset::LabeledPoset(Poset p, std::vector<int> labels) : poset_(std::move(p)), labels_(std::move(labels)) {
  const int n = poset_.size();
  if (static_cast<int>(labels_.size()) != n) throw InvalidArgument("labeling has the wrong length");
  inverse_.assign(static_cast<std::size_t>(n + 1), -1);
  for (int x = 0; x < n; ++x) {
    int l = labels_[static_cast<std::size_t>(x)];
    if (l < 1 || l > n || inverse_[static_cast<std::size_t>(l)] != -1)
      throw InvalidArgument("labeling is not a bijection onto [n]");
    inverse_[static_cast<std::size_t>(l)] = x;
  }
}

bool LabeledPoset::is_natural() const {
  for (auto [x, y] : poset_.strict_relations())
    if (label(x) > label(y)) return false;
  return true;
}

bool LabeledPoset::is_order_reversing() const {
  for (auto [x, y] : poset_.strict_relations())
    if (label(x) < label(y)) return false;
  return true;
}

LabeledPoset LabeledPoset::reversed_labels() const {
  std::vector<int> w = labels_;
  for (int& l : w) l = size() + 1 - l;
  return LabeledPoset(poset_, std::move(w));
}

std::vector<int> canonical_natural_labels(const Poset& p) {
  const int n = p.size();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  ElementMask left = p.all();
  for (int l = 1; l <= n; ++l) {
    ElementMask mins = p.minimal_in(left);
    int x = std::countr_zero(mins);
    labels[static_cast<std::size_t>(x)] = l;
    left &= ~bit(x);
  }
  return labels;
}

LabeledPoset naturally_labeled(const Poset& p) { return LabeledPoset(p, canonical_natural_labels(p)); }

LabeledPoset order_reversing_labeled(const Poset& p) { return naturally_labeled(p).reversed_labels(); }

std::vector<LabeledPoset> all_natural_labelings(const Poset& p) {
  std::vector<LabeledPoset> r;
  LabeledPoset base = naturally_labeled(p);
  for (const Permutation& sigma : linear_extensions(base)) {
    // sigma lists labels of base in a linear order; element at position j gets label j.
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (std::size_t j = 0; j < sigma.size(); ++j)
      w[static_cast<std::size_t>(base.element_with_label(sigma[j]))] = static_cast<int>(j) + 1;
    r.emplace_back(p, std::move(w));
  }
  return r;
}

SubsetMask des_set(const Permutation& sigma) {
  SubsetMask d = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1]) d |= mask_bit(static_cast<int>(i) + 1);
  return d;
}

int des(const Permutation& sigma) { return mask_size(des_set(sigma)); }

SubsetMask exc_set(const Permutation& sigma) {
  SubsetMask e = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > static_cast<int>(i) + 1) e |= mask_bit(static_cast<int>(i) + 1);
  return e;
}

int exc(const Permutation& sigma) { return mask_size(exc_set(sigma)); }

SubsetMask dex_set(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  SubsetMask e = exc_set(sigma);
  std::vector<int> key(sigma.size());
  for (int i = 1; i <= n; ++i) {
    int v = sigma[static_cast<std::size_t>(i - 1)];
    key[static_cast<std::size_t>(i - 1)] = mask_has(e, i) ? v : n + v;
  }
  return des_set(key);
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation inverse(const Permutation& sigma) {
  Permutation r(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) r[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

std::vector<Permutation> linear_extensions(const LabeledPoset& p) {
  const int n = p.size();
  const Poset& order = p.poset();
  std::vector<Permutation> out;
  Permutation sigma;
  std::function<void(ElementMask)> rec = [&](ElementMask placed) {
    if (static_cast<int>(sigma.size()) == n) {
      out.push_back(sigma);
      return;
    }
    for (int l = 1; l <= n; ++l) {
      int x = p.element_with_label(l);
      if (placed & bit(x)) continue;
      if ((order.down_set(x) & ~bit(x)) & ~placed) continue;
      sigma.push_back(l);
      rec(placed | bit(x));
      sigma.pop_back();
    }
  };
  rec(0);
  return out;
}

bool in_jordan_hoelder(const LabeledPoset& p, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != p.size() || !is_permutation(sigma)) return false;
  ElementMask placed = 0;
  for (int l : sigma) {
    int x = p.element_with_label(l);
    if ((p.poset().down_set(x) & ~bit(x)) & ~placed) return false;
    placed |= bit(x);
  }
  return true;
}

Integer count_linear_extensions(const Poset& p) {
  const int n = p.size();
  std::vector<Integer> ways(std::size_t(1) << n, 0);
  ways[0] = 1;
  for (ElementMask m = 0; m < (ElementMask(1) << n); ++m) {
    if (ways[m] == 0) continue;
    for (int x = 0; x < n; ++x) {
      if (m & bit(x)) continue;
      if ((p.down_set(x) & ~bit(x)) & ~m) continue;
      ways[m | bit(x)] += ways[m];
    }
  }
  return ways[(std::size_t(1) << n) - 1];
}

ElementMask block_subposet(const LabeledPoset& p, const Permutation& sigma, const Composition& alpha, int block) {
  std::vector<int> ends = alpha.prefix_sums();
  int start = block == 0 ? 1 : ends[static_cast<std::size_t>(block - 1)] + 1;
  int end = ends[static_cast<std::size_t>(block)];
  ElementMask m = 0;
  for (int j = start; j <= end; ++j) m |= bit(p.element_with_label(sigma[static_cast<std::size_t>(j - 1)]));
  return m;
}

bool blocks_have_unique_minimum(const LabeledPoset& p, const Permutation& sigma, const Composition& alpha) {
  for (int i = 0; i < alpha.length(); ++i)
    if (std::popcount(p.poset().minimal_in(block_subposet(p, sigma, alpha, i))) != 1) return false;
  return true;
}

std::vector<Permutation> l_alpha(const LabeledPoset& p, const Composition& alpha) {
  if (alpha.size() != p.size()) throw InvalidArgument("composition size differs from poset size");
  std::vector<Permutation> r;
  for (const Permutation& s : linear_extensions(p))
    if (unimodal::is_alpha_unimodal(des_set(s), alpha)) r.push_back(s);
  return r;
}

std::vector<Permutation> l_star_alpha(const LabeledPoset& p, const Composition& alpha) {
  std::vector<Permutation> r;
  for (const Permutation& s : l_alpha(p, alpha))
    if (blocks_have_unique_minimum(p, s, alpha)) r.push_back(s);
  return r;
}

Permutation involution_phi(const LabeledPoset& p, const Composition& alpha, const Permutation& sigma) {
  if (!p.is_natural()) throw InvalidArgument("involution_phi needs a natural labeling");
  if (!in_jordan_hoelder(p, sigma) || !unimodal::is_alpha_unimodal(des_set(sigma), alpha))
    throw InvalidArgument("involution_phi: sigma is not in L_alpha");
  std::vector<int> ends = alpha.prefix_sums();
  for (int i = 0; i < alpha.length(); ++i) {
    ElementMask block = block_subposet(p, sigma, alpha, i);
    ElementMask mins = p.poset().minimal_in(block);
    if (std::popcount(mins) < 2) continue;
    int big = 0;
    for (int x : elements_of(mins)) big = std::max(big, p.label(x));
    int a = i == 0 ? 1 : ends[static_cast<std::size_t>(i - 1)] + 1;
    int b = ends[static_cast<std::size_t>(i)];
    int j = 0, m = 0;
    for (int r = a; r <= b; ++r) {
      if (sigma[static_cast<std::size_t>(r - 1)] > big) continue;
      if (!j) j = r;
      else if (m != r - 1) throw std::logic_error("involution_phi: small letters are not contiguous");
      m = r;
    }
    Permutation out = sigma;
    auto at = [&](int r) -> int& { return out[static_cast<std::size_t>(r - 1)]; };
    auto orig = [&](int r) { return sigma[static_cast<std::size_t>(r - 1)]; };
    if (orig(j) == big) {
      for (int r = j; r < m; ++r) at(r) = orig(r + 1);
      at(m) = orig(j);
    } else if (orig(m) == big) {
      for (int r = j + 1; r <= m; ++r) at(r) = orig(r - 1);
      at(j) = orig(m);
    } else {
      throw std::logic_error("involution_phi: largest minimal label is interior");
    }
    return out;
  }
  throw InvalidArgument("involution_phi: sigma is in L*_alpha");
}

Composition Surjection::type() const {
  std::vector<int> counts(static_cast<std::size_t>(fiber_count()), 0);
  for (int v : value) ++counts[static_cast<std::size_t>(v - 1)];
  return Composition(counts);
}

int Surjection::fiber_count() const { return value.empty() ? 0 : *std::max_element(value.begin(), value.end()); }

ElementMask Surjection::fiber(int i) const {
  ElementMask m = 0;
  for (std::size_t x = 0; x < value.size(); ++x)
    if (value[x] == i) m |= bit(static_cast<int>(x));
  return m;
}

namespace {

// Fibers are successive down-set increments; `sizes` restricts fiber sizes when given.
void surjection_rec(const Poset& p, ElementMask placed, int fiber, const std::vector<int>* sizes,
                    std::vector<int>& value, std::vector<Surjection>& out) {
  ElementMask rest = p.all() & ~placed;
  if (!rest) {
    if (!sizes || fiber - 1 == static_cast<int>(sizes->size())) out.push_back(Surjection{value});
    return;
  }
  if (sizes && fiber > static_cast<int>(sizes->size())) return;
  for (ElementMask sub = rest; sub; sub = (sub - 1) & rest) {
    if (sizes && std::popcount(sub) != (*sizes)[static_cast<std::size_t>(fiber - 1)]) continue;
    if (!p.is_down_set(placed | sub)) continue;
    for (int x : elements_of(sub)) value[static_cast<std::size_t>(x)] = fiber;
    surjection_rec(p, placed | sub, fiber + 1, sizes, value, out);
  }
}

}  // namespace

std::vector<Surjection> all_surjections(const Poset& p) {
  std::vector<Surjection> out;
  std::vector<int> value(static_cast<std::size_t>(p.size()), 0);
  surjection_rec(p, 0, 1, nullptr, value, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Surjection> surjections(const Poset& p, const Composition& alpha) {
  if (alpha.size() != p.size()) throw InvalidArgument("composition size differs from poset size");
  std::vector<Surjection> out;
  std::vector<int> value(static_cast<std::size_t>(p.size()), 0);
  surjection_rec(p, 0, 1, &alpha.parts(), value, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool fibers_have_unique_minimum(const Poset& p, const Surjection& f) {
  for (int i = 1; i <= f.fiber_count(); ++i)
    if (std::popcount(p.minimal_in(f.fiber(i))) != 1) return false;
  return true;
}

std::vector<Surjection> surjections_star(const Poset& p, const Composition& alpha) {
  std::vector<Surjection> r;
  for (Surjection& f : surjections(p, alpha))
    if (fibers_have_unique_minimum(p, f)) r.push_back(std::move(f));
  return r;
}

Surjection sigma_to_f(const LabeledPoset& p, const Composition& alpha, const Permutation& sigma) {
  Surjection f{std::vector<int>(static_cast<std::size_t>(p.size()), 0)};
  int pos = 0;
  for (int i = 0; i < alpha.length(); ++i)
    for (int k = 0; k < alpha[static_cast<std::size_t>(i)]; ++k, ++pos)
      f.value[static_cast<std::size_t>(p.element_with_label(sigma[static_cast<std::size_t>(pos)]))] = i + 1;
  return f;
}

Permutation f_to_sigma(const LabeledPoset& p, const Surjection& f) {
  Permutation sigma;
  for (int i = 1; i <= f.fiber_count(); ++i) {
    std::vector<int> labels;
    for (int x : elements_of(f.fiber(i))) labels.push_back(p.label(x));
    std::sort(labels.begin(), labels.end());
    sigma.insert(sigma.end(), labels.begin(), labels.end());
  }
  return sigma;
}

Equivalence::Equivalence(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  *this = from_class_ids(ids);
}

Equivalence Equivalence::from_class_ids(const std::vector<int>& ids) {
  Equivalence e;
  std::map<int, int> renumber;
  e.class_of_.resize(ids.size());
  for (std::size_t x = 0; x < ids.size(); ++x) {
    auto [it, inserted] = renumber.try_emplace(ids[x], static_cast<int>(renumber.size()));
    e.class_of_[x] = it->second;
    if (inserted) e.blocks_.emplace_back();
    e.blocks_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(x));
  }
  return e;
}

Equivalence Equivalence::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n) throw InvalidArgument("equivalence block refers to a missing element");
      if (ids[static_cast<std::size_t>(x)] != -1) throw InvalidArgument("equivalence blocks overlap");
      ids[static_cast<std::size_t>(x)] = next;
    }
    ++next;
  }
  for (int& id : ids)
    if (id == -1) id = next++;  // unlisted elements are singletons
  return from_class_ids(ids);
}

ElementMask Equivalence::block_mask(int c) const {
  ElementMask m = 0;
  for (int x : blocks_[static_cast<std::size_t>(c)]) m |= bit(x);
  return m;
}

int Equivalence::class_size(int x) const {
  return static_cast<int>(blocks_[static_cast<std::size_t>(class_of(x))].size());
}

bool Equivalence::is_discrete() const { return blocks_.size() == class_of_.size(); }

std::vector<Equivalence> all_equivalences(int n) {
  std::vector<Equivalence> r;
  std::vector<int> ids(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int x, int used) {
    if (x == n) {
      r.push_back(Equivalence::from_class_ids(ids));
      return;
    }
    for (int c = 0; c <= used; ++c) {
      ids[static_cast<std::size_t>(x)] = c;
      rec(x + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return {Equivalence(0)};
  rec(0, 0);
  return r;
}

bool is_chain_congruence(const Poset& p, const Equivalence& e) {
  if (e.size() != p.size()) throw InvalidArgument("equivalence size differs from poset size");
  for (std::size_t c = 0; c < e.blocks().size(); ++c)
    if (!p.is_chain(e.block_mask(static_cast<int>(c)))) return false;
  for (auto [x, y] : p.strict_relations()) {
    if (e.same(x, y)) continue;
    ElementMask cx = e.block_mask(e.class_of(x)), cy = e.block_mask(e.class_of(y));
    int top = std::countr_zero(p.maximal_in(cx)), bottom = std::countr_zero(p.minimal_in(cy));
    if (!p.less(top, bottom)) return false;
  }
  return true;
}

ChainClosure chain_congruence_closure(const LabeledPoset& lp, const Equivalence& e) {
  const Poset& p = lp.poset();
  const int n = p.size();
  if (e.size() != n) throw InvalidArgument("equivalence size differs from poset size");
  std::vector<ElementMask> reach(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) reach[static_cast<std::size_t>(x)] = p.up_set(x) | e.block_mask(e.class_of(x));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      ElementMask acc = reach[static_cast<std::size_t>(x)];
      for (int y : elements_of(acc)) acc |= reach[static_cast<std::size_t>(y)];
      if (acc != reach[static_cast<std::size_t>(x)]) {
        reach[static_cast<std::size_t>(x)] = acc;
        changed = true;
      }
    }
  }
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (ids[static_cast<std::size_t>(x)] != -1) continue;
    for (int y = 0; y < n; ++y)
      if ((reach[static_cast<std::size_t>(x)] & bit(y)) && (reach[static_cast<std::size_t>(y)] & bit(x)))
        ids[static_cast<std::size_t>(y)] = x;
  }
  Equivalence closed = Equivalence::from_class_ids(ids);
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (closed.same(x, y)) {
        if (lp.label(x) < lp.label(y)) rel.emplace_back(x, y);
      } else if (reach[static_cast<std::size_t>(x)] & bit(y)) {
        rel.emplace_back(x, y);
      }
    }
  Poset prime = Poset::from_relations(n, rel);
  LabeledPoset keep(prime, lp.labels());
  ChainClosure r{closed, keep.is_natural() ? keep : naturally_labeled(prime)};
  return r;
}

WeightedPoset quotient(const Poset& p, const Equivalence& e) {
  if (!is_chain_congruence(p, e)) throw InvalidArgument("quotient needs a chain congruence");
  const int k = static_cast<int>(e.blocks().size());
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : p.strict_relations())
    if (!e.same(x, y)) rel.emplace_back(e.class_of(x), e.class_of(y));
  Poset q = Poset::from_relations(k, rel);
  std::vector<int> labels = canonical_natural_labels(q);
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) perm[static_cast<std::size_t>(c)] = labels[static_cast<std::size_t>(c)] - 1;
  WeightedPoset w{q.relabeled(perm), std::vector<int>(static_cast<std::size_t>(k)),
                  std::vector<std::vector<int>>(static_cast<std::size_t>(k))};
  for (int c = 0; c < k; ++c) {
    w.weights[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] =
        static_cast<int>(e.blocks()[static_cast<std::size_t>(c)].size());
    w.classes[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] = e.blocks()[static_cast<std::size_t>(c)];
  }
  return w;
}

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

Poset antichain(int n) { return Poset(n); }

Poset disjoint_chains(const std::vector<int>& lengths) {
  Poset r(0);
  for (int len : lengths) {
    if (len < 1) throw InvalidArgument("chain lengths must be positive");
    r = direct_sum(r, chain(len));
  }
  return r;
}

Poset zigzag_path(SubsetMask s, int n) {
  if (n < 1) throw InvalidArgument("zigzag_path needs n >= 1");
  if (s & ~full_mask(n - 1)) throw InvalidArgument("zigzag_path: S must lie in [n-1]");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < n; ++i) {
    if (mask_has(s, i)) rel.emplace_back(i, i - 1);
    else rel.emplace_back(i - 1, i);
  }
  return Poset::from_relations(n, rel);
}

Poset zigzag_cycle(SubsetMask s, int n) {
  if (n < 2) throw InvalidArgument("zigzag_cycle needs n >= 2");
  if (s & ~full_mask(n)) throw InvalidArgument("zigzag_cycle: S must lie in [n]");
  int k = mask_size(s);
  if (k == 0 || k == n) throw InvalidArgument("zigzag_cycle needs 0 < |S| < n");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= n; ++i) {
    int a = i - 1, b = i % n;
    if (mask_has(s, i)) rel.emplace_back(b, a);
    else rel.emplace_back(a, b);
  }
  return Poset::from_relations(n, rel);
}

Poset complete_bipartite(int r, int m) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m; ++j) rel.emplace_back(i, r + j);
  return Poset::from_relations(r + m, rel);
}

Poset direct_sum(const Poset& a, const Poset& b) {
  std::vector<std::pair<int, int>> rel = a.strict_relations();
  for (auto [x, y] : b.strict_relations()) rel.emplace_back(x + a.size(), y + a.size());
  return Poset::from_relations(a.size() + b.size(), rel);
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  Poset s = direct_sum(a, b);
  std::vector<std::pair<int, int>> rel = s.strict_relations();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) rel.emplace_back(x, a.size() + y);
  return Poset::from_relations(a.size() + b.size(), rel);
}

Poset rooted_tree(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::pair<int, int>> rel;
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (parent[static_cast<std::size_t>(v)] < 0) ++roots;
    else rel.emplace_back(parent[static_cast<std::size_t>(v)], v);
  }
  if (roots != 1) throw InvalidArgument("rooted tree needs exactly one root");
  return Poset::from_relations(n, rel);
}

std::vector<std::uint32_t> canonical_form(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  auto rels = p.strict_relations();
  do {
    std::fill(rows.begin(), rows.end(), 0);
    for (auto [x, y] : rels)
      rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] |= bit(perm[static_cast<std::size_t>(y)]);
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), static_cast<std::uint32_t>(n));
  return best;
}

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<Poset> all_posets(int n) {
  if (n < 0 || n > 7) throw InvalidArgument("all_posets supports 0 <= n <= 7");
  std::vector<Poset> reps;
  std::set<std::vector<std::uint32_t>> seen;
  // Grow naturally labelled posets: element k sits above a down-set of 0..k-1.
  std::function<void(int, std::vector<std::pair<int, int>>&)> rec = [&](int k, std::vector<std::pair<int, int>>& rel) {
    Poset cur = Poset::from_relations(k, rel);
    if (k == n) {
      if (seen.insert(canonical_form(cur)).second) {
        std::vector<int> labels = canonical_natural_labels(cur);
        for (int& l : labels) --l;
        reps.push_back(cur.relabeled(labels));
      }
      return;
    }
    for (ElementMask d = 0; d < (ElementMask(1) << k); ++d) {
      if (!cur.is_down_set(d)) continue;
      std::size_t mark = rel.size();
      for (int x : elements_of(cur.maximal_in(d))) rel.emplace_back(x, k);
      rec(k + 1, rel);
      rel.resize(mark);
    }
  };
  std::vector<std::pair<int, int>> rel;
  rec(0, rel);
  return reps;
}

void DirectedGraph::validate() const {
  if (n < 0 || n > kMaxPosetSize) throw InvalidArgument("graph size out of range");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("edge refers to a missing vertex");
    if (a == b) throw InvalidArgument("loops are not allowed");
  }
}

bool DirectedGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges)
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  return true;
}

std::vector<std::vector<DirectedGraph::CycleEdge>> DirectedGraph::undirected_cycles() const {
  std::vector<std::vector<CycleEdge>> out;
  std::set<std::vector<int>> seen;
  std::vector<CycleEdge> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void(int, int)> rec = [&](int start, int v) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      int w;
      bool along;
      if (a == v) {
        w = b;
        along = true;
      } else if (b == v) {
        w = a;
        along = false;
      } else {
        continue;
      }
      bool used = std::any_of(path.begin(), path.end(), [&](const CycleEdge& c) { return c.edge == static_cast<int>(e); });
      if (used) continue;
      if (w == start && !path.empty()) {
        path.push_back({static_cast<int>(e), along});
        std::vector<int> key;
        for (const auto& c : path) key.push_back(c.edge);
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(path);
        path.pop_back();
        continue;
      }
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back({static_cast<int>(e), along});
      rec(start, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[static_cast<std::size_t>(s)] = true;
    rec(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

std::optional<Poset> orientation_closure(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (!closure(n, arcs)) return std::nullopt;
  return Poset::from_relations(n, arcs);
}

namespace {

std::string ahu_code(int v, const std::vector<std::vector<int>>& children) {
  std::vector<std::string> codes;
  for (int c : children[static_cast<std::size_t>(v)]) codes.push_back(ahu_code(c, children));
  std::sort(codes.begin(), codes.end());
  std::string s = "(";
  for (const auto& c : codes) s += c;
  return s + ")";
}

}  // namespace

std::vector<std::vector<int>> rooted_tree_parents(int n) {
  if (n < 1) throw InvalidArgument("rooted trees need n >= 1");
  std::vector<std::vector<int>> out;
  std::set<std::string> seen;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
      for (int u = 1; u < n; ++u) children[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])].push_back(u);
      if (seen.insert(ahu_code(0, children)).second) out.push_back(parent);
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[static_cast<std::size_t>(v)] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

}  // namespace qsym::posets
