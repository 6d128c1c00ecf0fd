#include "qsymkit/ppartitions.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "qsymkit/error.hpp"

namespace qsym::pp {

using posets::ElementMask;
using posets::Surjection;

namespace {

ElementMask bit(int x) { return ElementMask(1) << x; }

// Unique minimal element of `m`, or -1.
int unique_min(const Poset& p, ElementMask m) {
  ElementMask mins = p.minimal_in(m);
  return std::popcount(mins) == 1 ? std::countr_zero(mins) : -1;
}

struct Extension {
  Permutation sigma;
  SubsetMask descents;
};

std::vector<Extension> extensions_with_descents(const LabeledPoset& p) {
  std::vector<Extension> r;
  for (Permutation& s : posets::linear_extensions(p)) {
    SubsetMask d = posets::des_set(s);
    r.push_back({std::move(s), d});
  }
  return r;
}

// Elements of each block of alpha under sigma.
std::vector<ElementMask> blocks_of(const LabeledPoset& p, const Permutation& sigma, const Composition& alpha) {
  std::vector<ElementMask> r;
  std::size_t j = 0;
  for (int part : alpha.parts()) {
    ElementMask m = 0;
    for (int k = 0; k < part; ++k, ++j) m |= bit(p.element_with_label(sigma[j]));
    r.push_back(m);
  }
  return r;
}

void add_cert(Certificates& c, const Composition& a, const ParamPoly& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = c.emplace(a, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

// Every class of E sits inside one of the blocks.
bool classes_inside(const std::vector<ElementMask>& blocks, const Equivalence& e) {
  for (std::size_t c = 0; c < e.blocks().size(); ++c) {
    ElementMask cls = e.block_mask(static_cast<int>(c));
    bool ok = false;
    for (ElementMask b : blocks)
      if ((cls & b) == cls) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool constant_on_classes(const Surjection& f, const Equivalence& e) {
  for (const auto& cls : e.blocks())
    for (int x : cls)
      if (f.value[static_cast<std::size_t>(x)] != f.value[static_cast<std::size_t>(cls.front())]) return false;
  return true;
}

// Generic certificate accumulation over L* (sigma, blocks) for every alpha.
// `weigh` returns the composition receiving the certificate and its weight,
// or nullopt to skip.
using BlockWeigher =
    std::function<std::optional<std::pair<Composition, ParamPoly>>(const Composition&, const std::vector<ElementMask>&)>;

Certificates lstar_certificates(const LabeledPoset& p, const BlockWeigher& weigh) {
  Certificates c;
  const std::vector<Extension> ext = extensions_with_descents(p);
  for (const Composition& alpha : compositions(p.size())) {
    for (const Extension& e : ext) {
      if (!unimodal::is_alpha_unimodal(e.descents, alpha)) continue;
      std::vector<ElementMask> blocks = blocks_of(p, e.sigma, alpha);
      if (std::any_of(blocks.begin(), blocks.end(), [&](ElementMask b) { return unique_min(p.poset(), b) < 0; }))
        continue;
      if (auto w = weigh(alpha, blocks)) add_cert(c, w->first, w->second);
    }
  }
  return c;
}

Certificates ostar_certificates(const Poset& p, const BlockWeigher& weigh) {
  Certificates c;
  for (const Surjection& f : posets::all_surjections(p)) {
    if (!posets::fibers_have_unique_minimum(p, f)) continue;
    std::vector<ElementMask> fibers;
    for (int i = 1; i <= f.fiber_count(); ++i) fibers.push_back(f.fiber(i));
    if (auto w = weigh(f.type(), fibers)) add_cert(c, w->first, w->second);
  }
  return c;
}

BlockWeigher plain_weigher() {
  return [](const Composition& a, const std::vector<ElementMask>&) {
    return std::optional<std::pair<Composition, ParamPoly>>({a, ParamPoly(1)});
  };
}

BlockWeigher class_weigher(const Poset& p, const Equivalence& e) {
  return [&p, &e](const Composition& a, const std::vector<ElementMask>& blocks)
             -> std::optional<std::pair<Composition, ParamPoly>> {
    if (!classes_inside(blocks, e)) return std::nullopt;
    long w = 1;
    for (ElementMask b : blocks) w *= e.class_size(unique_min(p, b));
    return std::make_pair(a, ParamPoly(w));
  };
}

BlockWeigher weight_weigher(const Poset& p, const std::vector<int>& d) {
  return [&p, &d](const Composition&, const std::vector<ElementMask>& blocks)
             -> std::optional<std::pair<Composition, ParamPoly>> {
    std::vector<int> beta;
    long w = 1;
    for (ElementMask b : blocks) {
      int s = 0;
      for (ElementMask m = b; m; m &= m - 1) s += d[static_cast<std::size_t>(std::countr_zero(m))];
      beta.push_back(s);
      w *= d[static_cast<std::size_t>(unique_min(p, b))];
    }
    return std::make_pair(Composition(beta), ParamPoly(w));
  };
}

void require_natural(const LabeledPoset& p) {
  if (!p.is_natural()) throw InvalidArgument("labeling is not natural");
}

// Cross-check the routes; the first computed route is the reference.
PsiReport assemble(int degree, const std::vector<std::pair<std::string, Certificates>>& routes) {
  PsiReport r;
  const Certificates& ref = routes.front().second;
  for (const auto& [name, c] : routes) {
    if (c != ref)
      throw RouteMismatch("route " + name + " disagrees with route " + routes.front().first);
    r.routes.push_back(name);
  }
  r.certificates = ref;
  r.element = element_from_certificates(degree, ref);
  r.positive = certificates_positive(ref);
  return r;
}

bool wants(Route selected, Route r) { return selected == Route::All || selected == r; }

}  // namespace

Route parse_route(const std::string& s) {
  if (s == "all") return Route::All;
  if (s == "F") return Route::Fundamental;
  if (s == "Lstar") return Route::LStar;
  if (s == "Ostar") return Route::OStar;
  throw InvalidArgument("unknown route '" + s + "' (expected all, F, Lstar or Ostar)");
}

const char* route_name(Route r) {
  switch (r) {
    case Route::All: return "all";
    case Route::Fundamental: return "F";
    case Route::LStar: return "Lstar";
    case Route::OStar: return "Ostar";
  }
  return "?";
}

Certificates certificates_of(const QSymElement& e) {
  QSymElement psi = to_basis(e, Basis::Psi);
  Certificates c;
  for (const auto& [a, coeff] : psi.terms()) c.emplace(a, coeff * Rational(z_of(a.parts())));
  return c;
}

QSymElement element_from_certificates(int degree, const Certificates& c) {
  QSymElement e(degree, Basis::Psi);
  for (const auto& [a, v] : c) e.add(a, v * Rational(1, z_of(a.parts())));
  return e;
}

bool certificates_positive(const Certificates& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second.has_nonnegative_integer_coefficients(); });
}

QSymElement kp_fundamental(const LabeledPoset& p) {
  QSymElement r(p.size(), Basis::Fundamental);
  for (const Permutation& s : posets::linear_extensions(p)) r.add(Composition::from_set(posets::des_set(s), p.size()), 1);
  return r;
}

PsiReport kp_psi(const LabeledPoset& p, Route route) {
  require_natural(p);
  const int n = p.size();
  std::vector<std::pair<std::string, Certificates>> routes;
  if (wants(route, Route::Fundamental))
    routes.emplace_back("F", certificates_of(f_to_psi(kp_fundamental(p))));
  if (wants(route, Route::LStar)) routes.emplace_back("Lstar", lstar_certificates(p, plain_weigher()));
  if (wants(route, Route::OStar)) routes.emplace_back("Ostar", ostar_certificates(p.poset(), plain_weigher()));
  return assemble(n, routes);
}

PsiReport kp_psi(const Poset& p, Route route) { return kp_psi(posets::naturally_labeled(p), route); }

QSymElement kp_monomial_oracle(const Poset& p) {
  QSymElement r(p.size(), Basis::Monomial);
  for (const Surjection& f : posets::all_surjections(p)) r.add(f.type(), 1);
  return r;
}

TruncatedPoly colorings_truncated(const Poset& p, int m, bool strict) {
  const int n = p.size();
  std::vector<int> order = posets::canonical_natural_labels(p);
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) seq[static_cast<std::size_t>(order[static_cast<std::size_t>(x)] - 1)] = x;
  TruncatedPoly out;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> expo(static_cast<std::size_t>(m), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      truncated_add(out, TruncatedPoly{{expo, ParamPoly(1)}});
      return;
    }
    int x = seq[static_cast<std::size_t>(i)];
    int low = 1;
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) low = std::max(low, color[static_cast<std::size_t>(y)] + (strict ? 1 : 0));
    for (int c = low; c <= m; ++c) {
      color[static_cast<std::size_t>(x)] = c;
      ++expo[static_cast<std::size_t>(c - 1)];
      rec(i + 1);
      --expo[static_cast<std::size_t>(c - 1)];
    }
    color[static_cast<std::size_t>(x)] = 0;
  };
  rec(0);
  return out;
}

PsiReport kp_omega_strict(const LabeledPoset& p, Route route) {
  if (!p.is_order_reversing()) throw InvalidArgument("labeling is not order-reversing");
  // omega sends F_S to F_{[n-1] - (n - S)}, which turns the Jordan-Hoelder set of
  // (P, w) into that of the dual with the same labels; w is natural there.
  PsiReport r = kp_psi(LabeledPoset(p.poset().dual(), p.labels()), route);
  r.notes.push_back("omega K_{P,w} computed as K_{P*,w}");
  return r;
}

namespace {

PsiReport kpe_closed(const LabeledPoset& p, const Equivalence& e, Route route) {
  std::vector<std::pair<std::string, Certificates>> routes;
  if (wants(route, Route::LStar))
    routes.emplace_back("Lstar", lstar_certificates(p, class_weigher(p.poset(), e)));
  if (wants(route, Route::OStar) || route == Route::Fundamental) {
    const Poset& order = p.poset();
    BlockWeigher inner = class_weigher(order, e);
    Certificates c;
    for (const Surjection& f : posets::all_surjections(order)) {
      if (!constant_on_classes(f, e) || !posets::fibers_have_unique_minimum(order, f)) continue;
      std::vector<ElementMask> fibers;
      for (int i = 1; i <= f.fiber_count(); ++i) fibers.push_back(f.fiber(i));
      if (auto w = inner(f.type(), fibers)) add_cert(c, w->first, w->second);
    }
    routes.emplace_back("Ostar", std::move(c));
  }
  return assemble(p.size(), routes);
}

Equivalence split_off(const Equivalence& e, int cls, int lone) {
  std::vector<std::vector<int>> blocks = e.blocks();
  auto& b = blocks[static_cast<std::size_t>(cls)];
  b.erase(std::find(b.begin(), b.end(), lone));
  blocks.push_back({lone});
  return Equivalence::from_blocks(e.size(), blocks);
}

}  // namespace

PsiReport kpe_psi(const LabeledPoset& p, const Equivalence& e, Route route) {
  require_natural(p);
  if (e.size() != p.size()) throw InvalidArgument("equivalence size differs from poset size");
  if (posets::is_chain_congruence(p.poset(), e)) {
    PsiReport r = kpe_closed(p, e, route);
    if (route == Route::All) {
      RecursionCheck rc = kpe_recursion_check(p, e);
      if (rc.applicable && !rc.holds) throw RouteMismatch("K_{P,E} recursion fails");
      if (rc.applicable) r.routes.push_back("recursion");
    }
    return r;
  }
  posets::ChainClosure cc = posets::chain_congruence_closure(p, e);
  PsiReport r = kpe_psi(cc.poset, cc.closed, route);
  r.closure = cc.closed;
  r.closed_poset = cc.poset;
  r.notes.push_back("E is not a chain congruence; computed on its chain-congruence closure");
  return r;
}

QSymElement kpe_monomial_oracle(const Poset& p, const Equivalence& e) {
  QSymElement r(p.size(), Basis::Monomial);
  for (const Surjection& f : posets::all_surjections(p))
    if (constant_on_classes(f, e)) r.add(f.type(), 1);
  return r;
}

RecursionCheck kpe_recursion_check(const LabeledPoset& p, const Equivalence& e) {
  RecursionCheck rc;
  const Poset& order = p.poset();
  if (!posets::is_chain_congruence(order, e)) throw InvalidArgument("recursion needs a chain congruence");
  int cls = -1;
  for (std::size_t c = 0; c < e.blocks().size(); ++c)
    if (e.blocks()[c].size() >= 2) {
      cls = static_cast<int>(c);
      break;
    }
  if (cls < 0) return rc;
  rc.applicable = true;
  rc.split_class = e.blocks()[static_cast<std::size_t>(cls)];
  ElementMask cmask = e.block_mask(cls);
  int bottom = std::countr_zero(order.minimal_in(cmask));
  int top = std::countr_zero(order.maximal_in(cmask));

  Equivalence top_split = split_off(e, cls, top);
  Equivalence bottom_split = split_off(e, cls, bottom);
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : order.strict_relations())
    if (!(y == top && (cmask & bit(x)))) rel.emplace_back(x, y);
  LabeledPoset loosened(Poset::from_relations(p.size(), rel), p.labels());

  QSymElement lhs = kpe_closed(p, e, Route::OStar).element;
  QSymElement rhs = kpe_closed(p, top_split, Route::OStar).element;
  rhs += kpe_closed(p, bottom_split, Route::OStar).element;
  rhs -= kpe_closed(loosened, top_split, Route::OStar).element;
  rc.holds = lhs.identical(rhs);
  return rc;
}

PsiReport kpd_psi(const LabeledPoset& p, const std::vector<int>& weights, Route route) {
  require_natural(p);
  const int n = p.size();
  if (static_cast<int>(weights.size()) != n) throw InvalidArgument("one weight per poset element is required");
  for (int d : weights)
    if (d < 0) throw InvalidArgument("weights must be nonnegative");
  int total = 0;
  for (int d : weights) total += d;
  if (std::any_of(weights.begin(), weights.end(), [](int d) { return d == 0; })) {
    PsiReport r;
    r.element = to_basis(kpd_monomial_oracle(p.poset(), weights), Basis::Psi);
    r.certificates = certificates_of(r.element);
    r.positive = certificates_positive(r.certificates);
    r.routes.push_back("monomial-oracle");
    r.notes.push_back(
        "warning: a zero weight is outside the positivity theorem; expansion taken from the leading-variable "
        "monomial coefficients");
    return r;
  }
  std::vector<std::pair<std::string, Certificates>> routes;
  if (wants(route, Route::LStar))
    routes.emplace_back("Lstar", lstar_certificates(p, weight_weigher(p.poset(), weights)));
  if (wants(route, Route::OStar) || route == Route::Fundamental)
    routes.emplace_back("Ostar", ostar_certificates(p.poset(), weight_weigher(p.poset(), weights)));
  return assemble(total, routes);
}

QSymElement kpd_monomial_oracle(const Poset& p, const std::vector<int>& weights) {
  const int n = p.size();
  if (static_cast<int>(weights.size()) != n) throw InvalidArgument("one weight per poset element is required");
  ElementMask positive = 0;
  int total = 0;
  for (int x = 0; x < n; ++x) {
    int d = weights[static_cast<std::size_t>(x)];
    if (d < 0) throw InvalidArgument("weights must be nonnegative");
    if (d > 0) positive |= bit(x);
    total += d;
  }
  // A zero-weight element with nothing of positive weight above it could take
  // arbitrarily large colors.
  for (int x = 0; x < n; ++x)
    if (!(positive & bit(x)) && !(p.up_set(x) & positive))
      throw InvalidArgument("a zero-weight element must lie below an element of positive weight");

  const int colors = std::popcount(positive);
  std::vector<int> order = posets::canonical_natural_labels(p);
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) seq[static_cast<std::size_t>(order[static_cast<std::size_t>(x)] - 1)] = x;

  QSymElement r(total, Basis::Monomial);
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> load(static_cast<std::size_t>(colors + 1), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> parts;
      for (int c = 1; c <= colors && load[static_cast<std::size_t>(c)] > 0; ++c)
        parts.push_back(load[static_cast<std::size_t>(c)]);
      int sum = 0;
      for (int v : parts) sum += v;
      if (sum != total) return;  // a color was skipped
      r.add(Composition(parts), 1);
      return;
    }
    int x = seq[static_cast<std::size_t>(i)];
    int low = 1;
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) low = std::max(low, color[static_cast<std::size_t>(y)]);
    for (int c = low; c <= colors; ++c) {
      color[static_cast<std::size_t>(x)] = c;
      load[static_cast<std::size_t>(c)] += weights[static_cast<std::size_t>(x)];
      rec(i + 1);
      load[static_cast<std::size_t>(c)] -= weights[static_cast<std::size_t>(x)];
    }
    color[static_cast<std::size_t>(x)] = 0;
  };
  rec(0);
  return r;
}

}  // namespace qsym::pp
