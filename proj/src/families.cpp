#include "qsymkit/families.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "qsymkit/error.hpp"

namespace qsym::families {

using posets::ElementMask;

namespace {

const ParamPoly kQ = ParamPoly::var(Param::q);
const ParamPoly kY = ParamPoly::var(Param::y);
const ParamPoly kZ = ParamPoly::var(Param::z);

// Every surjective coloring [n] -> [l]; colors are 1-based.
void for_each_surjective_coloring(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int blocks) {
    if (v == n) {
      std::vector<int> perm(static_cast<std::size_t>(blocks));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        for (int x = 0; x < n; ++x)
          color[static_cast<std::size_t>(x)] = perm[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])];
        fn(color, blocks);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(v)] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    fn(color, 0);
    return;
  }
  rec(0, 0);
}

Composition type_of(const std::vector<int>& color, int colors) {
  std::vector<int> parts(static_cast<std::size_t>(colors), 0);
  for (int c : color) ++parts[static_cast<std::size_t>(c - 1)];
  return Composition(parts);
}

int ascents(const DirectedGraph& g, const std::vector<int>& c) {
  int a = 0;
  for (auto [i, j] : g.edges)
    if (c[static_cast<std::size_t>(i)] < c[static_cast<std::size_t>(j)]) ++a;
  return a;
}

int inversions(const DirectedGraph& g, const std::vector<int>& c) {
  int a = 0;
  for (auto [i, j] : g.edges)
    if (c[static_cast<std::size_t>(i)] > c[static_cast<std::size_t>(j)]) ++a;
  return a;
}

bool proper(const DirectedGraph& g, const std::vector<int>& c) {
  for (auto [i, j] : g.edges)
    if (c[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(j)]) return false;
  return true;
}

void check_edges(const DirectedGraph& g) {
  g.validate();
  if (g.edges.size() > 20) throw InvalidArgument("at most 20 edges are supported");
}

// Certificates of K_P for a natural labeling, memoised on the relation matrix.
const Certificates& poset_certificates(const Poset& p) {
  static std::mutex mu;
  static std::map<std::vector<ElementMask>, Certificates> cache;
  std::vector<ElementMask> key;
  for (int x = 0; x < p.size(); ++x) key.push_back(p.up_set(x));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Certificates c = pp::kp_psi(p, pp::Route::OStar).certificates;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(c)).first->second;
}

void add_scaled(Certificates& acc, const Certificates& c, const ParamPoly& w) {
  for (const auto& [a, v] : c) {
    ParamPoly t = v * w;
    auto [it, fresh] = acc.emplace(a, t);
    if (!fresh) {
      it->second += t;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

enum class EdgeState : std::uint8_t { Skip, Forward, Backward };
struct EdgeChoice {
  EdgeState state;
  ParamPoly weight;
};

// Sum over per-edge choices of weight * K_{P,w} (w order-reversing), as
// certificates of the omega image: omega K_{P,w} = K_{P*} for the dual P*.
// Choices that close a directed cycle vanish.
Certificates orientation_sum(const DirectedGraph& g, const std::vector<std::vector<EdgeChoice>>& choices,
                             const std::function<bool(const std::vector<EdgeState>&)>& keep = nullptr) {
  Certificates acc;
  std::vector<EdgeState> state(g.edges.size());
  std::function<void(std::size_t, const ParamPoly&)> rec = [&](std::size_t e, const ParamPoly& w) {
    if (e == g.edges.size()) {
      if (keep && !keep(state)) return;
      std::vector<std::pair<int, int>> arcs;
      for (std::size_t i = 0; i < state.size(); ++i) {
        auto [a, b] = g.edges[i];
        if (state[i] == EdgeState::Forward) arcs.emplace_back(a, b);
        if (state[i] == EdgeState::Backward) arcs.emplace_back(b, a);
      }
      auto p = posets::orientation_closure(g.n, arcs);
      if (p) add_scaled(acc, poset_certificates(p->dual()), w);
      return;
    }
    for (const EdgeChoice& c : choices[e]) {
      state[e] = c.state;
      rec(e + 1, w * c.weight);
    }
  };
  rec(0, ParamPoly(1));
  return acc;
}

Orientation orientation_of(const std::vector<EdgeState>& s) {
  Orientation o;
  for (std::size_t e = 0; e < s.size(); ++e)
    if (s[e] == EdgeState::Backward) o.reversed |= std::uint32_t(1) << e;
  return o;
}

bool balanced(const Orientation& theta, const std::vector<std::vector<DirectedGraph::CycleEdge>>& cycles, int k) {
  for (const auto& cyc : cycles) {
    int fwd = 0, bwd = 0;
    for (const auto& c : cyc) {
      if (c.along != theta.is_reversed(c.edge)) ++fwd;
      else ++bwd;
    }
    if (fwd < k || bwd < k) return false;
  }
  return true;
}

FamilyReport finish(QSymElement function, Certificates certs, const std::function<ParamPoly(const ParamPoly&)>& shift) {
  FamilyReport r;
  r.function = std::move(function);
  r.certificates = std::move(certs);
  r.omega_psi = pp::element_from_certificates(r.function.degree(), r.certificates);
  r.positive = pp::certificates_positive(r.certificates);
  QSymElement shifted = r.function.map_coefficients(shift);
  r.routes_agree = omega(shifted) == r.omega_psi;
  return r;
}

ParamPoly identity(const ParamPoly& c) { return c; }
ParamPoly shift_q(const ParamPoly& c) { return c.substitute(Param::q, kQ + ParamPoly(1)); }

std::vector<EdgeChoice> forward_or_back(const ParamPoly& fw) {
  return {{EdgeState::Forward, fw}, {EdgeState::Backward, ParamPoly(1)}};
}

void require_subset(const DirectedGraph& g, const std::vector<int>& strict) {
  std::set<int> seen;
  for (int e : strict) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw InvalidArgument("edge subset refers to a missing edge");
    if (!seen.insert(e).second) throw InvalidArgument("edge subset lists an edge twice");
  }
}

}  // namespace

QSymElement chromatic_x(const DirectedGraph& g) {
  check_edges(g);
  QSymElement r(g.n, Basis::Monomial);
  for_each_surjective_coloring(g.n, [&](const std::vector<int>& c, int l) {
    if (proper(g, c)) r.add(type_of(c, l), ParamPoly::var(Param::q, static_cast<unsigned>(ascents(g, c))));
  });
  return r;
}

bool is_k_balanced(const Orientation& theta, const DirectedGraph& g, int k) {
  if (!g.is_simple()) throw InvalidArgument("k-balanced orientations need a graph without multiple edges");
  if (k < 1) throw InvalidArgument("k must be positive");
  return balanced(theta, g.undirected_cycles(), k);
}

QSymElement k_balanced_x(const DirectedGraph& g, int k) {
  check_edges(g);
  if (!g.is_simple()) throw InvalidArgument("k-balanced orientations need a graph without multiple edges");
  if (k < 1) throw InvalidArgument("k must be positive");
  const auto cycles = g.undirected_cycles();
  QSymElement r(g.n, Basis::Monomial);
  for_each_surjective_coloring(g.n, [&](const std::vector<int>& c, int l) {
    if (!proper(g, c)) return;
    Orientation theta;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      if (c[static_cast<std::size_t>(i)] > c[static_cast<std::size_t>(j)]) theta.reversed |= std::uint32_t(1) << e;
    }
    if (balanced(theta, cycles, k))
      r.add(type_of(c, l), ParamPoly::var(Param::q, static_cast<unsigned>(ascents(g, c))));
  });
  return r;
}

QSymElement llt_unicellular(const DirectedGraph& g) { return llt_vertical_coloring(g, {}); }

QSymElement llt_vertical_coloring(const DirectedGraph& g, const std::vector<int>& strict) {
  check_edges(g);
  require_subset(g, strict);
  QSymElement r(g.n, Basis::Monomial);
  for_each_surjective_coloring(g.n, [&](const std::vector<int>& c, int l) {
    for (int e : strict) {
      auto [i, j] = g.edges[static_cast<std::size_t>(e)];
      if (c[static_cast<std::size_t>(i)] >= c[static_cast<std::size_t>(j)]) return;
    }
    int power = ascents(g, c) - static_cast<int>(strict.size());
    r.add(type_of(c, l), ParamPoly::var(Param::q, static_cast<unsigned>(power)));
  });
  return r;
}

QSymElement b_polynomial(const DirectedGraph& g) {
  check_edges(g);
  QSymElement r(g.n, Basis::Monomial);
  for_each_surjective_coloring(g.n, [&](const std::vector<int>& c, int l) {
    Exponent e;
    e.e[1] = static_cast<std::uint16_t>(ascents(g, c));
    e.e[2] = static_cast<std::uint16_t>(inversions(g, c));
    r.add(type_of(c, l), ParamPoly::term(e, 1));
  });
  return r;
}

FamilyReport chromatic_psi(const DirectedGraph& g) {
  check_edges(g);
  std::vector<std::vector<EdgeChoice>> choices(g.edges.size(), forward_or_back(kQ));
  return finish(chromatic_x(g), orientation_sum(g, choices), identity);
}

FamilyReport k_balanced_psi(const DirectedGraph& g, int k) {
  QSymElement f = k_balanced_x(g, k);
  const auto cycles = g.undirected_cycles();
  std::vector<std::vector<EdgeChoice>> choices(g.edges.size(), forward_or_back(kQ));
  Certificates c =
      orientation_sum(g, choices, [&](const std::vector<EdgeState>& s) { return balanced(orientation_of(s), cycles, k); });
  return finish(std::move(f), std::move(c), identity);
}

FamilyReport llt_psi(const DirectedGraph& g) { return llt_vertical(g, {}); }

FamilyReport llt_vertical(const DirectedGraph& g, const std::vector<int>& strict) {
  QSymElement f = llt_vertical_coloring(g, strict);
  std::vector<std::vector<EdgeChoice>> choices(g.edges.size(),
                                               {{EdgeState::Forward, kQ}, {EdgeState::Skip, ParamPoly(1)}});
  for (int e : strict) choices[static_cast<std::size_t>(e)] = {{EdgeState::Forward, ParamPoly(1)}};
  return finish(std::move(f), orientation_sum(g, choices), shift_q);
}

FamilyReport b_psi(const DirectedGraph& g) {
  QSymElement f = b_polynomial(g);
  std::vector<std::vector<EdgeChoice>> choices(
      g.edges.size(), {{EdgeState::Skip, ParamPoly(1)}, {EdgeState::Forward, kY}, {EdgeState::Backward, kZ}});
  auto shift = [](const ParamPoly& c) {
    return c.substitute(Param::y, kY + ParamPoly(1)).substitute(Param::z, kZ + ParamPoly(1));
  };
  return finish(std::move(f), orientation_sum(g, choices), shift);
}

BSpecialisations b_specialisations(const DirectedGraph& g) {
  BSpecialisations r;
  const QSymElement b = b_polynomial(g);
  const unsigned edges = static_cast<unsigned>(g.edges.size());

  const QSymElement x = chromatic_x(g);
  QSymElement bqz = b.map_coefficients([](const ParamPoly& c) { return c.substitute(Param::y, kQ * kZ); });
  r.chromatic = bqz.map_coefficients([&](const ParamPoly& c) { return c.coefficient_of(Param::z, edges); }) == x;
  r.chromatic_as_printed =
      bqz.map_coefficients([&](const ParamPoly& c) { return c.coefficient_of(Param::z, static_cast<unsigned>(g.n)); }) == x;

  const QSymElement llt = llt_unicellular(g);
  auto at_z = [&](long zval) {
    return b.map_coefficients(
        [&](const ParamPoly& c) { return c.substitute(Param::y, kQ).substitute(Param::z, ParamPoly(zval)); });
  };
  r.llt = at_z(1) == llt;
  r.llt_as_printed = at_z(0) == llt;

  // B(y, y) = sum_k c_k y^k; then y^{|E|} Tutte(1/y - 1) = B(y,y) means
  // Tutte(q) = sum_k c_k (1+q)^{|E|-k}.
  const QSymElement byy = b.map_coefficients([](const ParamPoly& c) { return c.substitute(Param::z, kY); });
  const QSymElement tutte_from_b = byy.map_coefficients([&](const ParamPoly& c) {
    ParamPoly out;
    for (unsigned k = 0; k <= c.degree(Param::y); ++k)
      out += c.coefficient_of(Param::y, k) * (kQ + ParamPoly(1)).pow(edges - k);
    return out;
  });
  r.tutte = tutte_from_b == from_sym(tutte_multivariate(g));
  return r;
}

SymElement tutte_multivariate(const DirectedGraph& g) {
  check_edges(g);
  SymElement r(g.n, SymBasis::p);
  const std::size_t m = g.edges.size();
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << m); ++s) {
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (std::size_t e = 0; e < m; ++e)
      if ((s >> e) & 1U) parent[static_cast<std::size_t>(find(g.edges[e].first))] = find(g.edges[e].second);
    std::map<int, int> sizes;
    for (int v = 0; v < g.n; ++v) ++sizes[find(v)];
    std::vector<int> parts;
    for (auto [root, sz] : sizes) parts.push_back(sz);
    r.add(Partition::sorted(parts), ParamPoly::var(Param::q, static_cast<unsigned>(std::popcount(s))));
  }
  return r;
}

Matroid::Matroid(int n, const std::vector<std::vector<int>>& bases) : n_(n) {
  if (n < 0 || n > posets::kMaxPosetSize) throw InvalidArgument("matroid ground set size out of range");
  if (bases.empty()) throw InvalidArgument("a matroid needs at least one basis");
  std::set<std::uint32_t> seen;
  for (const auto& b : bases) {
    std::uint32_t m = 0;
    for (int e : b) {
      if (e < 0 || e >= n) throw InvalidArgument("basis element outside the ground set");
      if (m & (std::uint32_t(1) << e)) throw InvalidArgument("basis lists an element twice");
      m |= std::uint32_t(1) << e;
    }
    if (!seen.insert(m).second) throw InvalidArgument("basis listed twice");
  }
  bases_.assign(seen.begin(), seen.end());
  rank_ = std::popcount(bases_.front());
  for (std::uint32_t b : bases_)
    if (std::popcount(b) != rank_) throw InvalidArgument("bases must all have the same size");
  for (std::uint32_t b1 : bases_)
    for (std::uint32_t b2 : bases_)
      for (std::uint32_t rest = b1 & ~b2; rest; rest &= rest - 1) {
        std::uint32_t x = rest & (~rest + 1);
        bool found = false;
        for (std::uint32_t cand = b2 & ~b1; cand && !found; cand &= cand - 1) {
          std::uint32_t y = cand & (~cand + 1);
          found = seen.count((b1 & ~x) | y) > 0;
        }
        if (!found) throw InvalidArgument("basis exchange axiom fails");
      }
}

Matroid Matroid::uniform(int n, int r) {
  if (r < 0 || r > n) throw InvalidArgument("uniform matroid needs 0 <= r <= n");
  std::vector<std::vector<int>> bases;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
    if (std::popcount(m) != r) continue;
    std::vector<int> b;
    for (int e = 0; e < n; ++e)
      if ((m >> e) & 1U) b.push_back(e);
    bases.push_back(b);
  }
  return Matroid(n, bases);
}

bool Matroid::is_basis(std::uint32_t m) const { return std::binary_search(bases_.begin(), bases_.end(), m); }

Poset Matroid::basis_poset(std::uint32_t basis) const {
  if (!is_basis(basis)) throw InvalidArgument("not a basis");
  std::vector<std::pair<int, int>> rel;
  for (int e = 0; e < n_; ++e) {
    if (!((basis >> e) & 1U)) continue;
    for (int f = 0; f < n_; ++f) {
      if ((basis >> f) & 1U) continue;
      if (is_basis((basis & ~(std::uint32_t(1) << e)) | (std::uint32_t(1) << f))) rel.emplace_back(e, f);
    }
  }
  return Poset::from_relations(n_, rel);
}

bool is_generic(const Matroid& m, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != m.size()) throw InvalidArgument("one value per ground-set element is required");
  long best = -1;
  int count = 0;
  for (std::uint32_t b : m.bases()) {
    long s = 0;
    for (int e = 0; e < m.size(); ++e)
      if ((b >> e) & 1U) s += f[static_cast<std::size_t>(e)];
    if (best < 0 || s < best) {
      best = s;
      count = 1;
    } else if (s == best) {
      ++count;
    }
  }
  return count == 1;
}

QSymElement matroid_f(const Matroid& m) {
  QSymElement r(m.size(), Basis::Monomial);
  for_each_surjective_coloring(m.size(), [&](const std::vector<int>& c, int l) {
    if (is_generic(m, c)) r.add(type_of(c, l), 1);
  });
  return r;
}

FamilyReport matroid_psi(const Matroid& m) {
  Certificates acc;
  for (std::uint32_t b : m.bases()) add_scaled(acc, poset_certificates(m.basis_poset(b).dual()), ParamPoly(1));
  return finish(matroid_f(m), std::move(acc), identity);
}

std::vector<std::vector<int>> generic_noninjective_witnesses(const Matroid& m, std::size_t limit) {
  std::vector<std::vector<int>> out;
  for_each_surjective_coloring(m.size(), [&](const std::vector<int>& c, int l) {
    if (out.size() >= limit || l == m.size()) return;  // l == n means injective
    if (is_generic(m, c)) out.push_back(c);
  });
  return out;
}

QSymElement uniform_matroid_closed_form(int n, int r, bool printed) {
  if (r < 0 || r > n || n < 1) throw InvalidArgument("closed form needs 0 <= r <= n, n >= 1");
  const int m = n - r;
  QSymElement e(n, Basis::Psi);
  auto shape = [](int ones_before, int middle, int ones_after) {
    std::vector<int> parts(static_cast<std::size_t>(ones_before), 1);
    parts.push_back(middle);
    parts.insert(parts.end(), static_cast<std::size_t>(ones_after), 1);
    return Composition(parts);
  };
  if (printed) {
    if (r < 1) throw InvalidArgument("printed closed form needs r >= 1");
    for (int k = 0; k <= m; ++k) e.add(shape(r - 1, k + 1, m - k), Rational(binomial(n, k + 1)));
    return e;
  }
  // Free matroid or rank zero: the basis poset is an antichain.
  if (m == 0 || r == 0) {
    e.add(Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1);
    return e;
  }
  for (int k = 0; k <= r; ++k)
    e.add(shape(m - 1, k + 1, r - k), Rational(k == 0 ? Integer(1) : binomial(n, k + 1)));
  return e;
}

std::map<int, QSymElement> eulerian_q(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::map<int, QSymElement> out;
  Permutation s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    auto [it, fresh] = out.try_emplace(posets::exc(s), n, Basis::Fundamental);
    it->second.add(Composition::from_set(posets::dex_set(s), n), 1);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::map<int, QSymElement> cycle_eulerian_q(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::map<int, QSymElement> out;
  // (a_1 ... a_{n-1} n) for every arrangement a of [n-1].
  std::vector<int> a(static_cast<std::size_t>(n - 1));
  std::iota(a.begin(), a.end(), 1);
  do {
    std::vector<int> cyc = a;
    cyc.push_back(n);
    Permutation s(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cyc.size(); ++i) s[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    auto [it, fresh] = out.try_emplace(posets::exc(s), n, Basis::Fundamental);
    it->second.add(Composition::from_set(posets::dex_set(s), n), 1);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

QSymElement q_weighted_sum(const std::map<int, QSymElement>& family, int degree) {
  QSymElement r(degree, Basis::Fundamental);
  for (const auto& [j, e] : family) r += e * ParamPoly::var(Param::q, static_cast<unsigned>(j));
  return r;
}

Certificates path_certificates(int n) {
  Certificates acc;
  for (SubsetMask s = 0; s < (SubsetMask(1) << (n - 1)); ++s)
    add_scaled(acc, poset_certificates(posets::zigzag_path(s, n)), ParamPoly::var(Param::q, static_cast<unsigned>(mask_size(s))));
  return acc;
}

Certificates cycle_certificates(int n) {
  Certificates acc;
  if (n < 2) return acc;
  for (SubsetMask s = 1; s + 1 < (SubsetMask(1) << n); ++s)
    add_scaled(acc, poset_certificates(posets::zigzag_cycle(s, n)), ParamPoly::var(Param::q, static_cast<unsigned>(mask_size(s))));
  return acc;
}

namespace {

ParamPoly qint_product(const std::vector<int>& parts) {
  ParamPoly r(1);
  for (int a : parts) r *= q_int(static_cast<unsigned>(a));
  return r;
}

// [a]_{q^d}
ParamPoly qint_power(unsigned a, unsigned d) { return q_int(a).substitute(Param::q, ParamPoly::var(Param::q, d)); }

}  // namespace

Certificates path_closed_form(int n) {
  Certificates c;
  for (const Composition& a : compositions(n))
    c.emplace(a, eulerian_poly(static_cast<unsigned>(a.length())) * qint_product(a.parts()));
  return c;
}

Certificates cycle_closed_form(int n) {
  Certificates c;
  if (n < 2) return c;
  for (const Composition& a : compositions(n)) {
    ParamPoly v = a.length() == 1 ? kQ * q_int(static_cast<unsigned>(n - 1))
                                  : kQ * eulerian_poly(static_cast<unsigned>(a.length() - 1)) * qint_product(a.parts());
    c.emplace(a, v * Rational(n));
  }
  return c;
}

SymElement eulerian_closed_form(int n) {
  SymElement r(n, SymBasis::p);
  for (const Partition& l : partitions(n))
    r.add(l, eulerian_poly(static_cast<unsigned>(l.length())) * qint_product(l.parts()) * Rational(1, z_of(l.parts())));
  return r;
}

SymElement necklace_closed_form(int n) {
  SymElement r(n, SymBasis::p);
  for (const Partition& l : partitions(n)) {
    if (l.length() == 1) {
      r.add(l, q_int(static_cast<unsigned>(n)));
      continue;
    }
    ParamPoly v = kQ * eulerian_poly(static_cast<unsigned>(l.length() - 1)) * qint_product(l.parts());
    r.add(l, v * Rational(n) * Rational(1, z_of(l.parts())));
  }
  return r;
}

SymElement necklace_route(int n) {
  SymElement r = n >= 2 ? to_sym(pp::element_from_certificates(n, cycle_certificates(n)), SymBasis::p) : SymElement(n, SymBasis::p);
  r.add(Partition{n}, 1);
  return r;
}

SymElement cycle_eulerian_closed_form(int n, bool printed) {
  SymElement r(n, SymBasis::p);
  for (const Partition& l : partitions(n)) {
    int g = 0;
    for (int part : l.parts()) g = std::gcd(g, part);
    const int len = l.length();
    ParamPoly sum;
    for (int d : divisors(g)) {
      int mu = moebius_mu(d);
      if (!mu) continue;
      const unsigned ud = static_cast<unsigned>(d);
      ParamPoly lead = (printed || len > 1)
                           ? ParamPoly::var(Param::q, ud) *
                                 eulerian_poly(static_cast<unsigned>(len - 1)).substitute(Param::q, ParamPoly::var(Param::q, ud))
                           : ParamPoly(1);
      ParamPoly term = lead;
      for (int part : l.parts()) term *= qint_power(static_cast<unsigned>(part / d), ud);
      Integer dpow = 1;
      for (int i = 0; i + 1 < len; ++i) dpow *= d;
      sum += term * Rational(dpow * mu);
    }
    r.add(l, sum * Rational(1, z_of(l.parts())));
  }
  return r;
}

SymElement cycle_eulerian_by_inversion(int n) {
  SymElement r(n, SymBasis::p);
  for (int d : divisors(n)) {
    int mu = moebius_mu(d);
    if (!mu) continue;
    SymElement inner = necklace_route(n / d);
    for (const auto& [l, c] : inner.terms()) {
      std::vector<int> parts = l.parts();
      for (int& part : parts) part *= d;
      ParamPoly v = c.substitute(Param::q, ParamPoly::var(Param::q, static_cast<unsigned>(d)));
      r.add(Partition(parts), v * Rational(mu, n));
    }
  }
  return r;
}

std::pair<ParamPoly, ParamPoly> amusing_identity_sides(int n) {
  ParamPoly lhs, rhs;
  for (int d : divisors(n)) {
    int mu = moebius_mu(d);
    if (!mu) continue;
    ParamPoly t = qint_power(static_cast<unsigned>(n / d), static_cast<unsigned>(d));
    lhs += t * Rational(mu);
    rhs += ParamPoly::var(Param::q, static_cast<unsigned>(d)) * t * Rational(mu);
  }
  return {lhs, rhs};
}

namespace {

// Words of length n over barred/unbarred letters with values <= m.
// `circular` closes the monotonicity conditions around the end.
TruncatedPoly word_oracle(int n, int m, bool circular) {
  TruncatedPoly out;
  std::vector<int> value(static_cast<std::size_t>(n));
  std::vector<bool> barred(static_cast<std::size_t>(n));
  auto step_ok = [&](int i, int k) {
    int a = value[static_cast<std::size_t>(i)], b = value[static_cast<std::size_t>(k)];
    return barred[static_cast<std::size_t>(i)] ? a >= b : a <= b;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int bars = static_cast<int>(std::count(barred.begin(), barred.end(), true));
      if (circular) {
        if (!step_ok(n - 1, 0) || bars == n) return;
      } else if (barred[static_cast<std::size_t>(n - 1)]) {
        return;
      }
      std::vector<int> expo(static_cast<std::size_t>(m), 0);
      for (int v : value) ++expo[static_cast<std::size_t>(v - 1)];
      truncated_add(out, TruncatedPoly{{expo, ParamPoly::var(Param::q, static_cast<unsigned>(bars))}});
      return;
    }
    for (int v = 1; v <= m; ++v)
      for (bool b : {false, true}) {
        value[static_cast<std::size_t>(i)] = v;
        barred[static_cast<std::size_t>(i)] = b;
        if (i > 0 && !step_ok(i - 1, i)) continue;
        rec(i + 1);
      }
  };
  rec(0);
  return out;
}

}  // namespace

TruncatedPoly banner_oracle(int n, int m) { return word_oracle(n, m, false); }
TruncatedPoly circular_word_oracle(int n, int m) { return word_oracle(n, m, true); }

QSymElement schur(const Partition& lambda) { return schur_fundamental(lambda); }

Integer roichman_coeff(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("partitions must have the same size");
  const Composition alpha = mu.as_composition();
  const SubsetMask set = alpha.set_mask();
  Integer r = 0;
  for (const Tableau& t : standard_young_tableaux(lambda)) {
    SubsetMask d = tableau_descents(t);
    if (!unimodal::is_alpha_unimodal(d, alpha)) continue;
    if (mask_size(d & ~set) % 2) r -= 1;
    else r += 1;
  }
  return r;
}

DirectedGraph rooted_tree_graph(const std::vector<int>& parent) {
  DirectedGraph g{static_cast<int>(parent.size()), {}};
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) g.edges.emplace_back(parent[v], static_cast<int>(v));
  return g;
}

TreeReport distinguishes_rooted_trees(int n) {
  TreeReport r;
  const auto trees = posets::rooted_tree_parents(n);
  r.trees = static_cast<int>(trees.size());
  std::vector<QSymElement> xs;
  for (const auto& parent : trees) {
    QSymElement x = chromatic_x(rooted_tree_graph(parent));
    QSymElement top = x.map_coefficients([&](const ParamPoly& c) { return c.coefficient_of(Param::q, static_cast<unsigned>(n - 1)); });
    QSymElement k = pp::kp_fundamental(posets::order_reversing_labeled(posets::rooted_tree(parent)));
    if (!(top == k)) r.top_coefficient_matches = false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (xs[i].identical(x) && r.distinct) {
        r.distinct = false;
        r.clash = {trees[i], parent};
      }
    xs.push_back(std::move(x));
  }
  return r;
}

std::array<Poset, 4> counterexample_posets() {
  return {Poset::from_relations(4, {{0, 3}, {1, 3}, {2, 3}}),
          Poset::from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
          Poset::from_relations(4, {{0, 1}, {0, 2}, {0, 3}}),
          Poset::from_relations(4, {{0, 1}, {1, 2}, {1, 3}})};
}

std::vector<DirectedGraph> oriented_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::vector<int>> seen;
  std::vector<DirectedGraph> out;
  std::vector<int> state(pairs.size(), 0);  // 0 none, 1 i->j, 2 j->i
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < pairs.size()) {
      for (int s = 0; s < 3; ++s) {
        state[k] = s;
        rec(k + 1);
      }
      return;
    }
    // adjacency matrix code, minimised over relabelings
    std::vector<int> adj(static_cast<std::size_t>(n * n), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto [i, j] = pairs[e];
      if (state[e] == 1) adj[static_cast<std::size_t>(i * n + j)] = 1;
      if (state[e] == 2) adj[static_cast<std::size_t>(j * n + i)] = 1;
    }
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> code(static_cast<std::size_t>(n * n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          code[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * n + perm[static_cast<std::size_t>(b)])] =
              adj[static_cast<std::size_t>(a * n + b)];
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) return;
    DirectedGraph g{n, {}};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (best[static_cast<std::size_t>(a * n + b)]) g.edges.emplace_back(a, b);
    out.push_back(g);
  };
  rec(0);
  return out;
}

}  // namespace qsym::families
