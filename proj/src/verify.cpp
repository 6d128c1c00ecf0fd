#include "qsymkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/search.hpp"
#include "qsymkit/unimodal.hpp"

namespace qsym::verify {

using io::Json;
using posets::DirectedGraph;
using posets::Equivalence;
using posets::LabeledPoset;
using posets::Poset;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Erratum: return "erratum";
    case Status::Report: return "report";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"unimodal", "cons", "bases", "kp", "kpe", "families", "counterexamples"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

bool all_passed(const std::vector<Check>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

std::vector<Check> run_parallel(const std::vector<std::function<Check()>>& jobs, int threads) {
  std::vector<Check> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

namespace {

using Witness = std::optional<Json>;

Check make(std::string name, Witness w, const std::string& ok_detail, const std::string& bad_detail = "") {
  Check c;
  c.name = std::move(name);
  if (w) {
    c.status = Status::Fail;
    c.detail = bad_detail.empty() ? "counterexample found" : bad_detail;
    c.witness = std::move(*w);
  } else {
    c.detail = ok_detail;
  }
  return c;
}

// Wrap a job so that exceptions (route mismatches above all) become failures.
std::function<Check()> guarded(std::string name, std::function<Check()> body) {
  return [name, body = std::move(body)]() {
    try {
      return body();
    } catch (const std::exception& e) {
      Check c;
      c.name = name;
      c.status = Status::Fail;
      c.detail = std::string("exception: ") + e.what();
      return c;
    }
  };
}

std::string perm_word(const Permutation& s) {
  std::string w;
  for (int x : s) w += std::to_string(x);
  return w;
}

Json poset_json(const Poset& p) { return io::to_json(posets::naturally_labeled(p)); }

std::vector<Poset> posets_up_to(int n, int from = 1) {
  std::vector<Poset> out;
  for (int k = from; k <= n; ++k)
    for (auto& p : posets::all_posets(k)) out.push_back(std::move(p));
  return out;
}

std::string count_detail(std::size_t k, const std::string& what) { return std::to_string(k) + " " + what; }

// ---------------------------------------------------------------- unimodal

void unimodal_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  using namespace unimodal;
  for (int k = 1; k <= n; ++k) {
    std::string name = "unimodal.counts n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      for (const Composition& a : compositions(k)) {
        if (Integer(enumerate_unimodal(a).size()) != count_unimodal(a))
          return make(name, Json{{"alpha", a.parts()}, {"set", "U"}}, "");
        if (Integer(enumerate_v(a).size()) != count_v(a)) return make(name, Json{{"alpha", a.parts()}, {"set", "V"}}, "");
      }
      return make(name, std::nullopt, "|U| and |V| match enumeration for all compositions");
    }));
  }
  jobs.push_back(guarded("unimodal.pair_recursion", [n] {
    for (int k = 0; k <= n; ++k) {
      Integer enumerated = unimodal_pair_count(k);
      if (enumerated != unimodal_pair_recursion(k))
        return make("unimodal.pair_recursion", Json{{"n", k}, {"enumerated", enumerated.get_str()}}, "");
      if (k >= 2 && enumerated != 4 * unimodal_pair_count(k - 1) - unimodal_pair_count(k - 2))
        return make("unimodal.pair_recursion", Json{{"n", k}}, "");
    }
    return make("unimodal.pair_recursion", std::nullopt, "f(n) = 4f(n-1) - f(n-2) through n = " + std::to_string(n));
  }));
  jobs.push_back(guarded("unimodal.trivariate_series", [n] {
    for (int k = 0; k <= std::min(n, 8); ++k)
      if (!(unimodal_series_coefficient(k) == unimodal_series_enumerated(k)))
        return make("unimodal.trivariate_series", Json{{"n", k}}, "");
    return make("unimodal.trivariate_series", std::nullopt, "generating function matches enumeration");
  }));
  jobs.push_back(guarded("unimodal.characterisations", [n] {
    for (int k = 1; k <= std::min(n, 8); ++k)
      for (const Composition& a : compositions(k))
        for (SubsetMask s = 0; s <= full_mask(k - 1); ++s)
          if (is_alpha_unimodal(s, a) != is_alpha_unimodal_local(s, a))
            return make("unimodal.characterisations", Json{{"alpha", a.parts()}, {"set", mask_elements(s)}}, "");
    return make("unimodal.characterisations", std::nullopt, "prefix and local rules agree");
  }));
  jobs.push_back(guarded("unimodal.moebius", [n] {
    // Recursive Moebius function of U_alpha under inclusion.
    for (int k = 1; k <= std::min(n, 6); ++k)
      for (const Composition& a : compositions(k)) {
        std::map<SubsetMask, int> mu;
        auto sets = enumerate_unimodal(a);
        std::sort(sets.begin(), sets.end(), [](SubsetMask x, SubsetMask y) {
          return mask_size(x) != mask_size(y) ? mask_size(x) < mask_size(y) : x < y;
        });
        for (SubsetMask s : sets) {
          int v = s == 0 ? 1 : 0;
          if (s != 0)
            for (const auto& [t, m] : mu)
              if ((t & s) == t && t != s) v -= m;
          mu[s] = v;
          if (v != moebius_unimodal(a, s))
            return make("unimodal.moebius", Json{{"alpha", a.parts()}, {"set", mask_elements(s)}, {"expected", v}}, "");
        }
      }
    return make("unimodal.moebius", std::nullopt, "closed form matches recursive definition");
  }));
  jobs.push_back(guarded("unimodal.v_order_ideal", [n] {
    for (int k = 1; k <= std::min(n, 7); ++k)
      for (const Composition& a : compositions(k))
        if (!is_order_ideal_of_refinement(enumerate_v(a), k))
          return make("unimodal.v_order_ideal", Json{{"alpha", a.parts()}}, "");
    return make("unimodal.v_order_ideal", std::nullopt, "V_alpha is an order ideal");
  }));
  jobs.push_back(guarded("unimodal.v_not_sublattice", [n] {
    Check c;
    c.name = "unimodal.v_not_sublattice";
    auto w = find_non_sublattice_witness(std::min(n, 7));
    if (!w) {
      c.status = Status::Report;
      c.detail = "no witness found in range";
      return c;
    }
    c.status = Status::Pass;
    c.detail = "witness found";
    c.witness = Json{{"alpha", w->alpha.parts()}, {"first", w->first.parts()}, {"second", w->second.parts()},
                     {"join", w->join.parts()}};
    return c;
  }));
}

// ---------------------------------------------------------------- cons

void cons_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  using namespace unimodal;
  for (int k = 1; k <= n; ++k) {
    std::string name = "cons.hook_formula n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      const Integer nf = factorial(k);
      for (const Composition& a : compositions(k))
        for (const Composition& b : coarsenings(a)) {
          HookForest f = hook_forest(a, b);
          Integer c = cons_count(a, b);
          if (c * pi_rel(a, b) != nf || f.hook_product() != pi_rel(a, b) ||
              Integer(forest_labelings(f).size()) != c)
            return make(name, Json{{"alpha", a.parts()}, {"beta", b.parts()}, {"cons", c.get_str()}}, "");
        }
      return make(name, std::nullopt, "|CONS| * pi = n! for every refining pair");
    }));
  }
  jobs.push_back(guarded("cons.hook_example", [] {
    Composition a{2, 3, 1, 2}, b{6, 2};
    Integer hp = hook_forest(a, b).hook_product(), c = cons_count(a, b);
    Witness w;
    if (hp != 120 || c != 336) w = Json{{"hook_product", hp.get_str()}, {"cons", c.get_str()}};
    return make("cons.hook_example", w, "hook product 120, |CONS| = 336");
  }));
  jobs.push_back(guarded("cons.membership_examples", [] {
    Composition a{1, 2, 1, 2, 3}, b{3, 1, 5};
    bool ok = is_consistent({4, 3, 8, 7, 5, 6, 2, 1, 9}, a, b) && !is_consistent({4, 3, 8, 7, 6, 5, 2, 1, 9}, a, b) &&
              !is_consistent({4, 3, 8, 7, 5, 9, 2, 1, 6}, a, b);
    return make("cons.membership_examples", ok ? Witness{} : Witness{Json("membership mismatch")},
                "438756219 in, 438765219 and 438759216 out");
  }));
  for (int k = 1; k <= n; ++k) {
    std::string name = "cons.alternating_sum n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      const Integer nf = factorial(k);
      for (const Composition& b : compositions(k))
        for (const Composition& g : compositions(k)) {
          Integer expected = refines(b, g) ? nf : Integer(0);
          Integer got = cons_alternating_sum(b, g);
          if (got != expected)
            return make(name, Json{{"beta", b.parts()}, {"gamma", g.parts()}, {"got", got.get_str()}}, "");
        }
      return make(name, std::nullopt, "sum equals n! [beta <= gamma]");
    }));
  }
}

// ---------------------------------------------------------------- bases

QSymElement basis_element(Basis b, const Composition& a) { return QSymElement::single(b, a); }

void bases_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  for (int k = 0; k <= n; ++k) {
    std::string name = "bases.f_to_psi n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      for (const Composition& a : compositions(k)) {
        QSymElement f = basis_element(Basis::Fundamental, a);
        if (!f_to_psi(f).identical(m_to_psi(f_to_m(f))))
          return make(name, Json{{"set", a.set()}, {"degree", k}}, "");
      }
      return make(name, std::nullopt, "direct formula equals the monomial pivot");
    }));
    std::string rt = "bases.round_trip n=" + std::to_string(k);
    jobs.push_back(guarded(rt, [k, rt] {
      const Basis all[] = {Basis::Monomial, Basis::Fundamental, Basis::Psi};
      for (Basis from : all)
        for (Basis to : all)
          for (const Composition& a : compositions(k)) {
            QSymElement x = basis_element(from, a);
            if (!to_basis(to_basis(x, to), from).identical(x))
              return make(rt, Json{{"from", basis_name(from)}, {"to", basis_name(to)}, {"index", a.parts()}}, "");
          }
      return make(rt, std::nullopt, "conversions invert each other");
    }));
  }
  jobs.push_back(guarded("bases.omega", [n] {
    for (int k = 0; k <= std::min(n, 7); ++k)
      for (const Composition& a : compositions(k)) {
        for (Basis b : {Basis::Monomial, Basis::Fundamental, Basis::Psi}) {
          QSymElement x = basis_element(b, a);
          if (!omega(omega(x)).identical(x))
            return make("bases.omega", Json{{"basis", basis_name(b)}, {"index", a.parts()}}, "", "omega is not an involution");
        }
        QSymElement expected(k, Basis::Psi);
        expected.add(a.reversed(), (k - a.length()) % 2 ? -1 : 1);
        if (!omega(basis_element(Basis::Psi, a)).identical(expected))
          return make("bases.omega", Json{{"psi", a.parts()}}, "", "omega(Psi) sign rule fails");
      }
    return make("bases.omega", std::nullopt, "involution and Psi sign rule hold");
  }));
  jobs.push_back(guarded("bases.power_sum_symmetry", [n] {
    for (int k = 1; k <= std::min(n, 7); ++k)
      for (const Partition& l : partitions(k)) {
        QSymElement s(k, Basis::Psi);
        for (const Composition& a : rearrangements(l)) s.add(a, 1);
        if (!is_symmetric_monomial(to_basis(s, Basis::Monomial)) || !is_symmetric(s))
          return make("bases.power_sum_symmetry", Json{{"lambda", l.parts()}}, "");
      }
    // Psi_12 alone is not symmetric; both tests must say so.
    QSymElement lone = basis_element(Basis::Psi, Composition{1, 2});
    if (is_symmetric(lone) || is_symmetric_monomial(to_basis(lone, Basis::Monomial)))
      return make("bases.power_sum_symmetry", Json{{"psi", {1, 2}}}, "", "non-symmetric element accepted");
    return make("bases.power_sum_symmetry", std::nullopt, "rearrangement sums are symmetric");
  }));
  jobs.push_back(guarded("bases.psi231", [] {
    QSymElement expected(6, Basis::Monomial);
    expected.add(Composition{6}, Rational(1, 10));
    expected.add(Composition{2, 4}, Rational(1, 4));
    expected.add(Composition{5, 1}, Rational(3, 5));
    expected.add(Composition{2, 3, 1}, 1);
    QSymElement got = psi_to_m(basis_element(Basis::Psi, Composition{2, 3, 1}));
    Witness w;
    if (!got.identical(expected)) w = Json(got.to_string());
    return make("bases.psi231", w, got.to_string());
  }));
  jobs.push_back(guarded("bases.truncation_homomorphism", [n] {
    const int m = 3;
    for (int a = 1; a <= std::min(n, 3); ++a)
      for (int b = 1; b <= std::min(n, 3); ++b)
        for (const Composition& x : compositions(a))
          for (const Composition& y : compositions(b)) {
            QSymElement px = basis_element(Basis::Psi, x), fy = basis_element(Basis::Fundamental, y);
            if (expand_truncated(product(px, fy), m) != truncated_product(expand_truncated(px, m), expand_truncated(fy, m)))
              return make("bases.truncation_homomorphism", Json{{"psi", x.parts()}, {"f", y.parts()}}, "");
            QSymElement sum = px;
            if (a == b) {
              sum += fy;
              auto lhs = expand_truncated(sum, m);
              auto rhs = expand_truncated(px, m);
              truncated_add(rhs, expand_truncated(fy, m));
              if (lhs != rhs) return make("bases.truncation_homomorphism", Json{{"psi", x.parts()}, {"f", y.parts()}}, "");
            }
          }
    return make("bases.truncation_homomorphism", std::nullopt, "truncation respects sums and products");
  }));
  jobs.push_back(guarded("bases.degree_zero", [] {
    bool ok = true;
    for (Basis from : {Basis::Monomial, Basis::Fundamental, Basis::Psi})
      for (Basis to : {Basis::Monomial, Basis::Fundamental, Basis::Psi}) {
        QSymElement u = basis_element(from, Composition{});
        QSymElement v = to_basis(u, to);
        ok = ok && v.terms().size() == 1 && v.coeff(Composition{}) == ParamPoly(1);
      }
    return make("bases.degree_zero", ok ? Witness{} : Witness{Json("unit not fixed")}, "empty composition fixed");
  }));
}

// ---------------------------------------------------------------- kp

LabeledPoset example_poset() {
  return LabeledPoset(Poset::from_relations(5, {{0, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 4}}), {1, 2, 3, 4, 5});
}

// Posets whose certificates must agree on all routes; failures surface as RouteMismatch.
Witness kp_routes(const LabeledPoset& p) {
  auto r = pp::kp_psi(p);
  if (!r.positive) return Json{{"poset", io::to_json(p)}, {"reason", "negative certificate"}};
  if (r.routes.size() != 3) return Json{{"poset", io::to_json(p)}, {"reason", "not all routes ran"}};
  return std::nullopt;
}

void kp_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  for (int k = 1; k <= n; ++k) {
    std::string name = "kp.routes n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      auto ps = posets::all_posets(k);
      for (const Poset& p : ps)
        if (auto w = kp_routes(posets::naturally_labeled(p))) return make(name, w, "");
      return make(name, std::nullopt, count_detail(ps.size(), "posets, F = L* = O*, certificates in N"));
    }));
  }
  for (int k = 1; k <= std::min(n, 5); ++k) {
    std::string name = "kp.natural_labelings n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      std::size_t count = 0;
      for (const Poset& p : posets::all_posets(k)) {
        pp::Certificates first;
        bool have = false;
        for (const LabeledPoset& l : posets::all_natural_labelings(p)) {
          ++count;
          if (auto w = kp_routes(l)) return make(name, w, "");
          auto c = pp::kp_psi(l, pp::Route::LStar).certificates;
          if (have && c != first)
            return make(name, Json{{"poset", io::to_json(l)}, {"reason", "depends on labeling"}}, "");
          first = c;
          have = true;
        }
      }
      return make(name, std::nullopt, count_detail(count, "natural labelings agree"));
    }));
    std::string oracle = "kp.monomial_oracle n=" + std::to_string(k);
    jobs.push_back(guarded(oracle, [k, oracle] {
      for (const Poset& p : posets::all_posets(k))
        if (!(pp::kp_psi(p, pp::Route::OStar).element == pp::kp_monomial_oracle(p)))
          return make(oracle, Json{{"poset", poset_json(p)}}, "");
      return make(oracle, std::nullopt, "Psi expansion equals the surjection oracle");
    }));
  }
  jobs.push_back(guarded("kp.example_poset", [] {
    LabeledPoset p = example_poset();
    std::set<std::string> ext, star23, l23;
    for (const auto& s : posets::linear_extensions(p)) ext.insert(perm_word(s));
    for (const auto& s : posets::l_star_alpha(p, Composition{2, 3})) star23.insert(perm_word(s));
    auto l23_list = posets::l_alpha(p, Composition{2, 3});
    bool ok = ext == std::set<std::string>{"13245", "12345", "21345", "12435", "21435"} &&
              star23 == std::set<std::string>{"13245"} && l23_list.size() == 5 &&
              posets::l_star_alpha(p, Composition{4, 1}).empty();
    Witness w;
    if (!ok) w = Json{{"extensions", ext}, {"lstar23", star23}};
    return make("kp.example_poset", w, "L, L*_23 = {13245}, L*_41 empty");
  }));
  jobs.push_back(guarded("kp.lemma_descents", [n] {
    Json converse;
    for (const Poset& p : posets_up_to(std::min(n, 6))) {
      LabeledPoset l = posets::naturally_labeled(p);
      for (const Composition& a : compositions(p.size())) {
        std::set<Permutation> star;
        for (const auto& s : posets::l_star_alpha(l, a)) {
          if ((posets::des_set(s) & ~a.set_mask()) != 0)
            return make("kp.lemma_descents", Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}, {"sigma", s}}, "");
          star.insert(s);
        }
        if (converse.is_null())
          for (const auto& s : posets::linear_extensions(l))
            if ((posets::des_set(s) & ~a.set_mask()) == 0 && !star.count(s)) {
              converse = Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}, {"sigma", s}};
              break;
            }
      }
    }
    Check c = make("kp.lemma_descents", std::nullopt, "DES inside Set(alpha) on L*; converse fails on the witness");
    c.witness = converse;
    if (converse.is_null()) {
      c.status = Status::Fail;
      c.detail = "no witness against the converse";
    }
    return c;
  }));
  jobs.push_back(guarded("kp.involution", [n] {
    for (const Poset& p : posets_up_to(std::min(n, 5))) {
      LabeledPoset l = posets::naturally_labeled(p);
      for (const Composition& a : compositions(p.size())) {
        auto la = posets::l_alpha(l, a);
        auto star = posets::l_star_alpha(l, a);
        std::set<Permutation> star_set(star.begin(), star.end()), la_set(la.begin(), la.end());
        long signed_sum = 0;
        for (const auto& s : la) {
          int extra = mask_size(posets::des_set(s) & ~a.set_mask());
          signed_sum += extra % 2 ? -1 : 1;
          if (star_set.count(s)) continue;
          Permutation t = posets::involution_phi(l, a, s);
          int extra_t = mask_size(posets::des_set(t) & ~a.set_mask());
          if (!la_set.count(t) || star_set.count(t) || posets::involution_phi(l, a, t) != s ||
              std::abs(extra - extra_t) != 1)
            return make("kp.involution", Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}, {"sigma", s}}, "");
        }
        if (signed_sum != static_cast<long>(star.size()))
          return make("kp.involution", Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}, {"sum", signed_sum}}, "");
      }
    }
    return make("kp.involution", std::nullopt, "sign-reversing involution; signed sum = |L*|");
  }));
  jobs.push_back(guarded("kp.bijection", [n] {
    for (const Poset& p : posets_up_to(std::min(n, 5))) {
      LabeledPoset l = posets::naturally_labeled(p);
      for (const Composition& a : compositions(p.size())) {
        auto star = posets::l_star_alpha(l, a);
        auto fs = posets::surjections_star(p, a);
        if (star.size() != fs.size())
          return make("kp.bijection", Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}}, "");
        std::set<posets::Surjection> images;
        for (const auto& s : star) {
          auto f = posets::sigma_to_f(l, a, s);
          if (posets::f_to_sigma(l, f) != s)
            return make("kp.bijection", Json{{"poset", io::to_json(l)}, {"sigma", s}}, "");
          images.insert(f);
        }
        if (images != std::set<posets::Surjection>(fs.begin(), fs.end()))
          return make("kp.bijection", Json{{"poset", io::to_json(l)}, {"alpha", a.parts()}}, "");
      }
    }
    return make("kp.bijection", std::nullopt, "L* and O* in bijection");
  }));
  jobs.push_back(guarded("kp.bipartite_closed_form", [n] {
    const int bound = n + 2;
    for (int r = 1; r < bound; ++r)
      for (int m = 1; r + m <= bound; ++m) {
        auto cert = pp::kp_psi(posets::complete_bipartite(r, m), pp::Route::OStar).certificates;
        pp::Certificates expected;
        for (int k = 0; k <= m; ++k) {
          std::vector<int> parts(static_cast<std::size_t>(r - 1), 1);
          parts.push_back(k + 1);
          parts.insert(parts.end(), static_cast<std::size_t>(m - k), 1);
          expected[Composition(parts)] = ParamPoly(Rational(factorial(r) * factorial(m) / factorial(k)));
        }
        if (cert != expected) return make("kp.bipartite_closed_form", Json{{"r", r}, {"m", m}}, "");
      }
    return make("kp.bipartite_closed_form", std::nullopt, "r!m!/k! for r + m <= " + std::to_string(bound));
  }));
  jobs.push_back(guarded("kp.path_closed_form", [n] {
    for (int k = 1; k <= n + 1; ++k)
      if (families::path_certificates(k) != families::path_closed_form(k))
        return make("kp.path_closed_form", Json{{"n", k}}, "");
    return make("kp.path_closed_form", std::nullopt, "A_l(q) prod [alpha_i]_q through n = " + std::to_string(n + 1));
  }));
  jobs.push_back(guarded("kp.cycle_closed_form", [n] {
    for (int k = 2; k <= n + 1; ++k)
      if (families::cycle_certificates(k) != families::cycle_closed_form(k))
        return make("kp.cycle_closed_form", Json{{"n", k}}, "");
    return make("kp.cycle_closed_form", std::nullopt, "n q A_{l-1}(q) prod [alpha_i]_q and n q [n-1]_q");
  }));
  jobs.push_back(guarded("kp.omega_strict", [n] {
    for (const Poset& p : posets_up_to(std::min(n, 4))) {
      LabeledPoset rev = posets::order_reversing_labeled(p);
      QSymElement strict = omega(pp::kp_omega_strict(rev).element);
      if (expand_truncated(strict, p.size()) != pp::colorings_truncated(p, p.size(), true) ||
          !(strict == pp::kp_fundamental(rev)))
        return make("kp.omega_strict", Json{{"poset", poset_json(p)}}, "");
    }
    return make("kp.omega_strict", std::nullopt, "omega of the dual route gives strict P-partitions");
  }));
  jobs.push_back(guarded("kp.symmetric_labelings", [n] {
    // Recorded only; nothing is claimed about these.
    std::size_t seen = 0, symmetric = 0;
    for (const Poset& p : posets_up_to(std::min(n, 4))) {
      if (p.strict_relations().empty()) continue;
      ++seen;
      if (is_symmetric(pp::kp_fundamental(posets::order_reversing_labeled(p)))) ++symmetric;
    }
    return make("kp.symmetric_labelings", std::nullopt,
                std::to_string(symmetric) + " of " + std::to_string(seen) + " order-reversing labelings give symmetric K_{P,w}");
  }));
  jobs.push_back(guarded("kp.disjoint_chains", [n] {
    for (int k = 1; k <= n; ++k)
      for (const Partition& l : partitions(k)) {
        auto e = pp::kp_psi(posets::disjoint_chains(l.parts()), pp::Route::OStar).element;
        if (!(e == sym_basis_element(SymBasis::h, l))) return make("kp.disjoint_chains", Json{{"lambda", l.parts()}}, "");
      }
    return make("kp.disjoint_chains", std::nullopt, "disjoint chains give h_lambda");
  }));
  jobs.push_back(guarded("kp.symmetric_combinations_p_positive", [n] {
    // Any positive symmetric combination of K_P is p-positive.
    std::size_t found = 0;
    for (int k = 2; k <= std::min(n, 5); ++k) {
      auto r = search::search_positivity(k, 60, 0x5eed0000ULL + static_cast<unsigned>(k), 4);
      for (const auto& c : r.symmetric) {
        ++found;
        if (!c.p_positive) {
          Json ps = Json::array();
          for (const auto& p : c.posets) ps.push_back(poset_json(p));
          return make("kp.symmetric_combinations_p_positive", Json{{"posets", ps}, {"p", c.p->to_string()}}, "");
        }
      }
    }
    if (found == 0) return make("kp.symmetric_combinations_p_positive", Json("no symmetric combination sampled"), "");
    return make("kp.symmetric_combinations_p_positive", std::nullopt, count_detail(found, "symmetric combinations, all p-positive"));
  }));
}

// ---------------------------------------------------------------- kpe

void for_each_weight(int size, int max_weight, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> d(static_cast<std::size_t>(size), 1);
  while (true) {
    if (!f(d)) return;
    int i = 0;
    while (i < size && d[static_cast<std::size_t>(i)] == max_weight) d[static_cast<std::size_t>(i++)] = 1;
    if (i == size) return;
    ++d[static_cast<std::size_t>(i)];
  }
}

void kpe_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  for (int k = 1; k <= n; ++k) {
    std::string name = "kpe.oracle n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      std::size_t chain = 0, closed = 0;
      for (const Poset& p : posets::all_posets(k)) {
        LabeledPoset l = posets::naturally_labeled(p);
        for (const Equivalence& e : posets::all_equivalences(k)) {
          bool cc = posets::is_chain_congruence(p, e);
          auto r = pp::kpe_psi(l, e);
          (cc ? chain : closed)++;
          if (!r.positive || !(r.element == pp::kpe_monomial_oracle(p, e)))
            return make(name, Json{{"poset", io::to_json(l)}, {"equivalence", io::to_json(e)}}, "");
          if (cc && !e.is_discrete() && std::find(r.routes.begin(), r.routes.end(), "recursion") == r.routes.end())
            return make(name, Json{{"poset", io::to_json(l)}, {"reason", "recursion not checked"}}, "");
        }
      }
      return make(name, std::nullopt,
                  std::to_string(chain) + " chain congruences (recursion checked), " + std::to_string(closed) +
                      " closed equivalences");
    }));
  }
  for (int k = 1; k <= n; ++k) {
    std::string name = "kpd.oracle n=" + std::to_string(k);
    jobs.push_back(guarded(name, [k, name] {
      std::size_t count = 0;
      Witness w;
      for (const Poset& p : posets::all_posets(k)) {
        LabeledPoset l = posets::naturally_labeled(p);
        for_each_weight(k, 3, [&](const std::vector<int>& d) {
          ++count;
          auto r = pp::kpd_psi(l, d);
          if (!r.positive || !(r.element == pp::kpd_monomial_oracle(p, d))) {
            w = Json{{"poset", io::to_json(l)}, {"weights", d}};
            return false;
          }
          return true;
        });
        if (w) break;
      }
      return make(name, w, count_detail(count, "weightings with d <= 3"));
    }));
  }
  jobs.push_back(guarded("kpe.quotient_equivalence", [n] {
    for (const Poset& p : posets_up_to(std::min(n, 5)))
      for (const Equivalence& e : posets::all_equivalences(p.size())) {
        if (!posets::is_chain_congruence(p, e)) continue;
        auto q = posets::quotient(p, e);
        auto lhs = pp::kpd_psi(posets::naturally_labeled(q.poset), q.weights, pp::Route::OStar).element;
        auto rhs = pp::kpe_psi(posets::naturally_labeled(p), e, pp::Route::OStar).element;
        if (!(lhs == rhs))
          return make("kpe.quotient_equivalence", Json{{"poset", poset_json(p)}, {"equivalence", io::to_json(e)}}, "");
      }
    return make("kpe.quotient_equivalence", std::nullopt, "weighted quotient equals partitioned form");
  }));
  jobs.push_back(guarded("kpe.trivial_cases", [n] {
    for (const Poset& p : posets_up_to(std::min(n, 5))) {
      LabeledPoset l = posets::naturally_labeled(p);
      auto base = pp::kp_psi(l, pp::Route::OStar).element;
      if (!pp::kpe_psi(l, Equivalence(p.size()), pp::Route::OStar).element.identical(base) ||
          !pp::kpd_psi(l, std::vector<int>(static_cast<std::size_t>(p.size()), 1), pp::Route::OStar).element.identical(base))
        return make("kpe.trivial_cases", Json{{"poset", poset_json(p)}}, "");
    }
    return make("kpe.trivial_cases", std::nullopt, "discrete E and unit weights give K_P");
  }));
  jobs.push_back(guarded("kpd.zero_weight_chain", [] {
    auto r = pp::kpd_psi(posets::naturally_labeled(posets::chain(3)), {1, 0, 2});
    QSymElement expected(3, Basis::Psi);
    expected.add(Composition{3}, Rational(-1, 3));
    expected.add(Composition{1, 2}, 2);
    Witness w;
    if (!r.element.identical(expected) || r.positive) w = Json(r.element.to_string());
    return make("kpd.zero_weight_chain", w, "d = (1,0,2): " + r.element.to_string());
  }));
  jobs.push_back(guarded("kpd.antichain_power_sums", [n] {
    for (int k = 1; k <= std::min(n + 1, 6); ++k)
      for (const Partition& l : partitions(k)) {
        auto e = pp::kpd_psi(posets::naturally_labeled(posets::antichain(l.length())), l.parts()).element;
        if (!(e == sym_basis_element(SymBasis::p, l))) return make("kpd.antichain_power_sums", Json{{"lambda", l.parts()}}, "");
      }
    return make("kpd.antichain_power_sums", std::nullopt, "weighted antichain gives p_lambda");
  }));
}

// ---------------------------------------------------------------- families

Check erratum(std::string name, bool printed_holds, const std::string& detail, Json witness) {
  Check c;
  c.name = std::move(name);
  c.status = printed_holds ? Status::Pass : Status::Erratum;
  c.detail = printed_holds ? "printed form holds" : detail;
  if (!printed_holds) c.witness = std::move(witness);
  return c;
}

pp::Certificates parse_certificates(const std::vector<std::pair<Composition, std::string>>& rows) {
  pp::Certificates c;
  for (const auto& [a, text] : rows) c[a] = io::parse_poly_text(text);
  return c;
}

DirectedGraph graph_g() { return {4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}}; }
DirectedGraph graph_h() { return {5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}}}; }

template <class Fn>
Check graph_sweep(const std::string& name, int max_n, Fn fn, const std::string& ok) {
  std::size_t count = 0;
  for (int k = 1; k <= max_n; ++k)
    for (const DirectedGraph& g : families::oriented_graphs(k)) {
      ++count;
      if (auto w = fn(g)) return make(name, Json{{"graph", io::to_json(g)}, {"detail", *w}}, "");
    }
  return make(name, std::nullopt, count_detail(count, ok));
}

Witness family_ok(const families::FamilyReport& r) {
  if (!r.routes_agree) return Json("routes disagree");
  if (!r.positive) return Json("negative certificate");
  return std::nullopt;
}

std::vector<families::Matroid> small_matroids(int max_n) {
  std::vector<families::Matroid> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 0; r <= n; ++r) {
      std::vector<std::vector<int>> subsets;
      for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (mask_size(m) != r) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1U) s.push_back(i);
        subsets.push_back(s);
      }
      for (std::uint64_t pick = 1; pick < (1ULL << subsets.size()); ++pick) {
        std::vector<std::vector<int>> bases;
        for (std::size_t i = 0; i < subsets.size(); ++i)
          if (pick >> i & 1ULL) bases.push_back(subsets[i]);
        try {
          out.emplace_back(n, bases);
        } catch (const InvalidArgument&) {
        }
      }
    }
  return out;
}

void families_jobs(int n, std::vector<std::function<Check()>>& jobs) {
  jobs.push_back(guarded("families.chromatic_fixture_g", [] {
    auto r = families::chromatic_psi(graph_g());
    auto expected = parse_certificates({{{4}, "4*q + 4*q^2 + 4*q^3"},
                                        {{1, 3}, "2 + 4*q + 4*q^3 + 2*q^4"},
                                        {{2, 2}, "4*q + 8*q^2 + 4*q^3"},
                                        {{3, 1}, "4*q + 4*q^2 + 4*q^3"},
                                        {{1, 1, 2}, "4*q + 8*q^2 + 4*q^3"},
                                        {{1, 2, 1}, "4 + 4*q + 4*q^3 + 4*q^4"},
                                        {{2, 1, 1}, "4*q + 8*q^2 + 4*q^3"},
                                        {{1, 1, 1, 1}, "4 + 4*q + 8*q^2 + 4*q^3 + 4*q^4"}});
    Witness w;
    if (r.certificates != expected || !r.routes_agree) w = io::to_json(r.certificates);
    return make("families.chromatic_fixture_g", w, "all eight terms reproduced; Psi121 coefficient not unimodal");
  }));
  jobs.push_back(guarded("families.chromatic_fixture_h", [] {
    auto r = families::chromatic_psi(graph_h());
    ParamPoly c = r.certificates[Composition{1, 3, 1}];
    Witness w;
    if (!(c == io::parse_poly_text("2 + 5*q + 4*q^2 + 5*q^3 + 2*q^4")) || is_unimodal(c)) w = Json(c.to_string());
    return make("families.chromatic_fixture_h", w, "Psi131: " + c.to_string());
  }));
  jobs.push_back(guarded("families.chromatic", [n] {
    return graph_sweep("families.chromatic", n, [](const DirectedGraph& g) { return family_ok(families::chromatic_psi(g)); },
                       "oriented graphs, coloring route = orientation route, c in N[q]");
  }));
  jobs.push_back(guarded("families.k_balanced", [n] {
    const int bound = std::min(n, 4);
    Check c = graph_sweep("families.k_balanced", bound, [](const DirectedGraph& g) -> Witness {
      auto one = families::k_balanced_psi(g, 1);
      if (auto w = family_ok(one)) return w;
      if (!(one.function == families::chromatic_x(g))) return Json("k = 1 differs from X_G");
      for (int k = 2; k <= 3; ++k)
        if (auto w = family_ok(families::k_balanced_psi(g, k))) return w;
      return std::nullopt;
    }, "oriented graphs, k = 1..3");
    if (c.status == Status::Pass) {
      auto cyc = families::k_balanced_psi(DirectedGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}, 2);
      if (auto w = family_ok(cyc)) return make("families.k_balanced", Json{{"graph", "directed 4-cycle"}, {"detail", *w}}, "");
    }
    return c;
  }));
  jobs.push_back(guarded("families.llt", [n] {
    return graph_sweep("families.llt", n, [](const DirectedGraph& g) { return family_ok(families::llt_psi(g)); },
                       "oriented graphs, omega G(x;q+1) Psi-positive");
  }));
  jobs.push_back(guarded("families.llt_unimodality", [n] {
    Check c = graph_sweep("families.llt_unimodality", n, [](const DirectedGraph& g) -> Witness {
      for (const auto& [a, p] : families::llt_psi(g).certificates)
        if (!is_unimodal(p)) return Json{{"alpha", a.parts()}, {"coeff", p.to_string()}};
      return std::nullopt;
    }, "oriented graphs, every coefficient unimodal");
    if (c.status == Status::Fail) c.status = Status::Report;  // a conjecture, not a theorem
    return c;
  }));
  jobs.push_back(guarded("families.llt_vertical", [n] {
    std::size_t count = 0;
    for (int k = 1; k <= std::min(n, 4); ++k)
      for (const DirectedGraph& g : families::oriented_graphs(k)) {
        const int m = static_cast<int>(g.edges.size());
        for (unsigned s = 0; s < (1U << m); ++s) {
          std::vector<int> strict;
          for (int e = 0; e < m; ++e)
            if (s >> e & 1U) strict.push_back(e);
          ++count;
          auto r = families::llt_vertical(g, strict);
          if (auto w = family_ok(r))
            return make("families.llt_vertical", Json{{"graph", io::to_json(g)}, {"strict", strict}, {"detail", *w}}, "");
          if (strict.empty() && !(r.function == families::llt_unicellular(g)))
            return make("families.llt_vertical", Json{{"graph", io::to_json(g)}, {"detail", "S empty differs"}}, "");
        }
      }
    return make("families.llt_vertical", std::nullopt, count_detail(count, "(G,S) pairs, routes agree, c in N[q]"));
  }));
  jobs.push_back(guarded("families.llt_vertical_fixture", [] {
    DirectedGraph g{5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}};
    auto r = families::llt_vertical(g, {0, 1});
    ParamPoly target = io::parse_poly_text("1 + q^2");
    bool printed = false;
    auto it = r.certificates.find(Composition{1, 2});
    printed = it != r.certificates.end() && it->second == target;
    return erratum("families.llt_vertical_fixture", printed,
                   "the stated (G,S) has degree 5, so Psi12 cannot occur; no coefficient is 1 + q^2",
                   io::to_json(r.certificates));
  }));
  jobs.push_back(guarded("families.llt_vertical_not_unimodal", [] {
    // Smallest instance found by exhaustive search.
    DirectedGraph g{4, {{1, 2}, {1, 3}, {2, 0}, {3, 0}, {3, 2}}};
    auto r = families::llt_vertical(g, {0, 3, 4});
    ParamPoly c = r.certificates[Composition{2, 2}];
    Check out = make("families.llt_vertical_not_unimodal",
                     c == io::parse_poly_text("1 + q^2") ? Witness{} : Witness{Json(c.to_string())},
                     "Psi22 coefficient 1 + q^2");
    if (out.status == Status::Pass)
      out.witness = Json{{"graph", io::to_json(g)}, {"strict", Json::array({Json::array({2, 3}), Json::array({4, 1}), Json::array({4, 3})})},
                         {"alpha", {2, 2}}, {"coeff", c.to_string()}};
    return out;
  }));
  jobs.push_back(guarded("families.b_polynomial", [n] {
    return graph_sweep("families.b_polynomial", std::min(n, 4),
                       [](const DirectedGraph& g) { return family_ok(families::b_psi(g)); },
                       "oriented graphs, omega B(x;y+1,z+1) Psi-positive");
  }));
  jobs.push_back(guarded("families.b_specialisations", [n] {
    return graph_sweep("families.b_specialisations", std::min(n, 4), [](const DirectedGraph& g) -> Witness {
      auto s = families::b_specialisations(g);
      if (!s.chromatic) return Json("X_G != [z^|E|] B(qz,z)");
      if (!s.llt) return Json("G_G != B(q,1)");
      if (!s.tutte) return Json("Tutte relation fails");
      return std::nullopt;
    }, "oriented graphs, chromatic, LLT and Tutte specialisations");
  }));
  jobs.push_back(guarded("families.b_specialisations_printed", [n] {
    Json witness = Json::object();
    bool holds = true;
    for (int k = 1; k <= std::min(n, 4) && holds; ++k)
      for (const DirectedGraph& g : families::oriented_graphs(k)) {
        auto s = families::b_specialisations(g);
        if (!s.chromatic_as_printed || !s.llt_as_printed) {
          holds = false;
          witness = Json{{"graph", io::to_json(g)}, {"chromatic_as_printed", s.chromatic_as_printed},
                         {"llt_as_printed", s.llt_as_printed}};
          break;
        }
      }
    return erratum("families.b_specialisations_printed", holds,
                   "[z^n] B(qz,z) and B(q,0) fail; [z^|E|] B(qz,z) and B(q,1) hold", witness);
  }));
  jobs.push_back(guarded("families.tutte_examples", [] {
    SymElement single(2, SymBasis::p);
    single.add(Partition{1, 1}, 1);
    single.add(Partition{2}, ParamPoly::var(Param::q));
    SymElement edgeless(3, SymBasis::p);
    edgeless.add(Partition{1, 1, 1}, 1);
    bool ok = families::tutte_multivariate(DirectedGraph{2, {{0, 1}}}) == single &&
              families::tutte_multivariate(DirectedGraph{3, {}}) == edgeless;
    return make("families.tutte_examples", ok ? Witness{} : Witness{Json("mismatch")}, "single edge and edgeless graph");
  }));
  jobs.push_back(guarded("families.matroids", [n] {
    auto ms = small_matroids(std::min(n, 4));
    std::size_t noninjective = 0;
    for (const auto& m : ms) {
      auto r = families::matroid_psi(m);
      if (auto w = family_ok(r)) {
        Json bases = Json::array();
        for (auto b : m.bases()) bases.push_back(mask_elements(b));
        return make("families.matroids", Json{{"n", m.size()}, {"bases", bases}, {"detail", *w}}, "");
      }
      if (!families::generic_noninjective_witnesses(m, 1).empty()) ++noninjective;
    }
    return make("families.matroids", std::nullopt,
                count_detail(ms.size(), "matroids, routes agree; ") + std::to_string(noninjective) +
                    " admit non-injective generic colorings");
  }));
  jobs.push_back(guarded("families.uniform_matroid", [n] {
    for (int k = 1; k <= std::max(n, 6); ++k)
      for (int r = 0; r <= k; ++r) {
        auto rep = families::matroid_psi(families::Matroid::uniform(k, r));
        if (auto w = family_ok(rep)) return make("families.uniform_matroid", Json{{"n", k}, {"r", r}, {"detail", *w}}, "");
        if (!rep.omega_psi.identical(families::uniform_matroid_closed_form(k, r)))
          return make("families.uniform_matroid", Json{{"n", k}, {"r", r}, {"got", rep.omega_psi.to_string()}}, "");
      }
    return make("families.uniform_matroid", std::nullopt, "corrected closed form matches both routes");
  }));
  jobs.push_back(guarded("families.uniform_matroid_printed", [n] {
    Json witness;
    bool holds = true;
    for (int k = 1; k <= std::max(n, 6) && holds; ++k)
      for (int r = 1; r <= k; ++r) {
        auto rep = families::matroid_psi(families::Matroid::uniform(k, r));
        auto printed = families::uniform_matroid_closed_form(k, r, true);
        if (!(rep.omega_psi == printed)) {
          holds = false;
          witness = Json{{"n", k}, {"r", r}, {"computed", rep.omega_psi.to_string()}, {"printed", printed.to_string()}};
          break;
        }
      }
    return erratum("families.uniform_matroid_printed", holds,
                   "printed shape (1^{r-1},k+1,1^{m-k}) fails; (1^{m-1},k+1,1^{r-k}) with leading coefficient 1 holds",
                   witness);
  }));
  jobs.push_back(guarded("families.eulerian", [n] {
    const int bound = std::max(n + 1, 6);
    for (int k = 1; k <= bound; ++k) {
      QSymElement sum = families::q_weighted_sum(families::eulerian_q(k), k);
      if (!(to_sym(sum, SymBasis::p) == families::eulerian_closed_form(k)))
        return make("families.eulerian", Json{{"n", k}, {"route", "closed form"}}, "");
      if (!(pp::element_from_certificates(k, families::path_certificates(k)) == sum))
        return make("families.eulerian", Json{{"n", k}, {"route", "path posets"}}, "");
      if (k <= 5 && families::banner_oracle(k, k) != expand_truncated(sum, k))
        return make("families.eulerian", Json{{"n", k}, {"route", "banners"}}, "");
    }
    return make("families.eulerian", std::nullopt, "DEX, path posets, closed form and banners agree");
  }));
  jobs.push_back(guarded("families.cycle_eulerian", [n] {
    const int bound = std::max(n + 1, 6);
    for (int k = 1; k <= bound; ++k) {
      SymElement direct = to_sym(families::q_weighted_sum(families::cycle_eulerian_q(k), k), SymBasis::p);
      if (!(direct == families::cycle_eulerian_closed_form(k, false)))
        return make("families.cycle_eulerian", Json{{"n", k}, {"route", "closed form"}}, "");
      if (!(direct == families::cycle_eulerian_by_inversion(k)))
        return make("families.cycle_eulerian", Json{{"n", k}, {"route", "inversion"}}, "");
      if (!(families::necklace_route(k) == families::necklace_closed_form(k)))
        return make("families.cycle_eulerian", Json{{"n", k}, {"route", "necklaces"}}, "");
      if (k <= 5 && families::circular_word_oracle(k, k) != expand_truncated(from_sym(families::necklace_closed_form(k)), k))
        return make("families.cycle_eulerian", Json{{"n", k}, {"route", "circular words"}}, "");
    }
    return make("families.cycle_eulerian", std::nullopt, "long cycles match closed form, inversion and necklaces");
  }));
  jobs.push_back(guarded("families.cycle_eulerian_printed", [n] {
    Json witness;
    bool holds = true;
    for (int k = 1; k <= std::max(n + 1, 6) && holds; ++k) {
      SymElement direct = to_sym(families::q_weighted_sum(families::cycle_eulerian_q(k), k), SymBasis::p);
      if (!(direct == families::cycle_eulerian_closed_form(k, true))) {
        holds = false;
        witness = Json{{"n", k}, {"computed", direct.to_string()},
                       {"printed", families::cycle_eulerian_closed_form(k, true).to_string()}};
      }
    }
    return erratum("families.cycle_eulerian_printed", holds, "the l = 1 factor must be 1 when n = 1", witness);
  }));
  jobs.push_back(guarded("families.amusing_identity", [] {
    for (int k = 2; k <= 30; ++k) {
      auto [lhs, rhs] = families::amusing_identity_sides(k);
      if (!(lhs == rhs)) return make("families.amusing_identity", Json{{"n", k}}, "");
    }
    auto [l1, r1] = families::amusing_identity_sides(1);
    Check c = make("families.amusing_identity", std::nullopt, "holds for 2 <= n <= 30");
    if (!(l1 == r1)) {
      c.detail += "; at n = 1 the sides are " + l1.to_string() + " and " + r1.to_string();
      c.status = Status::Erratum;
      c.witness = Json{{"n", 1}, {"lhs", l1.to_string()}, {"rhs", r1.to_string()}};
    }
    return c;
  }));
  jobs.push_back(guarded("families.schur", [n] {
    for (int k = 1; k <= std::min(n + 1, 6); ++k)
      for (const Partition& l : partitions(k)) {
        if (!(families::schur(l) == sym_basis_element(SymBasis::s, l)))
          return make("families.schur", Json{{"lambda", l.parts()}}, "");
        if (k <= 5) {
          SymElement p = to_sym(families::schur(l), SymBasis::p);
          for (const Partition& mu : partitions(k)) {
            Rational via_p = p.coeff(mu).constant() * Rational(z_of(mu.parts()));
            if (via_p != Rational(families::roichman_coeff(l, mu)))
              return make("families.schur", Json{{"lambda", l.parts()}, {"mu", mu.parts()}}, "");
          }
        }
      }
    Integer c = families::roichman_coeff(Partition{3, 3}, Partition{2, 2, 2});
    return make("families.schur", c == -3 ? Witness{} : Witness{Json(c.get_str())},
                "SYT route, Roichman coefficients; (3,3),(2,2,2) gives -3");
  }));
  jobs.push_back(guarded("families.rooted_trees", [n] {
    for (int k = 1; k <= std::max(n + 1, 6); ++k) {
      auto r = families::distinguishes_rooted_trees(k);
      if (!r.distinct || !r.top_coefficient_matches)
        return make("families.rooted_trees", Json{{"n", k}, {"clash", r.clash}}, "");
    }
    return make("families.rooted_trees", std::nullopt, "chromatic functions distinguish rooted trees");
  }));
}

// ---------------------------------------------------------------- counterexamples

void counterexample_jobs(std::vector<std::function<Check()>>& jobs) {
  auto posets = families::counterexample_posets();
  std::vector<Poset> ps(posets.begin(), posets.end());
  jobs.push_back(guarded("counterexamples.first", [ps] {
    auto r = search::analyse(ps, {2, 3, 2, 0});
    std::string s = r.s ? r.s->to_string() : "", h = r.h ? r.h->to_string() : "";
    bool ok = r.symmetric && s == "7*s[4] + 7*s[3,1] + s[2,2] + 2*s[2,1,1]" &&
              h == "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[2,1,1]" && r.schur_positive && !r.h_positive && r.p_positive;
    return make("counterexamples.first", ok ? Witness{} : Witness{Json{{"s", s}, {"h", h}}}, "2K_A + 3K_B + 2K_C: " + h);
  }));
  // The published h expansion ends in 2h[1,1,1,1]; Jacobi-Trudi on the Schur side gives 2h[2,1,1].
  jobs.push_back(guarded("counterexamples.first_printed_h", [ps] {
    auto r = search::analyse(ps, {2, 3, 2, 0});
    std::string h = r.h ? r.h->to_string() : "";
    const std::string printed = "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[1,1,1,1]";
    return erratum("counterexamples.first_printed_h", h == printed, "printed h expansion disagrees; computed " + h,
                   Json{{"printed", printed}, {"computed", h}});
  }));
  // As drawn, K_A + 3K_B + K_C + 3K_D is not symmetric. Swapping B for the dual of
  // D reproduces the published Schur expansion exactly.
  jobs.push_back(guarded("counterexamples.second_printed", [ps] {
    auto r = search::analyse(ps, {1, 3, 1, 3});
    Json w{{"symmetric", r.symmetric}};
    if (auto m = symmetry_witness(r.element))
      w["witness"] = {{"first", m->first.parts()}, {"second", m->second.parts()},
                      {"first_coeff", m->first_coeff.to_string()}, {"second_coeff", m->second_coeff.to_string()}};
    return erratum("counterexamples.second_printed", r.symmetric, "combination as drawn is not symmetric", w);
  }));
  jobs.push_back(guarded("counterexamples.second", [ps] {
    std::vector<Poset> fixed = ps;
    fixed[1] = ps[3].dual();
    auto r = search::analyse(fixed, {1, 3, 1, 3});
    std::string s = r.s ? r.s->to_string() : "";
    bool ok = r.symmetric && s == "8*s[4] + 5*s[3,1] - s[2,2] + s[2,1,1]" && !r.schur_positive && r.p_positive;
    return make("counterexamples.second", ok ? Witness{} : Witness{Json{{"s", s}}}, "K_A + 3K_{D*} + K_C + 3K_D: " + s);
  }));
  jobs.push_back(guarded("counterexamples.chains", [] {
    auto r = search::analyse({posets::chain(4)}, {1});
    bool ok = r.symmetric && r.schur_positive && r.h_positive && r.p_positive;
    return make("counterexamples.chains", ok ? Witness{} : Witness{Json("chain not positive")}, "chain is fully positive");
  }));
}

}  // namespace

std::vector<Check> run_suite(const std::string& name, const Options& opt) {
  if (!is_suite(name)) throw InvalidArgument("unknown suite \"" + name + "\"");
  if (opt.n && (*opt.n < 0 || *opt.n > 12)) throw InvalidArgument("--n must lie in 0..12");
  auto bound = [&](int fallback) { return opt.n.value_or(fallback); };
  std::vector<std::function<Check()>> jobs;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("unimodal")) unimodal_jobs(bound(9), jobs);
  if (want("cons")) cons_jobs(bound(7), jobs);
  if (want("bases")) bases_jobs(bound(8), jobs);
  if (want("kp")) kp_jobs(bound(6), jobs);
  if (want("kpe")) kpe_jobs(bound(5), jobs);
  if (want("families")) families_jobs(bound(5), jobs);
  if (want("counterexamples")) counterexample_jobs(jobs);
  return run_parallel(jobs, opt.threads);
}

}  // namespace qsym::verify
