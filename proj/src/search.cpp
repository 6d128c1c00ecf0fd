#include "qsymkit/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qsymkit/error.hpp"
#include "qsymkit/ppartitions.hpp"

namespace qsym::search {

namespace {

bool nonnegative(const SymElement& e) {
  for (const auto& [lambda, c] : e.terms())
    for (const auto& [x, r] : c.terms())
      if (r < 0) return false;
  return true;
}

// Scale a rational vector to coprime integers.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const Rational& x : v) {
    Integer d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> out;
  Integer g = 0;
  for (const Rational& x : v) {
    Integer k = x.get_num() * (l / x.get_den());
    out.push_back(k);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  }
  if (g > 1)
    for (Integer& k : out) k /= g;
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::vector<Rational>> a = rows;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (Rational& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

CombinationReport analyse(const std::vector<posets::Poset>& ps, const std::vector<Integer>& coeffs) {
  if (ps.size() != coeffs.size()) throw InvalidArgument("one coefficient per poset expected");
  if (ps.empty()) throw InvalidArgument("empty combination");
  CombinationReport r;
  r.posets = ps;
  r.coeffs = coeffs;
  const int n = ps.front().size();
  r.element = QSymElement(n, Basis::Psi);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].size() != n) throw InvalidArgument("posets of different sizes");
    if (coeffs[i] == 0) continue;
    r.element += pp::kp_psi(ps[i], pp::Route::OStar).element * ParamPoly(Rational(coeffs[i]));
  }
  r.symmetric = is_symmetric(r.element);
  if (!r.symmetric) return r;
  r.s = to_sym(r.element, SymBasis::s);
  r.h = to_sym(r.element, SymBasis::h);
  r.p = to_sym(r.element, SymBasis::p);
  r.schur_positive = nonnegative(*r.s);
  r.h_positive = nonnegative(*r.h);
  r.p_positive = nonnegative(*r.p);
  return r;
}

SearchResult search_positivity(int n, int trials, std::uint64_t seed, int max_terms) {
  if (n < 1 || n > 6) throw InvalidArgument("search-positivity supports 1 <= n <= 6");
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  if (max_terms < 1) throw InvalidArgument("max_terms must be positive");
  const std::vector<posets::Poset> all = posets::all_posets(n);
  std::vector<pp::Certificates> certs;
  for (const auto& p : all) certs.push_back(pp::kp_psi(p, pp::Route::OStar).certificates);

  // Symmetry: Psi coefficients constant on each rearrangement class.
  std::vector<std::pair<Composition, Composition>> constraints;
  for (const Partition& lambda : partitions(n)) {
    auto rs = rearrangements(lambda);
    for (std::size_t i = 1; i < rs.size(); ++i) constraints.emplace_back(rs[0], rs[i]);
  }
  auto coeff = [&](std::size_t p, const Composition& a) {
    auto it = certs[p].find(a);
    return it == certs[p].end() ? Rational(0) : it->second.constant();
  };

  std::mt19937_64 rng(seed);
  SearchResult out;
  std::set<std::vector<std::pair<std::size_t, Integer>>> seen;
  const int k_max = std::min<int>(max_terms, static_cast<int>(all.size()));
  for (int t = 0; t < trials; ++t, ++out.trials) {
    std::uniform_int_distribution<int> size_dist(1, k_max);
    int k = size_dist(rng);
    std::vector<std::size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(k));
    std::sort(idx.begin(), idx.end());

    std::vector<std::vector<Rational>> rows;
    for (const auto& [a, b] : constraints) {
      std::vector<Rational> row;
      for (std::size_t p : idx) row.push_back(coeff(p, a) - coeff(p, b));
      rows.push_back(std::move(row));
    }
    auto ker = kernel(rows, idx.size());
    if (ker.empty()) continue;
    // Random small combinations of the kernel basis; keep a nonnegative one.
    // Zero entries drop out, so the combination may use fewer posets.
    std::uniform_int_distribution<int> mult(-3, 3);
    std::optional<std::vector<Rational>> found;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      std::vector<Rational> v(idx.size(), 0);
      for (const auto& b : ker) {
        int m = attempt == 0 ? 1 : mult(rng);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += m * b[i];
      }
      auto sign = [&](int s) {
        return std::all_of(v.begin(), v.end(), [s](const Rational& x) { return sgn(x) * s >= 0; }) &&
               std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
      };
      if (sign(1)) {
        found = v;
      } else if (sign(-1)) {
        for (Rational& x : v) x = -x;
        found = v;
      }
    }
    if (!found) continue;
    std::vector<std::size_t> used;
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (sgn((*found)[i]) != 0) {
        used.push_back(idx[i]);
        weights.push_back((*found)[i]);
      }
    const std::vector<Integer> coeffs = primitive(weights);
    std::vector<std::pair<std::size_t, Integer>> key;
    for (std::size_t i = 0; i < used.size(); ++i) key.emplace_back(used[i], coeffs[i]);
    if (!seen.insert(key).second) continue;
    std::vector<posets::Poset> chosen;
    for (std::size_t p : used) chosen.push_back(all[p]);
    CombinationReport rep = analyse(chosen, coeffs);
    if (!rep.symmetric) throw RouteMismatch("kernel vector does not give a symmetric combination");
    if (!rep.schur_positive || !rep.h_positive) out.flagged.push_back(out.symmetric.size());
    out.symmetric.push_back(std::move(rep));
  }
  return out;
}

}  // namespace qsym::search
