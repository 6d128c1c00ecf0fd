#pragma once

// Brute-force reference computations for the unit and acceptance tests. They
// work with explicit polynomials in x_1..x_m and share nothing with the
// library's combinatorics beyond the coefficient ring.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "qsymkit/param_poly.hpp"

namespace oracle {

using qsym::Integer;
using qsym::ParamPoly;
using qsym::Rational;
using Poly = std::map<std::vector<int>, ParamPoly>;

inline void add(Poly& p, const std::vector<int>& exps, const ParamPoly& c) {
  ParamPoly& slot = p[exps];
  slot += c;
  if (slot.is_zero()) p.erase(exps);
}

inline Poly plus(Poly a, const Poly& b, const ParamPoly& scale = 1) {
  for (const auto& [e, c] : b) add(a, e, c * scale);
  return a;
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add(r, e, ca * cb);
    }
  return r;
}

inline ParamPoly q_pow(int k) { return ParamPoly::var(qsym::Param::q, static_cast<unsigned>(k)); }

// Calls f on every map [n] -> [m] (values 0..m-1).
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    f(v);
    int i = 0;
    while (i < n && ++v[static_cast<std::size_t>(i)] == m) v[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
  }
}

inline std::vector<int> exponents(const std::vector<int>& coloring, int m) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (int c : coloring) ++e[static_cast<std::size_t>(c)];
  return e;
}

// M_alpha: sum over i_1 < ... < i_l of x_{i_1}^{a_1} ... x_{i_l}^{a_l}.
inline Poly monomial_qsym(const std::vector<int>& alpha, int m) {
  Poly r;
  const int l = static_cast<int>(alpha.size());
  std::vector<int> idx(static_cast<std::size_t>(l));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == l) {
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < l; ++i) e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = alpha[static_cast<std::size_t>(i)];
      add(r, e, 1);
      return;
    }
    for (int v = from; v < m; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return r;
}

// F_{n,S}: i_1 <= ... <= i_n with i_j < i_{j+1} whenever j is in S (1-based).
inline Poly fundamental(int n, const std::vector<int>& descent_set, int m) {
  Poly r;
  for_each_map(n, m, [&](const std::vector<int>& v) {
    for (int j = 1; j < n; ++j) {
      int a = v[static_cast<std::size_t>(j - 1)], b = v[static_cast<std::size_t>(j)];
      bool strict = std::find(descent_set.begin(), descent_set.end(), j) != descent_set.end();
      if (a > b || (strict && a == b)) return;
    }
    add(r, exponents(v, m), 1);
  });
  return r;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// prod_i i^{m_i} m_i!
inline Integer z_lambda(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  Integer r = 1;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t k = i; k < j; ++k) r *= parts[i];
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

// Psi_alpha = z_alpha sum_{beta >= alpha} M_beta / pi(alpha, beta), where
// pi multiplies, over blocks of beta, the partial sums of the alpha parts
// inside the block.
inline Poly psi_by_definition(const std::vector<int>& alpha, int m) {
  const std::size_t l = alpha.size();
  Poly r;
  // Each coarsening is a choice of which of the l-1 gaps to close.
  for (unsigned closed = 0; closed < (1U << (l ? l - 1 : 0)); ++closed) {
    std::vector<int> beta;
    Integer pi = 1;
    int block = 0, partial = 0;
    for (std::size_t i = 0; i < l; ++i) {
      partial += alpha[i];
      pi *= partial;
      block += alpha[i];
      bool ends = i + 1 == l || !((closed >> i) & 1U);
      if (ends) {
        beta.push_back(block);
        block = 0;
        partial = 0;
      }
    }
    r = plus(r, monomial_qsym(beta, m), ParamPoly(Rational(z_lambda(alpha)) / Rational(pi)));
  }
  return r;
}

inline Poly power_sum(const std::vector<int>& lambda, int m) {
  Poly r{{std::vector<int>(static_cast<std::size_t>(m), 0), 1}};
  for (int k : lambda) {
    Poly pk;
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      e[static_cast<std::size_t>(i)] = k;
      add(pk, e, 1);
    }
    r = times(r, pk);
  }
  return r;
}

// Semistandard Young tableaux of shape lambda with entries < m.
inline Poly schur_ssyt(const std::vector<int>& lambda, int m) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      add(out, e, 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v < m; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++e[static_cast<std::size_t>(v)];
      rec(k + 1);
      --e[static_cast<std::size_t>(v)];
    }
  };
  rec(0);
  return out;
}

// Reverse (P,w)-partitions: x < y forces f(x) <= f(y), strictly when w(x) > w(y).
// `less` lists strict relations (need not be closed); labels are 1-based.
inline Poly reverse_p_partitions(int n, const std::vector<std::pair<int, int>>& less, const std::vector<int>& labels,
                                 int m) {
  Poly r;
  for_each_map(n, m, [&](const std::vector<int>& f) {
    for (auto [x, y] : less) {
      int fx = f[static_cast<std::size_t>(x)], fy = f[static_cast<std::size_t>(y)];
      bool strict = labels[static_cast<std::size_t>(x)] > labels[static_cast<std::size_t>(y)];
      if (fx > fy || (strict && fx == fy)) return;
    }
    add(r, exponents(f, m), 1);
  });
  return r;
}

// Colorings weighted by q^{#edges u -> v with f(u) < f(v)}; proper ones only
// when `proper`.
inline Poly graph_colorings(int n, const std::vector<std::pair<int, int>>& edges, int m, bool proper) {
  Poly r;
  for_each_map(n, m, [&](const std::vector<int>& f) {
    int asc = 0;
    for (auto [u, v] : edges) {
      int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
      if (proper && fu == fv) return;
      if (fu < fv) ++asc;
    }
    add(r, exponents(f, m), q_pow(asc));
  });
  return r;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int excedances(const std::vector<int>& s) {
  int k = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > static_cast<int>(i) + 1) ++k;
  return k;
}

inline bool is_long_cycle(const std::vector<int>& s) {
  std::size_t len = 0;
  int x = 1;
  do {
    x = s[static_cast<std::size_t>(x - 1)];
    ++len;
  } while (x != 1);
  return len == s.size();
}

// sum over sigma (optionally long cycles only) of q^{exc}.
inline ParamPoly excedance_polynomial(int n, bool cycles_only) {
  ParamPoly r;
  for (const auto& s : permutations(n))
    if (!cycles_only || is_long_cycle(s)) r += q_pow(excedances(s));
  return r;
}

// Linear extensions by filtering all permutations.
inline long count_linear_extensions(int n, const std::vector<std::pair<int, int>>& less) {
  long k = 0;
  for (const auto& s : permutations(n)) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)] = i;
    bool ok = std::all_of(less.begin(), less.end(), [&](auto r) {
      return pos[static_cast<std::size_t>(r.first)] < pos[static_cast<std::size_t>(r.second)];
    });
    if (ok) ++k;
  }
  return k;
}

// S (bit k-1 for k in [n-1]) meets the interior of each alpha block in a
// prefix of that interior.
inline bool is_unimodal_set(unsigned s, const std::vector<int>& alpha) {
  int start = 0;
  for (int a : alpha) {
    bool gap = false;
    for (int k = start + 1; k < start + a; ++k) {
      bool in = (s >> (k - 1)) & 1U;
      if (in && gap) return false;
      if (!in) gap = true;
    }
    start += a;
  }
  return true;
}

inline std::vector<int> composition_of_set(unsigned s, int n) {
  std::vector<int> parts;
  int last = 0;
  for (int k = 1; k < n; ++k)
    if ((s >> (k - 1)) & 1U) {
      parts.push_back(k - last);
      last = k;
    }
  parts.push_back(n - last);
  return parts;
}

inline long count_unimodal_sets(const std::vector<int>& alpha) {
  int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  long count = 0;
  for (unsigned s = 0; s < (1U << (n > 0 ? n - 1 : 0)); ++s)
    if (is_unimodal_set(s, alpha)) ++count;
  return count;
}

// |{gamma |= n : Set(alpha) is gamma-unimodal}|
inline long count_v_sets(const std::vector<int>& alpha) {
  int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  unsigned set = 0;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) set |= 1U << ((acc += alpha[i]) - 1);
  long count = 0;
  for (unsigned g = 0; g < (1U << (n > 0 ? n - 1 : 0)); ++g)
    if (is_unimodal_set(set, composition_of_set(g, n))) ++count;
  return count;
}

}  // namespace oracle
