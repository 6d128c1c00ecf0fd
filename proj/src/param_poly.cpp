#include "qsymkit/param_poly.hpp"

#include <algorithm>

#include "qsymkit/error.hpp"

namespace qsym {

const char* param_name(Param p) {
  switch (p) {
    case Param::q: return "q";
    case Param::y: return "y";
    case Param::z: return "z";
  }
  return "?";
}

Exponent Exponent::of(Param p, unsigned k) {
  Exponent e;
  e.e[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(k);
  return e;
}

bool GradedOrder::operator()(const Exponent& a, const Exponent& b) const {
  unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.e > b.e;
}

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponent{}, c);
}

ParamPoly ParamPoly::var(Param p, unsigned power) { return term(Exponent::of(p, power), 1); }

ParamPoly ParamPoly::term(const Exponent& e, const Rational& c) {
  ParamPoly r;
  r.add_term(e, c);
  return r;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational ParamPoly::constant() const { return coeff(Exponent{}); }

Rational ParamPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ParamPoly::degree(Param p) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[p]);
  return d;
}

void ParamPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kParamCount; ++i) e.e[i] = std::uint16_t(ea.e[i] + eb.e[i]);
      r.add_term(e, Rational(ca * cb));
    }
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly r = 1, base = *this;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return r;
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& image) const {
  std::vector<ParamPoly> powers{ParamPoly(1)};
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    unsigned k = e[p];
    while (powers.size() <= k) powers.push_back(powers.back() * image);
    Exponent rest = e;
    rest.e[static_cast<std::size_t>(p)] = 0;
    r += ParamPoly::term(rest, c) * powers[k];
  }
  return r;
}

ParamPoly ParamPoly::coefficient_of(Param p, unsigned k) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[p] != k) continue;
    Exponent rest = e;
    rest.e[static_cast<std::size_t>(p)] = 0;
    r.add_term(rest, c);
  }
  return r;
}

bool ParamPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

bool ParamPoly::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.second.get_den() == 1 && sgn(t.second) > 0;
  });
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string monomial_to_string(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (e.e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += param_name(static_cast<Param>(i));
    if (e.e[i] > 1) s += '^' + std::to_string(e.e[i]);
  }
  return s;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    std::string body;
    if (e.is_zero()) {
      body = rational_to_string(a);
    } else {
      if (a != 1) body = rational_to_string(a) + "*";
      body += monomial_to_string(e);
    }
    if (first) {
      s += (neg ? "-" : "") + body;
      first = false;
    } else {
      s += (neg ? " - " : " + ") + body;
    }
  }
  return s;
}

ParamPoly q_int(unsigned a) {
  ParamPoly r;
  for (unsigned i = 0; i < a; ++i) r.add_term(Exponent::of(Param::q, i), 1);
  return r;
}

ParamPoly eulerian_poly(unsigned k) {
  // Eulerian numbers: A(n,j) = (j+1) A(n-1,j) + (n-j) A(n-1,j-1).
  std::vector<Integer> row{1};
  for (unsigned n = 1; n <= k; ++n) {
    std::vector<Integer> next(n, 0);
    for (unsigned j = 0; j < n; ++j) {
      Integer v = 0;
      if (j < row.size()) v += Integer(j + 1) * row[j];
      if (j >= 1 && j - 1 < row.size()) v += Integer(n - j) * row[j - 1];
      next[j] = v;
    }
    row = std::move(next);
  }
  ParamPoly r;
  for (unsigned j = 0; j < row.size(); ++j) r.add_term(Exponent::of(Param::q, j), Rational(row[j]));
  return r;
}

bool is_unimodal(const ParamPoly& p, Param var) {
  std::vector<Rational> c(p.degree(var) + 1, 0);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (static_cast<Param>(i) != var && e.e[i] != 0)
        throw InvalidArgument("is_unimodal: polynomial is not univariate in " +
                              std::string(param_name(var)));
    }
    c[e[var]] = v;
  }
  std::size_t lo = 0, hi = c.size();
  while (lo < hi && sgn(c[lo]) == 0) ++lo;
  while (hi > lo && sgn(c[hi - 1]) == 0) --hi;
  std::size_t i = lo;
  while (i + 1 < hi && c[i] <= c[i + 1]) ++i;
  while (i + 1 < hi && c[i] >= c[i + 1]) ++i;
  return i + 1 >= hi;
}

}  // namespace qsym
