#include "qsymkit/qsym.hpp"

#include <algorithm>
#include <functional>

#include "qsymkit/error.hpp"
#include "qsymkit/unimodal.hpp"

namespace qsym {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Monomial: return "M";
    case Basis::Fundamental: return "F";
    case Basis::Psi: return "Psi";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "M") return Basis::Monomial;
  if (s == "F") return Basis::Fundamental;
  if (s == "Psi") return Basis::Psi;
  throw InvalidArgument("unknown quasisymmetric basis '" + s + "'");
}

QSymElement::QSymElement(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0 || degree > kMaxDegree) throw InvalidArgument("degree out of range");
}

QSymElement QSymElement::single(Basis basis, const Composition& index, const ParamPoly& coeff) {
  QSymElement r(index.size(), basis);
  r.add(index, coeff);
  return r;
}

QSymElement QSymElement::fundamental(int n, SubsetMask set, const ParamPoly& coeff) {
  return single(Basis::Fundamental, Composition::from_set(set, n), coeff);
}

ParamPoly QSymElement::coeff(const Composition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void QSymElement::add(const Composition& index, const ParamPoly& c) {
  if (index.size() != degree_)
    throw InvalidArgument("term " + index.to_string() + " has degree " + std::to_string(index.size()) +
                          ", element has degree " + std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && terms_.empty() && degree_ != o.degree_) degree_ = o.degree_;
  if (o.degree_ != degree_) throw InvalidArgument("adding elements of different degrees");
  if (o.basis_ == basis_) {
    for (const auto& [a, c] : o.terms_) add(a, c);
  } else {
    QSymElement conv = to_basis(o, basis_);
    for (const auto& [a, c] : conv.terms_) add(a, c);
  }
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) { return *this += o * ParamPoly(-1); }

QSymElement& QSymElement::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap next;
  for (const auto& [a, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) next.emplace(a, std::move(p));
  }
  terms_ = std::move(next);
  return *this;
}

std::string format_term(const ParamPoly& coeff, const std::string& token, bool first) {
  bool neg = false;
  std::string body;
  if (coeff.terms().size() == 1) {
    const auto& [e, c] = *coeff.terms().begin();
    neg = sgn(c) < 0;
    Rational a = abs(c);
    if (a != 1) body = rational_to_string(a) + "*";
    if (!e.is_zero()) body += monomial_to_string(e) + "*";
  } else {
    body = "(" + coeff.to_string() + ")*";
  }
  body += token;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

std::string QSymElement::to_string(View view) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    std::string token = std::string(basis_name(basis_)) + a.to_string();
    ParamPoly shown = c;
    if (basis_ == Basis::Psi && view == View::ZNormalized) {
      shown *= Rational(z_of(a.parts()));
      token += "/z";
    }
    s += format_term(shown, token, first);
    first = false;
  }
  return s;
}

bool operator==(const QSymElement& a, const QSymElement& b) {
  if (a.degree() != b.degree()) return a.is_zero() && b.is_zero();
  if (a.basis() == b.basis()) return a.terms() == b.terms();
  return to_basis(a, Basis::Monomial).terms() == to_basis(b, Basis::Monomial).terms();
}

static void require_basis(const QSymElement& e, Basis b, const char* fn) {
  if (e.basis() != b)
    throw InvalidArgument(std::string(fn) + ": expected basis " + basis_name(b) + ", got " + basis_name(e.basis()));
}

QSymElement f_to_m(const QSymElement& e) {
  require_basis(e, Basis::Fundamental, "f_to_m");
  QSymElement r(e.degree(), Basis::Monomial);
  for (const auto& [a, c] : e.terms())
    for (const Composition& b : refinements(a)) r.add(b, c);
  return r;
}

QSymElement psi_to_m(const QSymElement& e) {
  require_basis(e, Basis::Psi, "psi_to_m");
  QSymElement r(e.degree(), Basis::Monomial);
  for (const auto& [a, c] : e.terms()) {
    Rational z(z_of(a.parts()));
    for (const Composition& b : coarsenings(a)) r.add(b, c * Rational(z / Rational(pi_rel(a, b))));
  }
  return r;
}

QSymElement m_to_f(const QSymElement& e) {
  require_basis(e, Basis::Monomial, "m_to_f");
  // F_a = M_a + (strictly finer terms): peel off the coarsest remaining term.
  QSymElement residual = e;
  QSymElement r(e.degree(), Basis::Fundamental);
  while (!residual.is_zero()) {
    auto it = residual.terms().begin();
    Composition a = it->first;
    ParamPoly c = it->second;
    r.add(a, c);
    for (const Composition& b : refinements(a)) residual.add(b, -c);
  }
  return r;
}

QSymElement m_to_psi(const QSymElement& e) {
  require_basis(e, Basis::Monomial, "m_to_psi");
  // Psi_a = (z_a / pi(a)) M_a + (strictly coarser terms): peel off the finest.
  QSymElement residual = e;
  QSymElement r(e.degree(), Basis::Psi);
  while (!residual.is_zero()) {
    auto it = std::prev(residual.terms().end());
    Composition a = it->first;
    Rational lead(z_of(a.parts()), pi_rel(a, a));
    lead.canonicalize();
    ParamPoly c = it->second * Rational(1 / lead);
    r.add(a, c);
    Rational z(z_of(a.parts()));
    for (const Composition& b : coarsenings(a)) residual.add(b, c * Rational(-z / Rational(pi_rel(a, b))));
  }
  return r;
}

QSymElement f_to_psi(const QSymElement& e) {
  require_basis(e, Basis::Fundamental, "f_to_psi");
  const int n = e.degree();
  QSymElement r(n, Basis::Psi);
  if (n == 0) {
    for (const auto& [a, c] : e.terms()) r.add(a, c);
    return r;
  }
  std::vector<Composition> all = compositions(n);
  std::vector<Rational> inv_z;
  for (const Composition& a : all) inv_z.emplace_back(1, z_of(a.parts()));
  for (const auto& [s_comp, c] : e.terms()) {
    SubsetMask s = s_comp.set_mask();
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Composition& a = all[i];
      if (!unimodal::is_alpha_unimodal(s, a)) continue;
      int sign_exp = mask_size(s & ~a.set_mask());
      Rational v = inv_z[i];
      if (sign_exp % 2) v = -v;
      r.add(a, c * v);
    }
  }
  return r;
}

QSymElement to_basis(const QSymElement& e, Basis target) {
  if (e.basis() == target) return e;
  QSymElement m = e;
  if (e.basis() == Basis::Fundamental) m = f_to_m(e);
  if (e.basis() == Basis::Psi) m = psi_to_m(e);
  switch (target) {
    case Basis::Monomial: return m;
    case Basis::Fundamental: return m_to_f(m);
    case Basis::Psi: return m_to_psi(m);
  }
  return m;
}

QSymElement omega(const QSymElement& e) {
  QSymElement f = to_basis(e, Basis::Fundamental);
  const int n = e.degree();
  QSymElement r(n, Basis::Fundamental);
  for (const auto& [a, c] : f.terms()) {
    SubsetMask s = a.set_mask(), flipped = 0;
    for (int i : mask_elements(s)) flipped |= mask_bit(n - i);
    r.add(Composition::from_set(full_mask(n - 1) & ~flipped, n), c);
  }
  return to_basis(r, e.basis());
}

QSymElement power_substitution(const QSymElement& e, int d) {
  if (d < 1) throw InvalidArgument("power_substitution: d must be positive");
  QSymElement m = to_basis(e, Basis::Monomial);
  QSymElement r(e.degree() * d, Basis::Monomial);
  for (const auto& [a, c] : m.terms()) r.add(a.scaled(d), c);
  return to_basis(r, e.basis());
}

namespace {

void quasi_shuffles(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                    std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& out) {
  if (i == a.size() && j == b.size()) {
    out(cur);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    quasi_shuffles(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    quasi_shuffles(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    cur.push_back(a[i] + b[j]);
    quasi_shuffles(a, i + 1, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

QSymElement product(const QSymElement& a, const QSymElement& b) {
  QSymElement ma = to_basis(a, Basis::Monomial), mb = to_basis(b, Basis::Monomial);
  QSymElement r(a.degree() + b.degree(), Basis::Monomial);
  for (const auto& [ca, xa] : ma.terms()) {
    for (const auto& [cb, xb] : mb.terms()) {
      ParamPoly c = xa * xb;
      std::vector<int> cur;
      quasi_shuffles(ca.parts(), 0, cb.parts(), 0, cur,
                     [&](const std::vector<int>& w) { r.add(Composition(w), c); });
    }
  }
  return r;
}

std::optional<SymmetryWitness> symmetry_witness(const QSymElement& e) {
  QSymElement psi = to_basis(e, Basis::Psi);
  for (const auto& [a, c] : psi.terms()) {
    for (const Composition& b : rearrangements(sort_to_partition(a))) {
      ParamPoly cb = psi.coeff(b);
      if (!(cb == c)) return SymmetryWitness{a, b, c, cb};
    }
  }
  return std::nullopt;
}

bool is_symmetric(const QSymElement& e) { return !symmetry_witness(e).has_value(); }

bool is_symmetric_monomial(const QSymElement& e) {
  QSymElement m = to_basis(e, Basis::Monomial);
  for (const auto& [a, c] : m.terms())
    for (const Composition& b : rearrangements(sort_to_partition(a)))
      if (!(m.coeff(b) == c)) return false;
  return true;
}

namespace {

// Strictly increasing index tuples i_1 < ... < i_l in [1, m].
void increasing_tuples(int len, int m, const std::function<void(const std::vector<int>&)>& out) {
  std::vector<int> idx(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == len) {
      out(idx);
      return;
    }
    for (int v = start; v <= m - (len - pos - 1); ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
}

}  // namespace

TruncatedPoly expand_truncated(const QSymElement& e, int m) {
  if (m < 0) throw InvalidArgument("expand_truncated: negative variable count");
  TruncatedPoly r;
  auto add = [&](std::vector<int> exps, const ParamPoly& c) {
    auto [it, inserted] = r.try_emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  if (e.basis() == Basis::Fundamental) {
    // Weakly increasing j_1 <= ... <= j_n, strict at descent positions.
    const int n = e.degree();
    for (const auto& [a, c] : e.terms()) {
      SubsetMask s = a.set_mask();
      std::vector<int> exps(static_cast<std::size_t>(m), 0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > n) {
          add(exps, c);
          return;
        }
        int start = lo + ((pos > 1 && mask_has(s, pos - 1)) ? 1 : 0);
        for (int v = std::max(start, 1); v <= m; ++v) {
          ++exps[static_cast<std::size_t>(v - 1)];
          rec(pos + 1, v);
          --exps[static_cast<std::size_t>(v - 1)];
        }
      };
      rec(1, 1);
    }
    return r;
  }
  QSymElement mono = to_basis(e, Basis::Monomial);
  for (const auto& [a, c] : mono.terms()) {
    increasing_tuples(a.length(), m, [&](const std::vector<int>& idx) {
      std::vector<int> exps(static_cast<std::size_t>(m), 0);
      for (std::size_t k = 0; k < idx.size(); ++k) exps[static_cast<std::size_t>(idx[k] - 1)] = a[k];
      add(std::move(exps), c);
    });
  }
  return r;
}

TruncatedPoly truncated_product(const TruncatedPoly& a, const TruncatedPoly& b) {
  TruncatedPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      ParamPoly c = ca * cb;
      auto [it, inserted] = r.try_emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

TruncatedPoly& truncated_add(TruncatedPoly& acc, const TruncatedPoly& b, const ParamPoly& scale) {
  for (const auto& [e, c] : b) {
    ParamPoly v = c * scale;
    auto [it, inserted] = acc.try_emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return acc;
}

}  // namespace qsym
