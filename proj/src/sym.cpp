#include "qsymkit/sym.hpp"

#include <functional>
#include <mutex>

#include "qsymkit/error.hpp"

namespace qsym {

const char* sym_basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::p: return "p";
    case SymBasis::h: return "h";
    case SymBasis::e: return "e";
    case SymBasis::s: return "s";
  }
  return "?";
}

SymBasis parse_sym_basis(const std::string& s) {
  if (s == "m") return SymBasis::m;
  if (s == "p") return SymBasis::p;
  if (s == "h") return SymBasis::h;
  if (s == "e") return SymBasis::e;
  if (s == "s") return SymBasis::s;
  throw InvalidArgument("unknown symmetric basis '" + s + "'");
}

ParamPoly SymElement::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void SymElement::add(const Partition& lambda, const ParamPoly& c) {
  if (lambda.size() != degree_) throw InvalidArgument("partition degree does not match element");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string SymElement::to_string(View view) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    ParamPoly shown = c;
    std::string token = std::string(sym_basis_name(basis_)) + lambda.to_string();
    if (basis_ == SymBasis::p && view == View::ZNormalized) {
      shown *= Rational(z_of(lambda.parts()));
      token += "/z";
    }
    out += format_term(shown, token, first);
    first = false;
  }
  return out;
}

std::vector<Tableau> standard_young_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  Tableau t(static_cast<std::size_t>(shape.length()));
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < t.size(); ++r) {
      int len = static_cast<int>(t[r].size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) <= len) continue;
      t[r].push_back(next);
      rec(next + 1);
      t[r].pop_back();
    }
  };
  rec(1);
  return out;
}

SubsetMask tableau_descents(const Tableau& t) {
  int n = 0;
  for (const auto& row : t) n += static_cast<int>(row.size());
  std::vector<int> row_of(static_cast<std::size_t>(n + 1));
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int v : t[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  SubsetMask d = 0;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d |= mask_bit(i);
  return d;
}

QSymElement schur_fundamental(const Partition& lambda) {
  QSymElement r(lambda.size(), Basis::Fundamental);
  for (const Tableau& t : standard_young_tableaux(lambda))
    r.add(Composition::from_set(tableau_descents(t), lambda.size()), 1);
  return r;
}

QSymElement sym_basis_element(SymBasis basis, const Partition& lambda) {
  const int n = lambda.size();
  switch (basis) {
    case SymBasis::m: {
      QSymElement r(n, Basis::Monomial);
      for (const Composition& a : rearrangements(lambda)) r.add(a, 1);
      return r;
    }
    case SymBasis::p: {
      QSymElement r(n, Basis::Psi);
      for (const Composition& a : rearrangements(lambda)) r.add(a, 1);
      return to_basis(r, Basis::Monomial);
    }
    case SymBasis::h: {
      // h_k is the sum of all M_alpha of size k.
      QSymElement r = QSymElement::single(Basis::Monomial, Composition(), 1);
      for (int k : lambda.parts()) {
        QSymElement hk(k, Basis::Monomial);
        for (const Composition& a : compositions(k)) hk.add(a, 1);
        r = product(r, hk);
      }
      return r;
    }
    case SymBasis::e:
      return to_basis(omega(sym_basis_element(SymBasis::h, lambda)), Basis::Monomial);
    case SymBasis::s:
      return f_to_m(schur_fundamental(lambda));
  }
  throw InvalidArgument("unknown symmetric basis");
}

QSymElement from_sym(const SymElement& e) {
  QSymElement r(e.degree(), Basis::Monomial);
  for (const auto& [lambda, c] : e.terms()) r += sym_basis_element(e.basis(), lambda) * c;
  return r;
}

namespace {

// Inverse of the matrix whose column mu holds the m-coordinates of b_mu.
using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::logic_error("symmetric basis change matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const Matrix& change_matrix(SymBasis basis, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Matrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(basis), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Partition> parts = partitions(n);
  const std::size_t k = parts.size();
  Matrix a(k, std::vector<Rational>(k, 0));
  for (std::size_t col = 0; col < k; ++col) {
    QSymElement b = sym_basis_element(basis, parts[col]);
    for (std::size_t row = 0; row < k; ++row) {
      ParamPoly c = b.coeff(parts[row].as_composition());
      a[row][col] = c.constant();
    }
  }
  return cache.emplace(key, invert(std::move(a))).first->second;
}

}  // namespace

SymElement to_sym(const QSymElement& e, SymBasis target) {
  if (auto w = symmetry_witness(e)) {
    throw InvalidArgument("element is not symmetric: Psi" + w->first.to_string() + " has coefficient " +
                          w->first_coeff.to_string() + " but Psi" + w->second.to_string() + " has " +
                          w->second_coeff.to_string());
  }
  const int n = e.degree();
  SymElement r(n, target);
  if (target == SymBasis::p) {
    QSymElement psi = to_basis(e, Basis::Psi);
    for (const auto& [a, c] : psi.terms())
      if (sort_to_partition(a).as_composition() == a) r.add(sort_to_partition(a), c);
    return r;
  }
  QSymElement m = to_basis(e, Basis::Monomial);
  std::vector<Partition> parts = partitions(n);
  if (target == SymBasis::m) {
    for (const Partition& lambda : parts) r.add(lambda, m.coeff(lambda.as_composition()));
    return r;
  }
  const Matrix& inv = change_matrix(target, n);
  std::vector<ParamPoly> v;
  for (const Partition& lambda : parts) v.push_back(m.coeff(lambda.as_composition()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ParamPoly acc;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (sgn(inv[i][j]) != 0 && !v[j].is_zero()) acc += v[j] * inv[i][j];
    r.add(parts[i], acc);
  }
  return r;
}

}  // namespace qsym
