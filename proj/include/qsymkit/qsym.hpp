#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsymkit/composition.hpp"
#include "qsymkit/param_poly.hpp"

namespace qsym {

enum class Basis { Monomial, Fundamental, Psi };

const char* basis_name(Basis b);  // "M", "F", "Psi"
Basis parse_basis(const std::string& s);

// How Psi (and p) coefficients are displayed: plain coefficients of Psi_alpha,
// or coefficients of Psi_alpha / z_alpha.
enum class View { Plain, ZNormalized };

// Homogeneous quasisymmetric function of a fixed degree in one basis, with
// coefficients in Q[q,y,z]. Fundamental terms are keyed by the composition
// whose set is the descent set.
class QSymElement {
 public:
  using TermMap = std::map<Composition, ParamPoly>;

  QSymElement() = default;
  QSymElement(int degree, Basis basis);

  static QSymElement single(Basis basis, const Composition& index, const ParamPoly& coeff = 1);
  static QSymElement fundamental(int n, SubsetMask set, const ParamPoly& coeff = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coeff(const Composition& index) const;

  void add(const Composition& index, const ParamPoly& c);

  // Converts the right-hand side into this basis first.
  QSymElement& operator+=(const QSymElement& o);
  QSymElement& operator-=(const QSymElement& o);
  QSymElement& operator*=(const ParamPoly& c);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
  friend QSymElement operator*(QSymElement a, const ParamPoly& c) { return a *= c; }
  friend QSymElement operator*(const ParamPoly& c, QSymElement a) { return a *= c; }

  // Apply a map to every coefficient (e.g. a parameter substitution).
  template <class F>
  QSymElement map_coefficients(F&& f) const {
    QSymElement r(degree_, basis_);
    for (const auto& [a, c] : terms_) r.add(a, f(c));
    return r;
  }

  // Same basis, same terms. Use operator== for mathematical equality.
  bool identical(const QSymElement& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
  }

  std::string to_string(View view = View::Plain) const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::Monomial;
  TermMap terms_;
};

// One summand of a canonical text form, e.g. " - 4/3*q^2*Psi[2,3,1]".
std::string format_term(const ParamPoly& coeff, const std::string& token, bool first);

// Equality of the Monomial images.
bool operator==(const QSymElement& a, const QSymElement& b);

QSymElement f_to_m(const QSymElement& e);
QSymElement psi_to_m(const QSymElement& e);
// Triangular back-substitution against the Monomial expansions.
QSymElement m_to_f(const QSymElement& e);
QSymElement m_to_psi(const QSymElement& e);
// Direct Fundamental-to-Psi formula via alpha-unimodal sets.
QSymElement f_to_psi(const QSymElement& e);

// Any basis to any basis, pivoting through the Monomial basis.
QSymElement to_basis(const QSymElement& e, Basis target);

// The involution omega. On F_S it gives F of the complement of n - S;
// other bases go through the Fundamental basis.
QSymElement omega(const QSymElement& e);

// x_i -> x_i^d. Result stays in the input basis.
QSymElement power_substitution(const QSymElement& e, int d);

// Quasi-shuffle product, returned in the Monomial basis.
QSymElement product(const QSymElement& a, const QSymElement& b);

struct SymmetryWitness {
  Composition first;
  Composition second;
  ParamPoly first_coeff;
  ParamPoly second_coeff;
};
// nullopt when symmetric; otherwise two rearrangements with different Psi coefficients.
std::optional<SymmetryWitness> symmetry_witness(const QSymElement& e);
bool is_symmetric(const QSymElement& e);
// Same question answered on Monomial coefficients.
bool is_symmetric_monomial(const QSymElement& e);

// Polynomial in x_1..x_m: exponent vector -> coefficient.
using TruncatedPoly = std::map<std::vector<int>, ParamPoly>;
TruncatedPoly expand_truncated(const QSymElement& e, int m);
TruncatedPoly truncated_product(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly& truncated_add(TruncatedPoly& acc, const TruncatedPoly& b, const ParamPoly& scale = 1);

}  // namespace qsym
