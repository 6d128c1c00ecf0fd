#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsymkit/composition.hpp"
#include "qsymkit/qsym.hpp"

namespace qsym {

enum class SymBasis { m, p, h, e, s };

const char* sym_basis_name(SymBasis b);
SymBasis parse_sym_basis(const std::string& s);

class SymElement {
 public:
  using TermMap = std::map<Partition, ParamPoly>;

  SymElement() = default;
  SymElement(int degree, SymBasis basis) : degree_(degree), basis_(basis) {}

  int degree() const { return degree_; }
  SymBasis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  ParamPoly coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const ParamPoly& c);

  // p terms in the ZNormalized view print as coefficient of p_lambda / z_lambda.
  std::string to_string(View view = View::Plain) const;

  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  int degree_ = 0;
  SymBasis basis_ = SymBasis::m;
  TermMap terms_;
};

using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_young_tableaux(const Partition& shape);
// i is a descent when i+1 sits in a strictly lower row.
SubsetMask tableau_descents(const Tableau& t);

// s_lambda as a sum of F over standard Young tableaux.
QSymElement schur_fundamental(const Partition& lambda);
// A symmetric basis element as a quasisymmetric function (Monomial basis).
QSymElement sym_basis_element(SymBasis basis, const Partition& lambda);
QSymElement from_sym(const SymElement& e);

// Expand a symmetric quasisymmetric function. p reads Psi coefficients
// directly, m reads Monomial coefficients, h/e/s solve an exact linear system.
// Throws InvalidArgument (with a witness) when e is not symmetric.
SymElement to_sym(const QSymElement& e, SymBasis target);

}  // namespace qsym
