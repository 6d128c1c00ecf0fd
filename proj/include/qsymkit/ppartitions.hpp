#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsymkit/poset.hpp"
#include "qsymkit/qsym.hpp"

namespace qsym::pp {

using posets::Equivalence;
using posets::LabeledPoset;
using posets::Poset;

enum class Route { All, Fundamental, LStar, OStar };
Route parse_route(const std::string& s);  // all | F | Lstar | Ostar
const char* route_name(Route r);

// alpha -> z_alpha times the coefficient of Psi_alpha.
using Certificates = std::map<Composition, ParamPoly>;

struct PsiReport {
  QSymElement element;        // Psi basis, plain coefficients
  Certificates certificates;  // coefficients of Psi_alpha / z_alpha
  std::vector<std::string> routes;  // routes computed and found equal
  bool positive = true;       // certificates have nonnegative integer coefficients
  std::optional<Equivalence> closure;  // E' when E had to be closed
  std::optional<LabeledPoset> closed_poset;
  std::vector<std::string> notes;
};

Certificates certificates_of(const QSymElement& e);
QSymElement element_from_certificates(int degree, const Certificates& c);
bool certificates_positive(const Certificates& c);

// Sum of F_{DES sigma} over the Jordan-Hoelder set; any labeling.
QSymElement kp_fundamental(const LabeledPoset& p);

// K_P through F, L* and O* (as selected); natural labeling required.
PsiReport kp_psi(const LabeledPoset& p, Route route = Route::All);
PsiReport kp_psi(const Poset& p, Route route = Route::All);

// Sum over all order-preserving surjections of M_{type}.
QSymElement kp_monomial_oracle(const Poset& p);
// Order-preserving colorings P -> [m], optionally strict along every relation.
TruncatedPoly colorings_truncated(const Poset& p, int m, bool strict = false);

// omega K_{P,w} for an order-reversing w, via kp_psi of the dual poset with
// the same labels (then natural).
PsiReport kp_omega_strict(const LabeledPoset& p, Route route = Route::All);

// K_{P,E}: colorings constant on E-classes. E is closed first when it is not a
// chain congruence; the report then carries E' and P'.
PsiReport kpe_psi(const LabeledPoset& p, const Equivalence& e, Route route = Route::All);
QSymElement kpe_monomial_oracle(const Poset& p, const Equivalence& e);

struct RecursionCheck {
  bool applicable = false;  // some class has two or more elements
  bool holds = true;
  std::vector<int> split_class;  // class used for the split
};
// K_{P,E} = K_{P,E'} + K_{P,E''} - K_{P',E'} where E' splits off max C,
// E'' splits off min C and P' drops the relations below max C inside C.
RecursionCheck kpe_recursion_check(const LabeledPoset& p, const Equivalence& e);

// Weighted K_P^d. Weights >= 1 use the Psi formula through L* and O*; a zero
// weight falls back to the leading-variable monomial oracle with a warning.
PsiReport kpd_psi(const LabeledPoset& p, const std::vector<int>& weights, Route route = Route::All);
// Coefficient of x_1^{b_1}...x_l^{b_l}, for every composition b of |d|.
QSymElement kpd_monomial_oracle(const Poset& p, const std::vector<int>& weights);

}  // namespace qsym::pp
