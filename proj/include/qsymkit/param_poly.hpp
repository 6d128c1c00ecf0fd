#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qsym {

using Integer = mpz_class;
using Rational = mpq_class;

// Formal parameters a coefficient polynomial may use. The unimodal-pair
// generating function stores its length variable in the y slot.
enum class Param : std::uint8_t { q = 0, y = 1, z = 2 };
inline constexpr std::size_t kParamCount = 3;

const char* param_name(Param p);

struct Exponent {
  std::array<std::uint16_t, kParamCount> e{};

  unsigned total() const { return unsigned(e[0]) + e[1] + e[2]; }
  unsigned operator[](Param p) const { return e[static_cast<std::size_t>(p)]; }
  bool is_zero() const { return total() == 0; }
  bool operator==(const Exponent&) const = default;

  static Exponent of(Param p, unsigned k);
};

// Total degree first, then q-heavy before y-heavy before z-heavy.
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Polynomial in q, y, z with rational coefficients. Zero terms never stored.
class ParamPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedOrder>;

  ParamPoly() = default;
  ParamPoly(long c);             // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static ParamPoly var(Param p, unsigned power = 1);
  static ParamPoly term(const Exponent& e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;
  Rational coeff(const Exponent& e) const;
  unsigned degree(Param p) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);
  ParamPoly operator-() const;

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  void add_term(const Exponent& e, const Rational& c);

  // Replace p by `image` everywhere.
  ParamPoly substitute(Param p, const ParamPoly& image) const;
  // Coefficient of p^k, as a polynomial in the other parameters.
  ParamPoly coefficient_of(Param p, unsigned k) const;
  ParamPoly pow(unsigned k) const;

  bool is_integral() const;
  bool has_nonnegative_integer_coefficients() const;

  // "1 + 4*q + q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string rational_to_string(const Rational& r);
std::string monomial_to_string(const Exponent& e);

// [a]_q = 1 + q + ... + q^{a-1}; [0]_q = 0.
ParamPoly q_int(unsigned a);
// Eulerian polynomial sum over S_k of q^des, with A_0 = 1.
ParamPoly eulerian_poly(unsigned k);

// Univariate check in `var`: after dropping zeros at both ends the
// coefficient sequence rises then falls. The zero polynomial is unimodal.
bool is_unimodal(const ParamPoly& p, Param var = Param::q);

}  // namespace qsym
