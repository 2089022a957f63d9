#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cabform/errors.hpp"

namespace cabform {

/// Exact rational number in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (base 10, optional sign). The result is canonicalized.
/// Throws ParseError on malformed input or a zero denominator.
Rational parseRational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string toString(const Rational& r);

/// A ring variable: one of the geometric variables x, y, z, w or a
/// coefficient atom c_{i,j}. The total order x < y < z < w < atoms, with
/// atoms ordered by (i,j) lexicographically, fixes the canonical monomial
/// order used for serialization and witness reporting.
class VarId {
 public:
  static VarId x() { return VarId(0); }
  static VarId y() { return VarId(1); }
  static VarId z() { return VarId(2); }
  static VarId w() { return VarId(3); }

  /// Coefficient atom c_{i,j}; requires 0 <= i, j < 4096.
  static VarId coeff(int i, int j);

  bool isCoeff() const { return code_ >= kCoeffBase; }
  int coeffI() const;
  int coeffJ() const;

  /// Text rendering: "x", "y", "z", "w", "c_{i,j}".
  std::string name() const;
  /// JSON rendering: "x", "y", "z", "w", "c:i,j".
  std::string jsonName() const;

  /// Accepts both renderings. Returns nullopt on anything else.
  static std::optional<VarId> parse(std::string_view text);

  friend bool operator==(VarId a, VarId b) { return a.code_ == b.code_; }
  friend bool operator!=(VarId a, VarId b) { return a.code_ != b.code_; }
  friend bool operator<(VarId a, VarId b) { return a.code_ < b.code_; }

 private:
  explicit VarId(std::uint32_t code) : code_(code) {}
  static constexpr std::uint32_t kCoeffBase = 0x40000000u;
  std::uint32_t code_;
};

/// Product of variable powers with no zero exponents stored; the empty
/// monomial is 1. Factors are kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, int exponent = 1);

  bool isConstant() const { return factors_.empty(); }
  int degree() const;
  int exponentOf(VarId v) const;
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  /// Componentwise quotient; nullopt if any exponent would become negative.
  std::optional<Monomial> dividedBy(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

/// Graded lexicographic order: lower total degree first; on ties the
/// exponent vectors are compared lexicographically scanning variables in
/// precedence order, higher exponent earlier meaning greater.
bool grlexLess(const Monomial& a, const Monomial& b);

/// Map comparator placing the canonically greatest (leading) monomial first.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlexLess(b, a);
  }
};

/// Sparse multivariate polynomial over Rational in canonical form: no zero
/// coefficients stored, terms ordered leading-first. Two polynomials are
/// equal iff their term lists are identical. Values are immutable in spirit:
/// all operations produce new polynomials and are safe to share across
/// threads.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  Polynomial() = default;
  static Polynomial constant(Rational c);
  static Polynomial constant(long c) { return constant(Rational(c)); }
  static Polynomial one() { return constant(1); }
  static Polynomial variable(VarId v, int exponent = 1);
  static Polynomial term(Rational coefficient, Monomial m);

  bool isZero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  /// Leading (canonically first) term; requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leadingTerm() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void addTerm(const Monomial& m, const Rational& c);
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Rational& c);
Polynomial operator*(const Rational& c, const Polynomial& a);
Polynomial operator*(const Polynomial& a, long c);
Polynomial operator*(long c, const Polynomial& a);

Polynomial pow(const Polynomial& p, int exponent);

/// Formal partial derivative; coefficient atoms are constants of the ring
/// and differentiate like any other variable only when v names them.
Polynomial partialDerivative(const Polynomial& p, VarId v);

/// Simultaneous substitution: every occurrence of a bound variable in p is
/// replaced by its binding, evaluated against the original p. Unbound
/// variables are left alone.
Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Polynomial>& bindings);

/// Quotient q with q * den == num. Throws NotDivisibleError when den does
/// not divide num exactly (including den == 0).
Polynomial exactQuotient(const Polynomial& num, const Polynomial& den);

/// Degree of p in v; -1 for the zero polynomial.
int degreeIn(const Polynomial& p, VarId v);

/// Coefficient of v^k in p, as a polynomial free of v.
Polynomial coefficientOf(const Polynomial& p, VarId v, int k);

/// Remainder of p modulo a modulus that is monic in v: the result has
/// degree in v strictly below deg_v(modulus) and is congruent to p. The
/// leading v-coefficient of the modulus must be the constant 1, otherwise
/// NotMonicError is thrown.
Polynomial reduceMonic(const Polynomial& p, VarId v, const Polynomial& modulus);

/// Canonical text rendering: terms joined by " + " in canonical order,
/// coefficients as p/q (unit coefficients folded into the sign), variable
/// powers as x^2, factors joined by "*".
std::string toText(const Polynomial& p);

}  // namespace cabform
