#include "cabform/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cabform {

Rational parseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in rational '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

std::string toString(const Rational& r) { return r.get_str(); }

VarId VarId::coeff(int i, int j) {
  if (i < 0 || j < 0 || i >= 4096 || j >= 4096)
    throw IndexOutOfRangeError("coefficient atom index out of range");
  return VarId(kCoeffBase + (static_cast<std::uint32_t>(i) << 12) +
               static_cast<std::uint32_t>(j));
}

int VarId::coeffI() const { return static_cast<int>((code_ - kCoeffBase) >> 12); }

int VarId::coeffJ() const { return static_cast<int>((code_ - kCoeffBase) & 0xfffu); }

std::string VarId::name() const {
  static const char* geo[] = {"x", "y", "z", "w"};
  if (!isCoeff()) return geo[code_];
  return "c_{" + std::to_string(coeffI()) + "," + std::to_string(coeffJ()) + "}";
}

std::string VarId::jsonName() const {
  static const char* geo[] = {"x", "y", "z", "w"};
  if (!isCoeff()) return geo[code_];
  return "c:" + std::to_string(coeffI()) + "," + std::to_string(coeffJ());
}

namespace {

std::optional<int> parseSmallInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

std::optional<VarId> VarId::parse(std::string_view text) {
  if (text == "x") return x();
  if (text == "y") return y();
  if (text == "z") return z();
  if (text == "w") return w();
  std::string_view body;
  if (text.size() > 2 && text.substr(0, 2) == "c:") {
    body = text.substr(2);
  } else if (text.size() > 4 && text.substr(0, 3) == "c_{" && text.back() == '}') {
    body = text.substr(3, text.size() - 4);
  } else {
    return std::nullopt;
  }
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto i = parseSmallInt(body.substr(0, comma));
  auto j = parseSmallInt(body.substr(comma + 1));
  if (!i || !j || *i >= 4096 || *j >= 4096) return std::nullopt;
  return coeff(*i, *j);
}

Monomial Monomial::variable(VarId v, int exponent) {
  Monomial m;
  if (exponent < 0) throw IndexOutOfRangeError("negative exponent");
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponentOf(VarId v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::dividedBy(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  return out;
}

bool grlexLess(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    if (j == b.factors().end()) return false;  // b ran out: a has the earlier var
    if (i == a.factors().end()) return true;
    if (i->first < j->first) return false;  // a has positive exponent where b has 0
    if (j->first < i->first) return true;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return false;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.addTerm(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(VarId v, int exponent) {
  Polynomial p;
  p.addTerm(Monomial::variable(v, exponent), Rational(1));
  return p;
}

Polynomial Polynomial::term(Rational coefficient, Monomial m) {
  Polynomial p;
  p.addTerm(m, coefficient);
  return p;
}

const std::pair<const Monomial, Rational>& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, Rational(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial zero;
  zero -= a;
  return zero;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Rational c = ca * cb;
      out += Polynomial::term(c, ma.times(mb));
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  if (c == 0) return {};
  Polynomial out;
  for (const auto& [m, coeff] : a.terms()) {
    Rational prod = coeff * c;
    out += Polynomial::term(prod, m);
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

Polynomial operator*(const Polynomial& a, long c) { return a * Rational(c); }

Polynomial operator*(long c, const Polynomial& a) { return a * Rational(c); }

Polynomial pow(const Polynomial& p, int exponent) {
  if (exponent < 0) throw IndexOutOfRangeError("negative polynomial power");
  Polynomial out = Polynomial::one();
  for (int k = 0; k < exponent; ++k) out *= p;
  return out;
}

Polynomial partialDerivative(const Polynomial& p, VarId v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponentOf(v);
    if (e == 0) continue;
    auto reduced = m.dividedBy(Monomial::variable(v));
    Rational coeff = c * e;
    out += Polynomial::term(coeff, *reduced);
  }
  return out;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Polynomial>& bindings) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(c);
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        untouched = untouched.times(Monomial::variable(v, e));
      } else {
        t *= pow(it->second, e);
      }
    }
    if (!untouched.isConstant()) t *= Polynomial::term(Rational(1), untouched);
    out += t;
  }
  return out;
}

Polynomial exactQuotient(const Polynomial& num, const Polynomial& den) {
  if (den.isZero()) throw NotDivisibleError("division by the zero polynomial");
  Polynomial remainder = num;
  Polynomial quotient;
  const auto& [dm, dc] = den.leadingTerm();
  while (!remainder.isZero()) {
    const auto& [rm, rc] = remainder.leadingTerm();
    auto m = rm.dividedBy(dm);
    if (!m) throw NotDivisibleError("nonzero remainder in exact division");
    Rational c = rc / dc;
    Polynomial t = Polynomial::term(c, *m);
    quotient += t;
    remainder -= t * den;
  }
  return quotient;
}

int degreeIn(const Polynomial& p, VarId v) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponentOf(v));
  return d;
}

Polynomial coefficientOf(const Polynomial& p, VarId v, int k) {
  Polynomial out;
  const Monomial vk = Monomial::variable(v, k);
  for (const auto& [m, c] : p.terms()) {
    if (m.exponentOf(v) != k) continue;
    out += Polynomial::term(c, *m.dividedBy(vk));
  }
  return out;
}

Polynomial reduceMonic(const Polynomial& p, VarId v, const Polynomial& modulus) {
  const int d = degreeIn(modulus, v);
  if (d < 1) throw NotMonicError("reduction modulus has no positive degree in the variable");
  if (coefficientOf(modulus, v, d) != Polynomial::one())
    throw NotMonicError("reduction modulus is not monic in the variable");
  Polynomial remainder = p;
  for (;;) {
    const int k = degreeIn(remainder, v);
    if (k < d) return remainder;
    Polynomial top = coefficientOf(remainder, v, k);
    remainder -= top * Polynomial::variable(v, k - d) * modulus;
  }
}

std::string toText(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    if (m.isConstant()) {
      out << toString(c);
    } else {
      if (c == -1) {
        out << "-";
      } else if (c != 1) {
        out << toString(c) << "*";
      }
      bool firstVar = true;
      for (const auto& [v, e] : m.factors()) {
        if (!firstVar) out << "*";
        firstVar = false;
        out << v.name();
        if (e > 1) out << "^" << e;
      }
    }
  }
  return out.str();
}

}  // namespace cabform
