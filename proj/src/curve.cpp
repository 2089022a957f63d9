#include "cabform/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cabform {

namespace {

void requireCoprime(int a, int b) {
  if (a < 1 || b < 1) throw NotCoprimeError("a and b must be positive");
  if (std::gcd(a, b) != 1) throw NotCoprimeError("a and b must be coprime");
}

bool inSupport(int a, int b, int i, int j) {
  return i >= 0 && j >= 0 && i <= b && j <= a &&
         static_cast<long long>(a) * i + static_cast<long long>(b) * j <=
             static_cast<long long>(a) * b;
}

bool inBasis(int a, int b, int i, int j) {
  return i >= 0 && j >= 0 &&
         static_cast<long long>(a) * i + static_cast<long long>(b) * j <=
             static_cast<long long>(a) * b - a - b;
}

}  // namespace

std::vector<LatticePoint> supportLattice(int a, int b) {
  requireCoprime(a, b);
  std::vector<LatticePoint> out;
  for (int j = 0; j <= a; ++j)
    for (int i = 0; i <= b; ++i)
      if (inSupport(a, b, i, j)) out.push_back({i, j});
  return out;
}

int genusOf(int a, int b) {
  requireCoprime(a, b);
  return (a - 1) * (b - 1) / 2;
}

long long orderAtInfinity(int a, int b, int i, int j) {
  requireCoprime(a, b);
  if (!inBasis(a, b, i, j))
    throw IndexOutOfRangeError("(i,j) is not a basis index");
  return static_cast<long long>(a) * b - a - b - static_cast<long long>(a) * i -
         static_cast<long long>(b) * j;
}

long long uWeight(int a, int b, int i, int j) {
  requireCoprime(a, b);
  if (!inBasis(a, b, i, j))
    throw IndexOutOfRangeError("(i,j) is not a basis index");
  return static_cast<long long>(a) * b - static_cast<long long>(a) * (i + 1) -
         static_cast<long long>(b) * (j + 1);
}

long long cWeight(int a, int b, int i, int j) {
  requireCoprime(a, b);
  if (!inSupport(a, b, i, j))
    throw IndexOutOfRangeError("(i,j) is not a support index");
  return static_cast<long long>(a) * b - static_cast<long long>(a) * i -
         static_cast<long long>(b) * j;
}

BasisIndexSet::BasisIndexSet(int a, int b) : a_(a), b_(b) {
  requireCoprime(a, b);
  for (int j = 0; j <= a; ++j)
    for (int i = 0; i <= b; ++i)
      if (inBasis(a, b, i, j)) indices_.push_back({i, j});
  std::sort(indices_.begin(), indices_.end(),
            [a, b](LatticePoint p, LatticePoint q) {
              const long long op = orderAtInfinity(a, b, p.i, p.j);
              const long long oq = orderAtInfinity(a, b, q.i, q.j);
              if (op != oq) return op > oq;
              return p < q;
            });
}

bool BasisIndexSet::contains(int i, int j) const { return inBasis(a_, b_, i, j); }

long long BasisIndexSet::orderOf(int i, int j) const {
  return orderAtInfinity(a_, b_, i, j);
}

CurveSpec::CurveSpec(int a, int b, std::vector<Entry> entries)
    : a_(a), b_(b), support_(supportLattice(a, b)), basis_(a, b) {
  std::map<std::pair<int, int>, std::optional<Rational>> seen;
  for (const auto& e : entries) {
    if (!inSupport(a_, b_, e.i, e.j))
      throw InvalidCurveError("coefficient index (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + ") lies outside the support lattice");
    if (!seen.emplace(std::make_pair(e.i, e.j), e.value).second)
      throw InvalidCurveError("duplicate coefficient index (" + std::to_string(e.i) +
                              "," + std::to_string(e.j) + ")");
  }
  const auto monic = seen.find({0, a_});
  if (monic == seen.end() || !monic->second || *monic->second != 1)
    throw InvalidCurveError("the coefficient at (0," + std::to_string(a_) +
                            ") must be present with value 1");
  const auto corner = seen.find({b_, 0});
  if (corner == seen.end() || (corner->second && *corner->second == 0))
    throw InvalidCurveError("the coefficient at (" + std::to_string(b_) +
                            ",0) must be nonzero or symbolic");
  for (const auto& [key, value] : seen) {
    if (value && *value == 0) continue;  // explicit zeros behave like omissions
    entries_.push_back({key.first, key.second, value});
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& p, const Entry& q) {
    return LatticePoint{p.i, p.j} < LatticePoint{q.i, q.j};
  });
}

CurveSpec CurveSpec::symbolic(int a, int b) {
  std::vector<Entry> entries;
  for (const auto& p : supportLattice(a, b)) {
    if (p.i == 0 && p.j == a)
      entries.push_back({p.i, p.j, Rational(1)});
    else
      entries.push_back({p.i, p.j, std::nullopt});
  }
  return CurveSpec(a, b, std::move(entries));
}

Polynomial CurveSpec::coefficient(int i, int j) const {
  for (const auto& e : entries_) {
    if (e.i != i || e.j != j) continue;
    if (!e.value) return Polynomial::variable(VarId::coeff(i, j));
    return Polynomial::constant(*e.value);
  }
  return {};
}

bool CurveSpec::isSymbolicAt(int i, int j) const {
  for (const auto& e : entries_)
    if (e.i == i && e.j == j) return !e.value.has_value();
  return false;
}

bool CurveSpec::hasSymbolicCoefficients() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return !e.value.has_value(); });
}

Polynomial CurveSpec::curveXY() const {
  Polynomial f;
  for (const auto& e : entries_)
    f += coefficient(e.i, e.j) * Polynomial::variable(VarId::x(), e.i) *
         Polynomial::variable(VarId::y(), e.j);
  return f;
}

Polynomial CurveSpec::curveZW() const {
  Polynomial f;
  for (const auto& e : entries_)
    f += coefficient(e.i, e.j) * Polynomial::variable(VarId::z(), e.i) *
         Polynomial::variable(VarId::w(), e.j);
  return f;
}

Polynomial rowPolyZ(const CurveSpec& spec, int j) {
  if (j < 0 || j > spec.a()) throw IndexOutOfRangeError("row index out of range");
  Polynomial out;
  for (const auto& p : spec.support())
    if (p.j == j) out += spec.coefficient(p.i, p.j) * Polynomial::variable(VarId::z(), p.i);
  return out;
}

Polynomial rowPolyX(const CurveSpec& spec, int u) {
  if (u < 0 || u > spec.a()) throw IndexOutOfRangeError("row index out of range");
  Polynomial out;
  for (const auto& p : spec.support())
    if (p.j == u) out += spec.coefficient(p.i, p.j) * Polynomial::variable(VarId::x(), p.i);
  return out;
}

Polynomial powerDifferenceQuotient(int j) {
  if (j < 0) throw IndexOutOfRangeError("negative power index");
  Polynomial out;
  for (int t = 0; t <= j - 1; ++t)
    out += Polynomial::variable(VarId::w(), t) *
           Polynomial::variable(VarId::y(), j - 1 - t);
  return out;
}

bool isWeightHomogeneous(const Polynomial& p, int a, int b) {
  const long long target = static_cast<long long>(a) * b;
  for (const auto& [m, c] : p.terms()) {
    long long weight = 0;
    for (const auto& [v, e] : m.factors()) {
      if (v == VarId::x() || v == VarId::z()) {
        weight += static_cast<long long>(a) * e;
      } else if (v == VarId::y() || v == VarId::w()) {
        weight += static_cast<long long>(b) * e;
      } else {
        const int i = v.coeffI();
        const int j = v.coeffJ();
        if (!inSupport(a, b, i, j)) return false;
        weight += (static_cast<long long>(a) * b - static_cast<long long>(a) * i -
                   static_cast<long long>(b) * j) *
                  e;
      }
    }
    if (weight != target) return false;
  }
  return true;
}

HomogeneityStatus homogeneity(const CurveSpec& spec) {
  if (!spec.hasSymbolicCoefficients()) return HomogeneityStatus::notApplicable;
  return isWeightHomogeneous(spec.curveXY(), spec.a(), spec.b())
             ? HomogeneityStatus::homogeneous
             : HomogeneityStatus::inhomogeneous;
}

CurveSpec cyclicCurve(int a, int b) {
  std::vector<CurveSpec::Entry> entries;
  for (const auto& p : supportLattice(a, b))
    if (p.j == 0) entries.push_back({p.i, 0, std::nullopt});
  entries.push_back({0, a, Rational(1)});
  return CurveSpec(a, b, std::move(entries));
}

CurveSpec hyperellipticCurve(int g) {
  if (g < 1) throw IndexOutOfRangeError("genus must be positive");
  return cyclicCurve(2, 2 * g + 1);
}

CurveSpec generalizedHyperellipticCurve(int b) {
  std::vector<CurveSpec::Entry> entries;
  for (const auto& p : supportLattice(2, b))
    if (p.j <= 1) entries.push_back({p.i, p.j, std::nullopt});
  entries.push_back({0, 2, Rational(1)});
  return CurveSpec(2, b, std::move(entries));
}

CurveSpec trigonalCurve(int b) {
  std::vector<CurveSpec::Entry> entries;
  for (const auto& p : supportLattice(3, b))
    if (p.j <= 1) entries.push_back({p.i, p.j, std::nullopt});
  entries.push_back({0, 3, Rational(1)});
  return CurveSpec(3, b, std::move(entries));
}

}  // namespace cabform
