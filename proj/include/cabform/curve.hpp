#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cabform/polynomial.hpp"

namespace cabform {

struct LatticePoint {
  int i = 0;
  int j = 0;
  friend bool operator==(LatticePoint a, LatticePoint b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator<(LatticePoint a, LatticePoint b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  }
};

/// Support lattice D = {(i,j) | a*i + b*j <= a*b, 0 <= i <= b, 0 <= j <= a},
/// sorted by (j, i). Throws NotCoprimeError unless gcd(a,b) == 1.
std::vector<LatticePoint> supportLattice(int a, int b);

/// (a-1)(b-1)/2.
int genusOf(int a, int b);

/// Vanishing order at the point at infinity of the basis differential
/// indexed by (i,j): a*b - a - b - a*i - b*j. Requires (i,j) in the basis
/// lattice.
long long orderAtInfinity(int a, int b, int i, int j);

/// Weight of the variable attached to basis index (i,j):
/// a*b - a*(i+1) - b*(j+1).
long long uWeight(int a, int b, int i, int j);

/// Weight of the coefficient c_{i,j}: a*b - a*i - b*j. Requires (i,j) in D.
long long cWeight(int a, int b, int i, int j);

/// Basis lattice J(a,b) = {(i,j) | i,j >= 0, a*i + b*j <= a*b - a - b},
/// ordered by vanishing order descending. Its size is the genus.
class BasisIndexSet {
 public:
  BasisIndexSet(int a, int b);

  const std::vector<LatticePoint>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int i, int j) const;
  long long orderOf(int i, int j) const;
  int a() const { return a_; }
  int b() const { return b_; }

 private:
  int a_;
  int b_;
  std::vector<LatticePoint> indices_;
};

inline BasisIndexSet basisLattice(int a, int b) { return BasisIndexSet(a, b); }

/// A plane curve sum c_{i,j} x^i y^j = 0 with coprime exponent bounds (a,b)
/// and coefficients supported on D. Each coefficient is either an exact
/// rational or symbolic (a distinct ring atom). Validated invariants:
/// gcd(a,b) = 1, all assigned indices lie in D, c_{0,a} = 1 exactly, and
/// c_{b,0} is nonzero or symbolic. Immutable after construction.
class CurveSpec {
 public:
  struct Entry {
    int i = 0;
    int j = 0;
    std::optional<Rational> value;  // nullopt marks a symbolic coefficient
  };

  CurveSpec(int a, int b, std::vector<Entry> entries);

  /// Every index of D symbolic except the mandatory c_{0,a} = 1 and nothing
  /// pinned.
  static CurveSpec symbolic(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  int genus() const { return genusOf(a_, b_); }
  const std::vector<LatticePoint>& support() const { return support_; }
  const BasisIndexSet& basis() const { return basis_; }

  /// The coefficient at (i,j) as a polynomial: zero, a rational constant,
  /// or the atom c_{i,j}. Indices outside D are zero.
  Polynomial coefficient(int i, int j) const;
  bool isSymbolicAt(int i, int j) const;
  bool hasSymbolicCoefficients() const;

  Polynomial curveXY() const;  // the defining polynomial in (x, y)
  Polynomial curveZW() const;  // the same polynomial in (z, w)

 private:
  int a_;
  int b_;
  std::vector<LatticePoint> support_;
  BasisIndexSet basis_;
  std::vector<Entry> entries_;  // sorted by (j, i), zero entries dropped
};

/// Row polynomial of the curve in z: sum over (i, j) in D of c_{i,j} z^i.
/// Requires 0 <= j <= a.
Polynomial rowPolyZ(const CurveSpec& spec, int j);

/// Row polynomial in x: sum over (r, u) in D of c_{r,u} x^r.
Polynomial rowPolyX(const CurveSpec& spec, int u);

/// (y^j - w^j) / (y - w) = sum_{t=0}^{j-1} w^t y^{j-1-t}; zero for j = 0.
Polynomial powerDifferenceQuotient(int j);

enum class HomogeneityStatus { homogeneous, inhomogeneous, notApplicable };

/// Weighted homogeneity of the defining polynomial at weight a*b, with
/// wt(x) = wt(z) = a, wt(y) = wt(w) = b and wt(c_{i,j}) = a*b - a*i - b*j.
/// Atoms outside D make the polynomial inhomogeneous by definition.
bool isWeightHomogeneous(const Polynomial& p, int a, int b);

/// notApplicable when the curve carries no symbolic coefficients.
HomogeneityStatus homogeneity(const CurveSpec& spec);

/// Corpus builders used by the verification engine and tests.
CurveSpec cyclicCurve(int a, int b);                 // y^a + f0(x), row 0 symbolic
CurveSpec hyperellipticCurve(int g);                 // a = 2, b = 2g+1, row 1 zero
CurveSpec generalizedHyperellipticCurve(int b);      // a = 2, rows 0 and 1 symbolic
CurveSpec trigonalCurve(int b);                      // a = 3, rows 0 and 1 symbolic

}  // namespace cabform
