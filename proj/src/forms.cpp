#include "cabform/forms.hpp"

#include <algorithm>
#include <string>

namespace cabform {

namespace {

Polynomial varX(int e = 1) { return Polynomial::variable(VarId::x(), e); }
Polynomial varY(int e = 1) { return Polynomial::variable(VarId::y(), e); }
Polynomial varZ(int e = 1) { return Polynomial::variable(VarId::z(), e); }
Polynomial varW(int e = 1) { return Polynomial::variable(VarId::w(), e); }
Polynomial xMinusZ() { return varX() - varZ(); }

long long floorDiv(long long a, long long b) { return a / b; }  // a >= 0, b >= 1
long long ceilDiv(long long a, long long b) { return (a + b - 1) / b; }

std::vector<int> rowColumns(const CurveSpec& spec, int j) {
  std::vector<int> cols;
  for (const auto& p : spec.support())
    if (p.j == j && !spec.coefficient(p.i, p.j).isZero()) cols.push_back(p.i);
  return cols;
}

}  // namespace

long long modLow(long long alpha, long long beta) {
  if (alpha < 0 || beta < 1) throw IndexOutOfRangeError("modLow arguments out of range");
  return alpha % beta;
}

long long modHigh(long long alpha, long long beta, ModBarConvention convention) {
  if (alpha < 0 || beta < 1) throw IndexOutOfRangeError("modHigh arguments out of range");
  const long long low = alpha % beta;
  if (low != 0) return low;
  return convention == ModBarConvention::betaValued ? beta : alpha;
}

SecondKindBasis::SecondKindBasis(BasisIndexSet indices,
                                 std::vector<Polynomial> numerators)
    : indices_(std::move(indices)), numerators_(std::move(numerators)) {
  if (indices_.size() != numerators_.size())
    throw Error("basis index count does not match numerator count");
  for (const auto& r : numerators_)
    max_w_degree_ = std::max(max_w_degree_, degreeIn(r, VarId::w()));
}

const Polynomial& SecondKindBasis::numerator(int i, int j) const {
  const auto& idx = indices_.indices();
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k].i == i && idx[k].j == j) return numerators_[k];
  throw IndexOutOfRangeError("(i,j) is not a basis index");
}

SecondKindBasis SecondKindBasis::withNumerator(int i, int j,
                                               Polynomial replacement) const {
  const auto& idx = indices_.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k].i != i || idx[k].j != j) continue;
    std::vector<Polynomial> numerators = numerators_;
    numerators[k] = std::move(replacement);
    return SecondKindBasis(indices_, std::move(numerators));
  }
  throw IndexOutOfRangeError("(i,j) is not a basis index");
}

Polynomial secondKindNumerator(const CurveSpec& spec, int i, int j,
                               const ConstructionOptions& opts) {
  if (!spec.basis().contains(i, j))
    throw IndexOutOfRangeError("(i,j) is not a basis index");
  const int a = spec.a();
  Polynomial out;

  // First family: pairs (r,u) x (s,j+1) with u <= j, s >= i+2, factor
  // u*(s-i-1), monomial z^{r+s-i-2} w^{u-1}. u = 0 contributes factor zero.
  for (int u = 1; u <= j; ++u) {
    for (int r : rowColumns(spec, u)) {
      for (int s : rowColumns(spec, j + 1)) {
        if (s < i + 2) continue;
        const long long factor = static_cast<long long>(u) * (s - i - 1);
        out += spec.coefficient(r, u) * spec.coefficient(s, j + 1) *
               Polynomial::constant(factor) * varZ(r + s - i - 2) * varW(u - 1);
      }
    }
  }

  // Second family: pairs (r,j+1) x (s,v) with v >= j+1, r >= i+2, factor
  // (j+1)*(r-i-1), monomial z^{r+s-i-2} w^{v-1}.
  for (int v = j + 1; v <= a; ++v) {
    for (int r : rowColumns(spec, j + 1)) {
      if (r < i + 2) continue;
      for (int s : rowColumns(spec, v)) {
        const long long factor = static_cast<long long>(j + 1) * (r - i - 1);
        out += spec.coefficient(r, j + 1) * spec.coefficient(s, v) *
               Polynomial::constant(factor) * varZ(r + s - i - 2) * varW(v - 1);
      }
    }
  }

  // Third family: pairs (r,u) x (s,v) with u <= j, v >= j+2, r+s >= i+2,
  // factor (i+1)(v-u) - (j+1-u)s - (v-j-1)r, monomial z^{r+s-i-2} w^{u+v-j-2}.
  // The region constraint selects which side of the vanishing locus of the
  // factor is summed; proofConsistent keeps the nonpositive side.
  for (int u = 0; u <= j; ++u) {
    for (int v = j + 2; v <= a; ++v) {
      const long long beta = v - u;
      for (int r : rowColumns(spec, u)) {
        for (int s : rowColumns(spec, v)) {
          if (r + s < i + 2) continue;
          const long long weighted = static_cast<long long>(j + 1 - u) * s +
                                     static_cast<long long>(v - j - 1) * r;
          const long long bound = static_cast<long long>(i + 1) * beta;
          const bool keep = opts.region == RegionConvention::proofConsistent
                                ? weighted >= bound
                                : weighted <= bound;
          if (!keep) continue;
          out += spec.coefficient(r, u) * spec.coefficient(s, v) *
                 Polynomial::constant(bound - weighted) * varZ(r + s - i - 2) *
                 varW(u + v - j - 2);
        }
      }
    }
  }

  return out;
}

SecondKindBasis secondKindBasis(const CurveSpec& spec,
                                const ConstructionOptions& opts) {
  std::vector<Polynomial> numerators;
  for (const auto& p : spec.basis().indices())
    numerators.push_back(secondKindNumerator(spec, p.i, p.j, opts));
  SecondKindBasis basis(spec.basis(), std::move(numerators));
  if (basis.maxWDegree() > spec.a() - 1)
    throw Error("second-kind numerator exceeds the expected w-degree bound");
  return basis;
}

FundamentalForm fundamentalForm(const CurveSpec& spec,
                                const ConstructionOptions& opts) {
  const int a = spec.a();
  Polynomial g;

  // Diagonal blocks u = v: u * sum c_{r,u} c_{s,u} x^r z^s y^{u-1} w^{u-1}.
  for (int u = 1; u <= a; ++u) {
    Polynomial block;
    for (int r : rowColumns(spec, u))
      for (int s : rowColumns(spec, u))
        block += spec.coefficient(r, u) * spec.coefficient(s, u) * varX(r) * varZ(s);
    g += Polynomial::constant(u) * block * varY(u - 1) * varW(u - 1);
  }

  for (int u = 0; u <= a; ++u) {
    for (int v = u + 1; v <= a; ++v) {
      // Paired off-diagonal blocks carry the factor u.
      if (u >= 1) {
        Polynomial b12, b34;
        for (int r : rowColumns(spec, u)) {
          for (int s : rowColumns(spec, v)) {
            const Polynomial cc = spec.coefficient(r, u) * spec.coefficient(s, v);
            b12 += cc * varX(r) * varZ(s);
            b34 += cc * varX(s) * varZ(r);
          }
        }
        g += Polynomial::constant(u) *
             (b12 * varY(u - 1) * varW(v - 1) + b34 * varY(v - 1) * varW(u - 1));
      }

      // Mixed block: for each k strictly between u and v, two monomials with
      // mod-weighted coefficients, subtracted.
      const long long beta = v - u;
      for (int k = u + 1; k <= v - 1; ++k) {
        Polynomial block;
        for (int r : rowColumns(spec, u)) {
          for (int s : rowColumns(spec, v)) {
            const long long first = static_cast<long long>(k - u) * s +
                                    static_cast<long long>(v - k) * r;
            const long long second = static_cast<long long>(k - u) * r +
                                     static_cast<long long>(v - k) * s;
            Polynomial pair =
                Polynomial::constant(modHigh(first, beta, opts.mod_bar)) *
                    varZ(static_cast<int>(ceilDiv(first, beta))) *
                    varX(static_cast<int>(floorDiv(second, beta))) +
                Polynomial::constant(modLow(second, beta)) *
                    varZ(static_cast<int>(floorDiv(first, beta))) *
                    varX(static_cast<int>(ceilDiv(second, beta)));
            block += spec.coefficient(r, u) * spec.coefficient(s, v) * pair;
          }
        }
        g -= block * varW(k - 1) * varY(u + v - k - 1);
      }
    }
  }

  return FundamentalForm{g};
}

Polynomial bilinearBlock(const CurveSpec& spec, int i, int j) {
  const int a = spec.a();
  if (i < 0 || i > a || j < 0 || j > a)
    throw IndexOutOfRangeError("bilinear block index out of range");
  const Polynomial gi = rowPolyZ(spec, i);
  const Polynomial gj = rowPolyZ(spec, j);
  if (gi.isZero() || gj.isZero()) return {};
  const Polynomial gi_prime = partialDerivative(gi, VarId::z());

  const Polynomial hi = powerDifferenceQuotient(i);
  const Polynomial hj = powerDifferenceQuotient(j);

  Polynomial first = -varW(i) * partialDerivative(hj, VarId::w()) -
                     partialDerivative(hi, VarId::y()) * varW(j);
  Polynomial second;
  if (j >= 1) {
    first += Polynomial::constant(j) * varW(j - 1) * hi;
    second = Polynomial::constant(j) *
             (varW(j - 1) * hi - powerDifferenceQuotient(j - 1) * varW(i));
  }
  return first * gi_prime * gj * xMinusZ() + second * gi * gj;
}

Polynomial bilinearBlockSum(const CurveSpec& spec) {
  Polynomial out;
  for (int u = 0; u <= spec.a(); ++u)
    for (int v = 0; v <= spec.a(); ++v) out += bilinearBlock(spec, u, v);
  return out;
}

OmegaParts omegaParts(const CurveSpec& spec) {
  const Polynomial f_zw = spec.curveZW();
  const Polynomial f_zy =
      substitute(f_zw, {{VarId::w(), varY()}});  // F(z, y)
  OmegaParts parts;
  parts.h = exactQuotient(f_zy - f_zw, varY() - varW());
  parts.h_z = partialDerivative(parts.h, VarId::z());
  parts.h_w = partialDerivative(parts.h, VarId::w());
  const Polynomial f_z = partialDerivative(f_zw, VarId::z());
  const Polynomial f_w = partialDerivative(f_zw, VarId::w());
  parts.numerator =
      (parts.h_z * f_w - parts.h_w * f_z) * xMinusZ() + parts.h * f_w;
  return parts;
}

Polynomial symmetrizedBlockRhs(const CurveSpec& spec, int m, int n) {
  const int a = spec.a();
  if (m < 0 || n < m || n > a)
    throw IndexOutOfRangeError("block pair index out of range");
  const Polynomial gm = rowPolyZ(spec, m);
  const Polynomial gn = rowPolyZ(spec, n);
  const Polynomial gm_prime = partialDerivative(gm, VarId::z());
  const Polynomial gn_prime = partialDerivative(gn, VarId::z());

  Polynomial out;
  if (m >= 1) {
    out += Polynomial::constant(m) * varW(m - 1) * varY(n - 1) *
           (gm * gn_prime * xMinusZ() + gm * gn);
    out += Polynomial::constant(m) * varW(n - 1) * varY(m - 1) *
           (gm_prime * gn * xMinusZ() + gm * gn);
  }
  for (int k = m + 1; k <= n - 1; ++k) {
    out -= ((Polynomial::constant(n - k) * gm * gn_prime +
             Polynomial::constant(k - m) * gm_prime * gn) *
                xMinusZ() +
            Polynomial::constant(n - m) * gm * gn) *
           varW(k - 1) * varY(m + n - k - 1);
  }
  return out;
}

TelescopePieces telescopePieces(int u, int v, int k, int r, int s) {
  if (!(0 <= u && u < k && k < v) || r < 0 || s < 0)
    throw IndexOutOfRangeError("telescope tuple requires u < k < v and r, s >= 0");
  const long long beta = v - u;
  const long long first = static_cast<long long>(v - k) * s +
                          static_cast<long long>(k - u) * r;
  const long long second = static_cast<long long>(v - k) * r +
                           static_cast<long long>(k - u) * s;

  TelescopePieces out;
  out.p = floorDiv(first, beta);
  out.q = floorDiv(second, beta);
  if (!(out.p * beta <= first && first < (out.p + 1) * beta) ||
      !(out.q * beta <= second && second < (out.q + 1) * beta))
    throw Error("telescope quotients violate their bracketing inequalities");
  if (out.p + out.q != r + s && out.p + out.q + 1 != r + s)
    throw Error("telescope quotients violate p + q in {r+s, r+s-1}");

  const auto lhs = [&](long long weighted, long long steps) {
    Polynomial t = Polynomial::constant(beta) * varZ(r + s);
    if (weighted > 0)
      t += Polynomial::constant(weighted) * varZ(r + s - 1) * xMinusZ();
    Polynomial delta;
    for (long long h = 1; h <= steps; ++h)
      delta += Polynomial::constant(weighted - beta * h) *
               varZ(static_cast<int>(r + s - h - 1)) * varX(static_cast<int>(h - 1));
    return t + xMinusZ() * xMinusZ() * delta;
  };
  const auto rhs = [&](long long za, long long xb) {
    return Polynomial::constant(modHigh(za, beta)) *
               varZ(static_cast<int>(ceilDiv(za, beta))) *
               varX(static_cast<int>(floorDiv(xb, beta))) +
           Polynomial::constant(modLow(xb, beta)) *
               varZ(static_cast<int>(floorDiv(za, beta))) *
               varX(static_cast<int>(ceilDiv(xb, beta)));
  };

  out.lhs_k = lhs(first, out.p);
  out.lhs_conjugate = lhs(second, out.q);
  out.rhs_k = rhs(second, first);
  out.rhs_conjugate = rhs(first, second);
  return out;
}

Polynomial assembledNumerator(const CurveSpec& spec, const SecondKindBasis& basis) {
  Polynomial correction;
  const auto& idx = basis.indices().indices();
  for (std::size_t k = 0; k < idx.size(); ++k)
    correction += varX(idx[k].i) * varY(idx[k].j) * basis.numerators()[k];
  return bilinearBlockSum(spec) + xMinusZ() * xMinusZ() * correction;
}

Polynomial swapPairs(const Polynomial& p) {
  return substitute(p, {{VarId::x(), varZ()},
                        {VarId::z(), varX()},
                        {VarId::y(), varW()},
                        {VarId::w(), varY()}});
}

Polynomial diagonalRestriction(const Polynomial& p) {
  return substitute(p, {{VarId::z(), varX()}, {VarId::w(), varY()}});
}

}  // namespace cabform
