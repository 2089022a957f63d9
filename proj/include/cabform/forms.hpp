#pragma once

#include <string>
#include <vector>

#include "cabform/curve.hpp"
#include "cabform/polynomial.hpp"

namespace cabform {

/// Transcription switches for the two places where the construction admits
/// inequivalent readings. The defaults are the only combination under which
/// every identity in the verification suite holds.
enum class RegionConvention { proofConsistent, asPrinted };
enum class ModBarConvention { betaValued, literal };

struct ConstructionOptions {
  RegionConvention region = RegionConvention::proofConsistent;
  ModBarConvention mod_bar = ModBarConvention::betaValued;
};

/// Remainder of alpha modulo beta normalized to [0, beta). Requires
/// alpha >= 0, beta >= 1.
long long modLow(long long alpha, long long beta);

/// Remainder normalized to (0, beta]: equals modLow except on exact
/// division, where the betaValued convention returns beta and the literal
/// convention returns alpha itself.
long long modHigh(long long alpha, long long beta,
                  ModBarConvention convention = ModBarConvention::betaValued);

/// Numerators r_{i,j}(z, w) of the second-kind differentials
/// r_{i,j} / F_w dz, one per basis index, ordered like the basis lattice.
class SecondKindBasis {
 public:
  SecondKindBasis(BasisIndexSet indices, std::vector<Polynomial> numerators);

  const BasisIndexSet& indices() const { return indices_; }
  const Polynomial& numerator(int i, int j) const;
  const std::vector<Polynomial>& numerators() const { return numerators_; }
  int maxWDegree() const { return max_w_degree_; }

  SecondKindBasis withNumerator(int i, int j, Polynomial replacement) const;

 private:
  BasisIndexSet indices_;
  std::vector<Polynomial> numerators_;
  int max_w_degree_ = -1;
};

/// The two-form numerator G(x, y, z, w); the full form is
/// G / ((x-z)^2 F_y(x,y) F_w(z,w)).
struct FundamentalForm {
  Polynomial numerator;
  std::string denominator_descriptor = "(x-z)^2 * F_y(x,y) * F_w(z,w)";
};

/// Closed-form numerator of the second-kind differential at basis index
/// (i,j): three summation families over pairs of support coefficients, the
/// third filtered by the region convention.
Polynomial secondKindNumerator(const CurveSpec& spec, int i, int j,
                               const ConstructionOptions& opts = {});

SecondKindBasis secondKindBasis(const CurveSpec& spec,
                                const ConstructionOptions& opts = {});

/// Assembles G from its per-row-pair blocks.
FundamentalForm fundamentalForm(const CurveSpec& spec,
                                const ConstructionOptions& opts = {});

/// Bilinear block I(i,j) in x, z, y, w; the double sum over all (i,j)
/// reproduces the omega-derivative numerator modulo the curve.
Polynomial bilinearBlock(const CurveSpec& spec, int i, int j);

/// Sum of bilinearBlock(u, v) over 0 <= u, v <= a.
Polynomial bilinearBlockSum(const CurveSpec& spec);

/// H = (F(z,y) - F(z,w)) / (y - w) and the numerator
/// (H_z F_w - H_w F_z)(x - z) + H F_w of the derivative of
/// Omega = H / ((x-z) F_y).
struct OmegaParts {
  Polynomial h;
  Polynomial h_z;
  Polynomial h_w;
  Polynomial numerator;
};

OmegaParts omegaParts(const CurveSpec& spec);

/// Closed form for bilinearBlock(m,n) + bilinearBlock(n,m), m <= n: four
/// leading terms carrying the factor m minus a telescoping sum over
/// k = m+1 .. n-1.
Polynomial symmetrizedBlockRhs(const CurveSpec& spec, int m, int n);

/// The telescoping rewrite underlying the construction, for one index tuple
/// u < k < v and exponents r, s >= 0: lhs pieces t + (x-z)^2 * Delta and the
/// two-term right-hand sides they must equal, for k and its mirror u+v-k.
struct TelescopePieces {
  long long p = 0;
  long long q = 0;
  Polynomial lhs_k;
  Polynomial lhs_conjugate;
  Polynomial rhs_k;
  Polynomial rhs_conjugate;
};

TelescopePieces telescopePieces(int u, int v, int k, int r, int s);

/// The numerator of the symmetric two-form as assembled from its parts:
/// bilinearBlockSum + (x-z)^2 * sum over J of x^i y^j r_{i,j}(z,w).
Polynomial assembledNumerator(const CurveSpec& spec, const SecondKindBasis& basis);

/// Simultaneous swap x <-> z, y <-> w.
Polynomial swapPairs(const Polynomial& p);

/// Substitution z -> x, w -> y.
Polynomial diagonalRestriction(const Polynomial& p);

}  // namespace cabform
