#include "cabform/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace cabform {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsedMs(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

Polynomial varX(int e = 1) { return Polynomial::variable(VarId::x(), e); }
Polynomial varY(int e = 1) { return Polynomial::variable(VarId::y(), e); }
Polynomial varZ(int e = 1) { return Polynomial::variable(VarId::z(), e); }
Polynomial varW(int e = 1) { return Polynomial::variable(VarId::w(), e); }

long long floorDiv(long long a, long long b) { return a / b; }
long long ceilDiv(long long a, long long b) { return (a + b - 1) / b; }

std::vector<int> rowColumns(const CurveSpec& spec, int j) {
  std::vector<int> cols;
  for (const auto& p : spec.support())
    if (p.j == j && !spec.coefficient(p.i, p.j).isZero()) cols.push_back(p.i);
  return cols;
}

bool rowIsZero(const CurveSpec& spec, int j) { return rowColumns(spec, j).empty(); }

bool matchesFamily(const CurveSpec& spec, CurveFamily family) {
  switch (family) {
    case CurveFamily::hyperelliptic:
      return spec.a() == 2 && rowIsZero(spec, 1);
    case CurveFamily::generalizedHyperelliptic:
      return spec.a() == 2;
    case CurveFamily::cyclic: {
      for (int j = 1; j < spec.a(); ++j)
        if (!rowIsZero(spec, j)) return false;
      return true;
    }
    case CurveFamily::trigonal:
      return spec.a() == 3 && rowIsZero(spec, 2);
  }
  return false;
}

/// modHigh/modLow pair of monomials shared by the family reference forms:
/// high * z^ceil(za/beta) x^floor(xb/beta) + low * z^floor(za/beta) x^ceil(xb/beta).
Polynomial modMonomialPair(long long za, long long xb, long long beta) {
  return Polynomial::constant(modHigh(za, beta)) *
             varZ(static_cast<int>(ceilDiv(za, beta))) *
             varX(static_cast<int>(floorDiv(xb, beta))) +
         Polynomial::constant(modLow(xb, beta)) *
             varZ(static_cast<int>(floorDiv(za, beta))) *
             varX(static_cast<int>(ceilDiv(xb, beta)));
}

// ---------------------------------------------------------------------------
// Family reference forms. These are transcriptions of the per-family closed
// formulas, independent of the general construction; the string constants
// name the normalizations applied to make the transcriptions self-consistent
// (ranges filtered by the region constraint, omitted factors restored).
// ---------------------------------------------------------------------------

Polynomial hyperellipticReferenceG(const CurveSpec& spec) {
  Polynomial g = 2 * varY() * varW();
  for (int r : rowColumns(spec, 0)) {
    const Polynomial c = spec.coefficient(r, 0);
    if (r % 2 == 0)
      g -= c * Polynomial::constant(2) * varX(r / 2) * varZ(r / 2);
    else
      g -= c * (varX((r + 1) / 2) * varZ((r - 1) / 2) +
                varX((r - 1) / 2) * varZ((r + 1) / 2));
  }
  return g;
}

Polynomial hyperellipticReferenceR(const CurveSpec& spec, int i) {
  Polynomial out;
  for (int r : rowColumns(spec, 0)) {
    if (r < 2 * i + 2) continue;
    out += spec.coefficient(r, 0) * Polynomial::constant(2 * i + 2 - r) *
           varZ(r - i - 2);
  }
  return out;
}

Polynomial generalizedHyperellipticReferenceG(const CurveSpec& spec) {
  const Polynomial f1 = rowPolyX(spec, 1);
  const Polynomial g1 = rowPolyZ(spec, 1);
  Polynomial g = 2 * varY() * varW() + f1 * varW() + g1 * varY() + f1 * g1;
  for (int r : rowColumns(spec, 0)) {
    const Polynomial c = spec.coefficient(r, 0);
    if (r % 2 == 0)
      g -= c * Polynomial::constant(2) * varZ(r / 2) * varX(r / 2);
    else
      g -= c * (varZ((r + 1) / 2) * varX((r - 1) / 2) +
                varZ((r - 1) / 2) * varX((r + 1) / 2));
  }
  return g;
}

Polynomial generalizedHyperellipticReferenceR(const CurveSpec& spec, int i) {
  Polynomial out;
  for (int r : rowColumns(spec, 1)) {
    if (r < i + 2) continue;
    for (int s : rowColumns(spec, 1))
      out += spec.coefficient(r, 1) * spec.coefficient(s, 1) *
             Polynomial::constant(r - i - 1) * varZ(r + s - i - 2);
    out += spec.coefficient(r, 1) * Polynomial::constant(r - i - 1) *
           varZ(r - i - 2) * varW();
  }
  out += hyperellipticReferenceR(spec, i);
  return out;
}

Polynomial cyclicReferenceG(const CurveSpec& spec) {
  const int a = spec.a();
  Polynomial g = Polynomial::constant(a) * varY(a - 1) * varW(a - 1);
  for (int r : rowColumns(spec, 0)) {
    Polynomial sum;
    for (int k = 1; k <= a - 1; ++k)
      sum += modMonomialPair(static_cast<long long>(a - k) * r,
                             static_cast<long long>(k) * r, a) *
             varW(k - 1) * varY(a - k - 1);
    g -= spec.coefficient(r, 0) * sum;
  }
  return g;
}

Polynomial cyclicReferenceR(const CurveSpec& spec, int i, int j) {
  const int a = spec.a();
  Polynomial out;
  for (int r : rowColumns(spec, 0)) {
    if (r < i + 2) continue;
    if (static_cast<long long>(a - 1 - j) * r < static_cast<long long>(i + 1) * a)
      continue;
    const long long factor = static_cast<long long>(a) * r - a - r -
                             static_cast<long long>(a) * i -
                             static_cast<long long>(r) * j;
    out -= spec.coefficient(r, 0) * Polynomial::constant(factor) *
           varZ(r - 2 - i) * varW(a - 2 - j);
  }
  return out;
}

Polynomial trigonalReferenceG(const CurveSpec& spec) {
  const Polynomial f1 = rowPolyX(spec, 1);
  const Polynomial g1 = rowPolyZ(spec, 1);
  Polynomial g = f1 * g1 + f1 * varW(2) + g1 * varY(2) +
                 Polynomial::constant(3) * varY(2) * varW(2);
  for (int r : rowColumns(spec, 0)) {
    const Polynomial c = spec.coefficient(r, 0);
    g -= c * modMonomialPair(2LL * r, r, 3) * varY();
    g -= c * modMonomialPair(r, 2LL * r, 3) * varW();
  }
  for (int r : rowColumns(spec, 1))
    g -= spec.coefficient(r, 1) * modMonomialPair(r, r, 2) * varW() * varY();
  return g;
}

Polynomial trigonalReferenceR(const CurveSpec& spec, int i, int j) {
  Polynomial out;
  if (j == 0) {
    for (int r : rowColumns(spec, 1)) {
      if (r < i + 2) continue;
      for (int s : rowColumns(spec, 1))
        out += spec.coefficient(r, 1) * spec.coefficient(s, 1) *
               Polynomial::constant(r - i - 1) * varZ(r + s - i - 2);
      out += spec.coefficient(r, 1) * Polynomial::constant(r - i - 1) *
             varZ(r - i - 2) * varW(2);
    }
    for (int r : rowColumns(spec, 0)) {
      if (2 * r < 3 * (i + 1)) continue;
      out += spec.coefficient(r, 0) * Polynomial::constant(3 * i + 3 - 2 * r) *
             varZ(r - i - 2) * varW();
    }
  } else if (j == 1) {
    for (int r : rowColumns(spec, 0)) {
      if (r < 3 * (i + 1)) continue;
      out += spec.coefficient(r, 0) * Polynomial::constant(3 * i + 3 - r) *
             varZ(r - i - 2);
    }
    for (int r : rowColumns(spec, 1)) {
      if (r < 2 * (i + 1)) continue;
      out += spec.coefficient(r, 1) * Polynomial::constant(2 * i + 2 - r) *
             varZ(r - i - 2) * varW();
    }
  } else {
    throw IndexOutOfRangeError("trigonal basis indices have j <= 1");
  }
  return out;
}

std::vector<std::string> familyCorrections(CurveFamily family) {
  switch (family) {
    case CurveFamily::hyperelliptic:
      return {"even-degree sum read with a single factor 2 per term",
              "basis range filtered by the region constraint: r >= 2i+2"};
    case CurveFamily::generalizedHyperelliptic:
      return {"factor w restored on the second basis family",
              "monomial z^(r-i-2) restored on the base-row basis family",
              "base-row basis range filtered by the region constraint: r >= 2i+2"};
    case CurveFamily::cyclic:
      return {"diagonal term a*y^(a-1)*w^(a-1) added to the reference two-form "
              "numerator",
              "basis range filtered by the region constraint: (a-1-j)r >= (i+1)a"};
    case CurveFamily::trigonal:
      return {"row-1 pair and w^2 families start at r >= i+2",
              "base-row wy family filtered by the region constraint: 2r >= 3(i+1)",
              "j=1 families filtered by the region constraints: r >= 3(i+1) and "
              "r >= 2(i+1)",
              "equal-residue block read with exponents from the expanded general "
              "lines"};
  }
  return {};
}

VerificationReport failWith(VerificationReport rep, Polynomial witness,
                            std::string note = {}) {
  rep.status = CheckStatus::fail;
  rep.witness = std::move(witness);
  if (!note.empty()) rep.notes.push_back(std::move(note));
  return rep;
}

}  // namespace

std::string statusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::notApplicable: return "notApplicable";
  }
  return "?";
}

std::string modeName(CheckMode mode) {
  return mode == CheckMode::exact ? "exact" : "moduloCurve";
}

std::string familyName(CurveFamily family) {
  switch (family) {
    case CurveFamily::hyperelliptic: return "hyperelliptic";
    case CurveFamily::generalizedHyperelliptic: return "generalized-hyperelliptic";
    case CurveFamily::cyclic: return "cyclic";
    case CurveFamily::trigonal: return "trigonal";
  }
  return "?";
}

std::vector<CurveFamily> matchingFamilies(const CurveSpec& spec) {
  std::vector<CurveFamily> out;
  for (CurveFamily family :
       {CurveFamily::hyperelliptic, CurveFamily::generalizedHyperelliptic,
        CurveFamily::cyclic, CurveFamily::trigonal})
    if (matchesFamily(spec, family)) out.push_back(family);
  return out;
}

VerificationReport checkSymmetry(const Polynomial& numerator) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "symmetry";
  const Polynomial residue = numerator - swapPairs(numerator);
  if (!residue.isZero()) rep = failWith(std::move(rep), residue);
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkSymmetry(const FundamentalForm& form) {
  return checkSymmetry(form.numerator);
}

VerificationReport checkNormalization(const CurveSpec& spec,
                                      const FundamentalForm& form) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "normalization";
  const Polynomial f_xy = spec.curveXY();
  const Polynomial f_y = partialDerivative(f_xy, VarId::y());
  const Polynomial delta = diagonalRestriction(form.numerator) - f_y * f_y;
  const Polynomial residue = reduceMonic(delta, VarId::y(), f_xy);
  if (!residue.isZero()) rep = failWith(std::move(rep), residue);
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkOracleIdentity(const CurveSpec& spec,
                                       const SecondKindBasis& basis,
                                       const FundamentalForm& form) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "oracle";
  const Polynomial f_zw = spec.curveZW();
  const Polynomial blocks = bilinearBlockSum(spec);

  Polynomial correction;
  const auto& idx = basis.indices().indices();
  for (std::size_t k = 0; k < idx.size(); ++k)
    correction += varX(idx[k].i) * varY(idx[k].j) * basis.numerators()[k];
  const Polynomial assembled =
      blocks + (varX() - varZ()) * (varX() - varZ()) * correction;

  const Polynomial delta = assembled - form.numerator;
  if (delta.isZero()) {
    rep.mode = CheckMode::exact;
  } else {
    const Polynomial reduced = reduceMonic(delta, VarId::w(), f_zw);
    if (reduced.isZero()) {
      rep.mode = CheckMode::moduloCurve;
    } else {
      rep = failWith(std::move(rep), reduced,
                     "assembled numerator does not match the two-form numerator");
    }
  }

  const Polynomial omega_residue =
      reduceMonic(blocks - omegaParts(spec).numerator, VarId::w(), f_zw);
  if (omega_residue.isZero()) {
    rep.notes.push_back(
        "block sum matches the omega-derivative numerator modulo the curve");
  } else {
    if (rep.status != CheckStatus::fail) {
      rep = failWith(std::move(rep), omega_residue);
    }
    rep.notes.push_back(
        "block sum does not match the omega-derivative numerator modulo the curve");
  }
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkBlockPairs(const CurveSpec& spec) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "block-pairs";
  for (int m = 0; m <= spec.a() && rep.status == CheckStatus::pass; ++m) {
    for (int n = m; n <= spec.a(); ++n) {
      const Polynomial residue = bilinearBlock(spec, m, n) +
                                 bilinearBlock(spec, n, m) -
                                 symmetrizedBlockRhs(spec, m, n);
      if (!residue.isZero()) {
        rep = failWith(std::move(rep), residue,
                       "pair (" + std::to_string(m) + "," + std::to_string(n) +
                           ") violates the closed form");
        break;
      }
    }
  }
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

std::vector<TelescopeSample> defaultTelescopeSample(std::optional<unsigned> seed) {
  std::vector<TelescopeSample> out;
  static constexpr int kTriples[][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                        {1, 2, 3}, {0, 2, 4}, {1, 2, 4},
                                        {2, 3, 5}, {0, 2, 5}};
  for (const auto& t : kTriples)
    for (int r = 0; r <= 4; ++r)
      for (int s = 0; s <= 4; ++s) out.push_back({t[0], t[2], t[1], r, s});
  if (seed) {
    std::mt19937 rng(*seed);
    std::uniform_int_distribution<int> uv(0, 6), ex(0, 8);
    for (int n = 0; n < 40; ++n) {
      int u = uv(rng);
      int v = u + 2 + uv(rng) % 4;
      int k = u + 1 + uv(rng) % (v - u - 1);
      out.push_back({u, v, k, ex(rng), ex(rng)});
    }
  }
  return out;
}

VerificationReport checkTelescoping(const std::vector<TelescopeSample>& sample) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "telescoping";
  for (const auto& t : sample) {
    const TelescopePieces pieces = telescopePieces(t.u, t.v, t.k, t.r, t.s);
    const Polynomial residue =
        (pieces.lhs_k - pieces.rhs_k) + (pieces.lhs_conjugate - pieces.rhs_conjugate);
    if (pieces.lhs_k != pieces.rhs_k || pieces.lhs_conjugate != pieces.rhs_conjugate) {
      rep = failWith(std::move(rep), residue,
                     "tuple (u,v,k,r,s) = (" + std::to_string(t.u) + "," +
                         std::to_string(t.v) + "," + std::to_string(t.k) + "," +
                         std::to_string(t.r) + "," + std::to_string(t.s) +
                         ") violates the collapse identity");
      break;
    }
  }
  if (rep.status == CheckStatus::pass)
    rep.notes.push_back("tuples checked: " + std::to_string(sample.size()));
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkSpecialForms(const CurveSpec& spec, CurveFamily family,
                                     const ConstructionOptions& opts) {
  const auto start = Clock::now();
  if (!matchesFamily(spec, family))
    throw FamilyMismatchError("curve does not match the " + familyName(family) +
                              " shape");
  VerificationReport rep;
  rep.check = "special-forms:" + familyName(family);
  rep.notes = familyCorrections(family);

  const FundamentalForm built = fundamentalForm(spec, opts);
  const SecondKindBasis basis = secondKindBasis(spec, opts);

  Polynomial ref_g;
  switch (family) {
    case CurveFamily::hyperelliptic: ref_g = hyperellipticReferenceG(spec); break;
    case CurveFamily::generalizedHyperelliptic:
      ref_g = generalizedHyperellipticReferenceG(spec);
      break;
    case CurveFamily::cyclic: ref_g = cyclicReferenceG(spec); break;
    case CurveFamily::trigonal: ref_g = trigonalReferenceG(spec); break;
  }
  if (Polynomial residue = built.numerator - ref_g; !residue.isZero()) {
    rep = failWith(std::move(rep), std::move(residue),
                   "two-form numerator differs from the family reference form");
    rep.elapsed_ms = elapsedMs(start);
    return rep;
  }

  for (const auto& p : spec.basis().indices()) {
    Polynomial ref_r;
    switch (family) {
      case CurveFamily::hyperelliptic:
        ref_r = hyperellipticReferenceR(spec, p.i);
        break;
      case CurveFamily::generalizedHyperelliptic:
        ref_r = generalizedHyperellipticReferenceR(spec, p.i);
        break;
      case CurveFamily::cyclic: ref_r = cyclicReferenceR(spec, p.i, p.j); break;
      case CurveFamily::trigonal: ref_r = trigonalReferenceR(spec, p.i, p.j); break;
    }
    if (Polynomial residue = basis.numerator(p.i, p.j) - ref_r; !residue.isZero()) {
      rep = failWith(std::move(rep), std::move(residue),
                     "basis numerator at (" + std::to_string(p.i) + "," +
                         std::to_string(p.j) + ") differs from the family reference form");
      rep.elapsed_ms = elapsedMs(start);
      return rep;
    }
  }

  if (family == CurveFamily::hyperelliptic) {
    // Classical route: explicit basis and the reduced numerator of the
    // derivative of (y+w)/(2y(x-z)) must reproduce a symmetric, normalized
    // two-form on their own.
    const Polynomial f_zw = spec.curveZW();
    const Polynomial raw =
        -partialDerivative(f_zw, VarId::z()) * (varX() - varZ()) +
        (varY() + varW()) * partialDerivative(f_zw, VarId::w());
    Polynomial correction;
    for (const auto& p : spec.basis().indices())
      correction += varX(p.i) * hyperellipticReferenceR(spec, p.i);
    const Polynomial classical = reduceMonic(
        raw + (varX() - varZ()) * (varX() - varZ()) * correction, VarId::w(), f_zw);
    const VerificationReport sym = checkSymmetry(classical);
    if (sym.status != CheckStatus::pass) {
      rep = failWith(std::move(rep), *sym.witness,
                     "classical route fails the symmetry check");
      rep.elapsed_ms = elapsedMs(start);
      return rep;
    }
    const VerificationReport norm =
        checkNormalization(spec, FundamentalForm{classical});
    if (norm.status != CheckStatus::pass) {
      rep = failWith(std::move(rep), *norm.witness,
                     "classical route fails the normalization check");
      rep.elapsed_ms = elapsedMs(start);
      return rep;
    }
    rep.notes.push_back("classical route passes symmetry and normalization");
  }

  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkBasisOrders(const CurveSpec& spec) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "basis-orders";
  const auto& basis = spec.basis();
  std::set<long long> orders;
  for (const auto& p : basis.indices()) {
    const long long order = basis.orderOf(p.i, p.j);
    if (order < 0 || !orders.insert(order).second) {
      rep = failWith(std::move(rep),
                     Polynomial::variable(VarId::x(), p.i) *
                         Polynomial::variable(VarId::y(), p.j),
                     order < 0 ? "negative vanishing order" : "repeated vanishing order");
      break;
    }
  }
  if (rep.status == CheckStatus::pass &&
      basis.size() != static_cast<std::size_t>(spec.genus())) {
    rep = failWith(std::move(rep), Polynomial::one(),
                   "basis cardinality does not equal the genus");
  }
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

VerificationReport checkHomogeneity(const CurveSpec& spec) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "homogeneity";
  switch (homogeneity(spec)) {
    case HomogeneityStatus::homogeneous:
      break;
    case HomogeneityStatus::notApplicable:
      rep.status = CheckStatus::notApplicable;
      rep.notes.push_back("curve has no symbolic coefficients");
      break;
    case HomogeneityStatus::inhomogeneous: {
      Polynomial witness;
      const Polynomial f = spec.curveXY();
      for (const auto& [m, c] : f.terms()) {
        const Polynomial t = Polynomial::term(c, m);
        if (!isWeightHomogeneous(t, spec.a(), spec.b())) {
          witness = t;
          break;
        }
      }
      rep = failWith(std::move(rep), std::move(witness), "unbalanced term");
      break;
    }
  }
  rep.elapsed_ms = elapsedMs(start);
  return rep;
}

std::vector<std::string> knownCheckNames() {
  return {"homogeneity", "basis-orders", "symmetry",    "normalization",
          "oracle",      "block-pairs",  "telescoping", "special-forms"};
}

std::optional<std::string> canonicalCheckName(const std::string& token) {
  if (token == "prop2") return "block-pairs";
  if (token == "tdelta") return "telescoping";
  for (const auto& name : knownCheckNames())
    if (token == name) return name;
  return std::nullopt;
}

namespace {

bool isSelected(const std::vector<std::string>& selected, const std::string& name) {
  if (selected.empty()) return true;
  for (const auto& s : selected) {
    if (s == name) return true;
    if (s == "special-forms" && name.rfind("special-forms:", 0) == 0) return true;
  }
  return false;
}

template <typename Fn>
void runGuarded(std::vector<VerificationReport>& out,
                const std::vector<std::string>& selected, const std::string& name,
                Fn&& fn) {
  if (!isSelected(selected, name)) return;
  const auto start = Clock::now();
  try {
    out.push_back(fn());
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.check = name;
    rep.status = CheckStatus::fail;
    rep.notes.push_back(std::string("error: ") + e.what());
    rep.elapsed_ms = elapsedMs(start);
    out.push_back(std::move(rep));
  }
}

}  // namespace

std::vector<VerificationReport> runAll(const CurveSpec& spec,
                                       const RunOptions& options) {
  std::vector<VerificationReport> out;
  const auto& sel = options.selected;

  runGuarded(out, sel, "homogeneity", [&] { return checkHomogeneity(spec); });
  runGuarded(out, sel, "basis-orders", [&] { return checkBasisOrders(spec); });
  runGuarded(out, sel, "symmetry", [&] {
    const auto start = Clock::now();
    VerificationReport rep =
        checkSymmetry(assembledNumerator(spec, secondKindBasis(spec, options.construction)));
    rep.elapsed_ms = elapsedMs(start);
    return rep;
  });
  runGuarded(out, sel, "normalization", [&] {
    return checkNormalization(spec, fundamentalForm(spec, options.construction));
  });
  runGuarded(out, sel, "oracle", [&] {
    return checkOracleIdentity(spec, secondKindBasis(spec, options.construction),
                               fundamentalForm(spec, options.construction));
  });
  runGuarded(out, sel, "block-pairs", [&] { return checkBlockPairs(spec); });
  runGuarded(out, sel, "telescoping",
             [&] { return checkTelescoping(defaultTelescopeSample(options.seed)); });

  const std::vector<CurveFamily> families = matchingFamilies(spec);
  if (families.empty()) {
    if (isSelected(sel, "special-forms")) {
      VerificationReport rep;
      rep.check = "special-forms";
      rep.status = CheckStatus::notApplicable;
      rep.notes.push_back("curve matches no reference family");
      out.push_back(std::move(rep));
    }
  } else {
    for (CurveFamily family : families) {
      runGuarded(out, sel, "special-forms:" + familyName(family), [&] {
        return checkSpecialForms(spec, family, options.construction);
      });
    }
  }
  return out;
}

bool allPassed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.status != CheckStatus::fail;
  });
}

}  // namespace cabform
