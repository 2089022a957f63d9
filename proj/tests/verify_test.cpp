#include <doctest.h>

#include <random>

#include "cabform/io.hpp"
#include "cabform/verify.hpp"

using namespace cabform;

namespace {

Polynomial X(int e = 1) { return Polynomial::variable(VarId::x(), e); }
Polynomial Y(int e = 1) { return Polynomial::variable(VarId::y(), e); }
Polynomial Z(int e = 1) { return Polynomial::variable(VarId::z(), e); }
Polynomial W(int e = 1) { return Polynomial::variable(VarId::w(), e); }
Polynomial atom(int i, int j) { return Polynomial::variable(VarId::coeff(i, j)); }

CurveSpec numericElliptic() {  // y^2 = x^3 + 1
  return CurveSpec(2, 3,
                   {{0, 2, Rational(1)}, {3, 0, Rational(-1)}, {0, 0, Rational(-1)}});
}

CurveSpec randomNumericCurve(int a, int b, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), pos(1, 9);
  std::vector<CurveSpec::Entry> entries;
  for (auto p : supportLattice(a, b)) {
    if (p.i == 0 && p.j == a) {
      entries.push_back({p.i, p.j, Rational(1)});
      continue;
    }
    Rational v(num(rng), den(rng));
    v.canonicalize();
    if (p.i == b && p.j == 0 && v == 0) v = pos(rng);
    entries.push_back({p.i, p.j, v});
  }
  return CurveSpec(a, b, std::move(entries));
}

/// The classical reduced numerator for an a=2 curve with zero middle row,
/// written without the second-kind correction.
Polynomial uncorrectedEllipticNumerator(const CurveSpec& spec) {
  Polynomial display = 2 * Y() * W() - 2 * spec.coefficient(0, 0);
  for (int k = 1; k <= spec.b(); ++k) {
    display -= Polynomial::constant(k) * spec.coefficient(k, 0) * X() * Z(k - 1);
    display += Polynomial::constant(k - 2) * spec.coefficient(k, 0) * Z(k);
  }
  return display;
}

}  // namespace

TEST_CASE("symmetry check") {
  const CurveSpec ell = hyperellipticCurve(1);
  CHECK(checkSymmetry(fundamentalForm(ell)).status == CheckStatus::pass);
  CHECK(checkSymmetry(Polynomial()).status == CheckStatus::pass);

  const VerificationReport rep = checkSymmetry(uncorrectedEllipticNumerator(ell));
  CHECK(rep.status == CheckStatus::fail);
  REQUIRE(rep.witness.has_value());
  const Polynomial cube = (X() - Z()) * (X() - Z()) * (X() - Z());
  CHECK(*rep.witness == -atom(3, 0) * cube);
  CHECK(rep.witness->leadingTerm().first ==
        Monomial::variable(VarId::x(), 3).times(Monomial::variable(VarId::coeff(3, 0))));
}

TEST_CASE("normalization check") {
  const CurveSpec numeric = numericElliptic();
  const FundamentalForm form = fundamentalForm(numeric);
  CHECK(checkNormalization(numeric, form).status == CheckStatus::pass);

  // frozen intermediate values: both sides reduce to 4x^3 + 4
  const Polynomial reduced_diag = reduceMonic(diagonalRestriction(form.numerator),
                                              VarId::y(), numeric.curveXY());
  CHECK(reduced_diag == 4 * X(3) + Polynomial::constant(4));
  const Polynomial f_y = partialDerivative(numeric.curveXY(), VarId::y());
  CHECK(reduceMonic(f_y * f_y, VarId::y(), numeric.curveXY()) == reduced_diag);

  const CurveSpec sym = CurveSpec::symbolic(2, 3);
  CHECK(checkNormalization(sym, fundamentalForm(sym)).status == CheckStatus::pass);

  // a doubled numerator has the wrong diagonal value
  FundamentalForm wrong = form;
  wrong.numerator = 2 * wrong.numerator;
  CHECK(checkNormalization(numeric, wrong).status == CheckStatus::fail);
}

TEST_CASE("oracle identity check") {
  const CurveSpec ell = hyperellipticCurve(1);
  {
    const auto rep =
        checkOracleIdentity(ell, secondKindBasis(ell), fundamentalForm(ell));
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.mode == CheckMode::exact);
  }
  const CurveSpec cyc = cyclicCurve(3, 4);
  {
    const auto rep =
        checkOracleIdentity(cyc, secondKindBasis(cyc), fundamentalForm(cyc));
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.mode == CheckMode::exact);
  }
  {
    const SecondKindBasis perturbed = secondKindBasis(cyc).withNumerator(
        0, 0, secondKindBasis(cyc).numerator(0, 0) + Polynomial::one());
    const auto rep = checkOracleIdentity(cyc, perturbed, fundamentalForm(cyc));
    CHECK(rep.status == CheckStatus::fail);
    REQUIRE(rep.witness.has_value());
    const Polynomial square = (X() - Z()) * (X() - Z());
    CHECK_NOTHROW(exactQuotient(*rep.witness, square));
  }
}

TEST_CASE("block pair identity check") {
  CHECK(checkBlockPairs(CurveSpec::symbolic(2, 3)).status == CheckStatus::pass);
  CHECK(checkBlockPairs(CurveSpec::symbolic(3, 4)).status == CheckStatus::pass);
  CHECK(checkBlockPairs(randomNumericCurve(4, 5, 17)).status == CheckStatus::pass);
}

TEST_CASE("telescoping check") {
  const auto sample = defaultTelescopeSample();
  CHECK(sample.size() >= 100);
  CHECK(checkTelescoping(sample).status == CheckStatus::pass);
  CHECK(checkTelescoping(defaultTelescopeSample(42)).status == CheckStatus::pass);
}

TEST_CASE("special form references") {
  for (int g = 1; g <= 4; ++g) {
    const auto rep =
        checkSpecialForms(hyperellipticCurve(g), CurveFamily::hyperelliptic);
    CHECK(rep.status == CheckStatus::pass);
    CHECK(!rep.notes.empty());
  }
  for (auto [a, b] : {std::pair{3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
    const auto rep = checkSpecialForms(cyclicCurve(a, b), CurveFamily::cyclic);
    CHECK(rep.status == CheckStatus::pass);
  }
  for (int b : {4, 5}) {
    const auto rep = checkSpecialForms(trigonalCurve(b), CurveFamily::trigonal);
    CHECK(rep.status == CheckStatus::pass);
  }
  for (int b : {3, 5}) {
    const auto rep = checkSpecialForms(generalizedHyperellipticCurve(b),
                                       CurveFamily::generalizedHyperelliptic);
    CHECK(rep.status == CheckStatus::pass);
  }
  CHECK_THROWS_AS(
      checkSpecialForms(CurveSpec::symbolic(3, 4), CurveFamily::cyclic),
      FamilyMismatchError);
  CHECK_THROWS_AS(
      checkSpecialForms(trigonalCurve(4), CurveFamily::hyperelliptic),
      FamilyMismatchError);
}

TEST_CASE("family detection") {
  const auto fams = matchingFamilies(hyperellipticCurve(2));
  CHECK(std::find(fams.begin(), fams.end(), CurveFamily::hyperelliptic) != fams.end());
  CHECK(std::find(fams.begin(), fams.end(), CurveFamily::generalizedHyperelliptic) !=
        fams.end());
  CHECK(std::find(fams.begin(), fams.end(), CurveFamily::cyclic) != fams.end());
  CHECK(matchingFamilies(CurveSpec::symbolic(3, 4)).empty());
  CHECK(matchingFamilies(CurveSpec::symbolic(2, 5)) ==
        std::vector<CurveFamily>{CurveFamily::generalizedHyperelliptic});
}

TEST_CASE("basis order and homogeneity checks") {
  CHECK(checkBasisOrders(CurveSpec::symbolic(5, 6)).status == CheckStatus::pass);
  CHECK(checkHomogeneity(CurveSpec::symbolic(3, 4)).status == CheckStatus::pass);
  CHECK(checkHomogeneity(numericElliptic()).status == CheckStatus::notApplicable);
}

TEST_CASE("runAll on a symbolic curve passes every check") {
  const auto reports = runAll(CurveSpec::symbolic(2, 3));
  CHECK(allPassed(reports));
  for (const auto& rep : reports)
    if (rep.check == "oracle") CHECK(rep.mode == CheckMode::exact);
}

TEST_CASE("runAll under the printed region convention fails") {
  RunOptions options;
  options.construction.region = RegionConvention::asPrinted;
  const auto reports = runAll(hyperellipticCurve(1), options);
  CHECK(!allPassed(reports));
  for (const auto& rep : reports) {
    if (rep.check != "symmetry") continue;
    CHECK(rep.status == CheckStatus::fail);
    REQUIRE(rep.witness.has_value());
    const Polynomial cube = (X() - Z()) * (X() - Z()) * (X() - Z());
    CHECK_NOTHROW(exactQuotient(*rep.witness, cube));
  }
}

TEST_CASE("runAll under the literal remainder convention fails") {
  // the divisible-case remainder must equal the modulus or the two-form
  // numerator loses its constant block
  RunOptions options;
  options.construction.mod_bar = ModBarConvention::literal;
  const auto reports = runAll(hyperellipticCurve(1), options);
  CHECK(!allPassed(reports));
  bool oracle_failed = false, normalization_failed = false;
  for (const auto& rep : reports) {
    if (rep.check == "oracle") oracle_failed = rep.status == CheckStatus::fail;
    if (rep.check == "normalization")
      normalization_failed = rep.status == CheckStatus::fail;
  }
  CHECK(oracle_failed);
  CHECK(normalization_failed);
}

TEST_CASE("check selection and aliases") {
  CHECK(canonicalCheckName("prop2") == "block-pairs");
  CHECK(canonicalCheckName("tdelta") == "telescoping");
  CHECK(canonicalCheckName("symmetry") == "symmetry");
  CHECK(!canonicalCheckName("bogus").has_value());

  RunOptions options;
  options.selected = {"block-pairs"};
  const auto reports = runAll(CurveSpec::symbolic(2, 3), options);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].check == "block-pairs");
  CHECK(reports[0].status == CheckStatus::pass);
}

TEST_CASE("mutation sensitivity") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> exp(0, 2), coeff(1, 5), pick(0, 1);
  const std::vector<CurveSpec> corpus = {numericElliptic(), cyclicCurve(3, 4),
                                         randomNumericCurve(3, 5, 4),
                                         randomNumericCurve(2, 7, 9)};
  int caught = 0;
  const int rounds = 60;
  for (int round = 0; round < rounds; ++round) {
    const CurveSpec& spec = corpus[round % corpus.size()];
    const SecondKindBasis basis = secondKindBasis(spec);
    const FundamentalForm form = fundamentalForm(spec);

    SecondKindBasis mutated_basis = basis;
    FundamentalForm mutated_form = form;
    if (pick(rng) == 0) {
      const auto& idx = basis.indices().indices();
      const auto& target = idx[rng() % idx.size()];
      const Polynomial bump = Polynomial::constant(coeff(rng)) * Z(exp(rng)) *
                              W(std::min(exp(rng), spec.a() - 2 >= 0 ? spec.a() - 2 : 0));
      mutated_basis = basis.withNumerator(target.i, target.j,
                                          basis.numerator(target.i, target.j) + bump);
    } else {
      const Polynomial bump = Polynomial::constant(coeff(rng)) * X(exp(rng)) *
                              Y(exp(rng)) * Z(exp(rng)) * W(exp(rng));
      mutated_form.numerator += bump;
    }

    const bool detected =
        checkSymmetry(assembledNumerator(spec, mutated_basis)).status ==
            CheckStatus::fail ||
        checkOracleIdentity(spec, mutated_basis, mutated_form).status ==
            CheckStatus::fail ||
        checkNormalization(spec, mutated_form).status == CheckStatus::fail;
    if (detected) ++caught;
  }
  CHECK(caught == rounds);
}

TEST_CASE("reports are deterministic") {
  const CurveSpec spec = cyclicCurve(3, 4);
  const auto first = runAll(spec);
  const auto second = runAll(spec);
  REQUIRE(first.size() == second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].check == second[k].check);
    CHECK(first[k].status == second[k].status);
    CHECK(first[k].mode == second[k].mode);
    CHECK(first[k].witness == second[k].witness);
    CHECK(first[k].notes == second[k].notes);
  }
}

TEST_CASE("report JSON shape") {
  VerificationReport rep;
  rep.check = "symmetry";
  rep.status = CheckStatus::fail;
  rep.mode = CheckMode::exact;
  rep.witness = X() - Z();
  rep.elapsed_ms = 3;
  const Json j = reportToJson(rep);
  CHECK(j["check"] == "symmetry");
  CHECK(j["status"] == "fail");
  CHECK(j["mode"] == "exact");
  CHECK(polynomialFromJson(j["witness"]) == X() - Z());
  CHECK(j["elapsedMs"] == 3);

  VerificationReport ok;
  ok.check = "oracle";
  ok.mode = CheckMode::moduloCurve;
  const Json jo = reportToJson(ok);
  CHECK(jo["status"] == "pass");
  CHECK(jo["witness"].is_null());
  CHECK(jo["mode"] == "moduloCurve");
}
