#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cabform/io.hpp"

namespace {

using namespace cabform;

struct CommonArgs {
  std::string curve_path;
  std::string format = "text";
  std::string region = "proof";
  std::string modbar = "beta";
};

void addCommon(CLI::App* cmd, CommonArgs& args, bool with_conventions) {
  cmd->add_option("--curve", args.curve_path, "curve JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_conventions) {
    cmd->add_option("--region", args.region, "summation region convention")
        ->check(CLI::IsMember({"proof", "printed"}));
    cmd->add_option("--modbar", args.modbar, "divisible-case remainder convention")
        ->check(CLI::IsMember({"beta", "literal"}));
  }
}

ConstructionOptions constructionOptions(const CommonArgs& args) {
  ConstructionOptions opts;
  opts.region = args.region == "printed" ? RegionConvention::asPrinted
                                         : RegionConvention::proofConsistent;
  opts.mod_bar = args.modbar == "literal" ? ModBarConvention::literal
                                          : ModBarConvention::betaValued;
  return opts;
}

std::string keyOf(const char* prefix, LatticePoint p) {
  return std::string(prefix) + ":" + std::to_string(p.i) + "," + std::to_string(p.j);
}

int cmdInfo(const CommonArgs& args) {
  const CurveSpec spec = curveFromFile(args.curve_path);
  const auto& basis = spec.basis();
  if (args.format == "json") {
    Json out{{"a", spec.a()}, {"b", spec.b()}, {"genus", spec.genus()}};
    Json j_basis = Json::array();
    for (const auto& p : basis.indices())
      j_basis.push_back(Json{{"i", p.i},
                             {"j", p.j},
                             {"order", basis.orderOf(p.i, p.j)},
                             {"uWeight", uWeight(spec.a(), spec.b(), p.i, p.j)}});
    out["basis"] = std::move(j_basis);
    Json coeffs = Json::array();
    for (const auto& p : spec.support()) {
      const Polynomial c = spec.coefficient(p.i, p.j);
      std::string value = "0";
      if (spec.isSymbolicAt(p.i, p.j))
        value = "symbolic";
      else if (!c.isZero())
        value = toString(c.leadingTerm().second);
      coeffs.push_back(Json{{"i", p.i},
                            {"j", p.j},
                            {"weight", cWeight(spec.a(), spec.b(), p.i, p.j)},
                            {"value", value}});
    }
    out["coefficients"] = std::move(coeffs);
    switch (homogeneity(spec)) {
      case HomogeneityStatus::homogeneous: out["homogeneity"] = "homogeneous"; break;
      case HomogeneityStatus::inhomogeneous:
        out["homogeneity"] = "inhomogeneous";
        break;
      case HomogeneityStatus::notApplicable:
        out["homogeneity"] = "not applicable";
        break;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "a = " << spec.a() << "\n";
  std::cout << "b = " << spec.b() << "\n";
  std::cout << "genus = " << spec.genus() << "\n";
  std::cout << "basis:\n";
  for (const auto& p : basis.indices())
    std::cout << "  " << keyOf("du", p) << "  order " << basis.orderOf(p.i, p.j)
              << "  u-weight " << uWeight(spec.a(), spec.b(), p.i, p.j) << "\n";
  std::cout << "coefficient weights:\n";
  for (const auto& p : spec.support()) {
    std::string value = "0";
    if (spec.isSymbolicAt(p.i, p.j))
      value = "symbolic";
    else if (!spec.coefficient(p.i, p.j).isZero())
      value = toString(spec.coefficient(p.i, p.j).leadingTerm().second);
    std::cout << "  " << keyOf("c", p) << "  weight "
              << cWeight(spec.a(), spec.b(), p.i, p.j) << "  value " << value << "\n";
  }
  switch (homogeneity(spec)) {
    case HomogeneityStatus::homogeneous:
      std::cout << "homogeneity: homogeneous\n";
      break;
    case HomogeneityStatus::inhomogeneous:
      std::cout << "homogeneity: inhomogeneous\n";
      break;
    case HomogeneityStatus::notApplicable:
      std::cout << "homogeneity: not applicable\n";
      break;
  }
  return 0;
}

int cmdBasis(const CommonArgs& args) {
  const CurveSpec spec = curveFromFile(args.curve_path);
  const auto& basis = spec.basis();
  if (args.format == "json") {
    Json entries = Json::array();
    for (const auto& p : basis.indices()) {
      const Polynomial numerator = Polynomial::variable(VarId::x(), p.i) *
                                   Polynomial::variable(VarId::y(), p.j);
      entries.push_back(Json{{"key", keyOf("du", p)},
                             {"i", p.i},
                             {"j", p.j},
                             {"numerator", polynomialToJson(numerator)},
                             {"order", basis.orderOf(p.i, p.j)}});
    }
    std::cout << Json{{"denominator", "F_y(x,y)"}, {"entries", std::move(entries)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "denominator: F_y(x,y)\n";
  for (const auto& p : basis.indices()) {
    const Polynomial numerator = Polynomial::variable(VarId::x(), p.i) *
                                 Polynomial::variable(VarId::y(), p.j);
    std::cout << keyOf("du", p) << " = " << toText(numerator) << "  (order "
              << basis.orderOf(p.i, p.j) << ")\n";
  }
  return 0;
}

int cmdSecondKind(const CommonArgs& args) {
  const CurveSpec spec = curveFromFile(args.curve_path);
  const SecondKindBasis basis = secondKindBasis(spec, constructionOptions(args));
  if (args.format == "json") {
    Json entries = Json::array();
    const auto& idx = basis.indices().indices();
    for (std::size_t k = 0; k < idx.size(); ++k)
      entries.push_back(Json{{"key", keyOf("r", idx[k])},
                             {"i", idx[k].i},
                             {"j", idx[k].j},
                             {"numerator", polynomialToJson(basis.numerators()[k])}});
    std::cout << Json{{"denominator", "F_w(z,w)"}, {"entries", std::move(entries)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "denominator: F_w(z,w)\n";
  const auto& idx = basis.indices().indices();
  for (std::size_t k = 0; k < idx.size(); ++k)
    std::cout << keyOf("r", idx[k]) << " = " << toText(basis.numerators()[k]) << "\n";
  return 0;
}

int cmdTwoForm(const CommonArgs& args) {
  const CurveSpec spec = curveFromFile(args.curve_path);
  const FundamentalForm form = fundamentalForm(spec, constructionOptions(args));
  if (args.format == "json") {
    std::cout << Json{{"denominator", form.denominator_descriptor},
                      {"numerator", polynomialToJson(form.numerator)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "denominator: " << form.denominator_descriptor << "\n";
  std::cout << "G = " << toText(form.numerator) << "\n";
  return 0;
}

int cmdVerify(const CommonArgs& args, const std::vector<std::string>& checks,
              std::optional<unsigned> seed) {
  const CurveSpec spec = curveFromFile(args.curve_path);
  RunOptions options;
  options.construction = constructionOptions(args);
  options.seed = seed;
  for (const auto& token : checks) {
    const auto name = canonicalCheckName(token);
    if (!name) throw ParseError("unknown check '" + token + "'");
    options.selected.push_back(*name);
  }
  const std::vector<VerificationReport> reports = runAll(spec, options);
  if (args.format == "json") {
    for (const auto& rep : reports) std::cout << reportToJson(rep).dump() << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& rep : reports) {
      std::ostringstream line;
      line << rep.check << ": " << statusName(rep.status);
      if (rep.mode) line << " (" << modeName(*rep.mode) << ")";
      line << " [" << rep.elapsed_ms << " ms]";
      std::cout << line.str() << "\n";
      if (rep.status == CheckStatus::fail && rep.witness)
        std::cout << "  witness: " << toText(*rep.witness) << "\n";
      for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
      if (rep.status == CheckStatus::fail) ++failed;
    }
    std::cout << (failed == 0 ? "all checks passed"
                              : std::to_string(failed) + " check(s) failed")
              << "\n";
  }
  return allPassed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact second-kind differentials and the fundamental 2-form "
               "numerator for C_ab plane curves"};
  app.require_subcommand(1);

  CommonArgs info_args, basis_args, second_args, form_args, verify_args;
  std::string checks_csv;
  std::optional<unsigned> seed;

  CLI::App* info = app.add_subcommand("info", "curve summary: genus, basis, weights");
  addCommon(info, info_args, false);
  CLI::App* basis =
      app.add_subcommand("basis", "numerators of the holomorphic differential basis");
  addCommon(basis, basis_args, false);
  CLI::App* second = app.add_subcommand(
      "second-kind", "numerators of the second-kind differential basis");
  addCommon(second, second_args, true);
  CLI::App* form =
      app.add_subcommand("two-form", "numerator of the fundamental 2-form");
  addCommon(form, form_args, true);
  CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
  addCommon(verify, verify_args, true);
  verify->add_option("--checks", checks_csv,
                     "comma-separated subset of checks to run");
  verify->add_option("--seed", seed, "extends the telescoping sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmdInfo(info_args);
    if (*basis) return cmdBasis(basis_args);
    if (*second) return cmdSecondKind(second_args);
    if (*form) return cmdTwoForm(form_args);
    std::vector<std::string> checks;
    std::stringstream ss(checks_csv);
    for (std::string token; std::getline(ss, token, ',');)
      if (!token.empty()) checks.push_back(token);
    return cmdVerify(verify_args, checks, seed);
  } catch (const cabform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
