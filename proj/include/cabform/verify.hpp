#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabform/curve.hpp"
#include "cabform/forms.hpp"

namespace cabform {

enum class CheckStatus { pass, fail, notApplicable };
enum class CheckMode { exact, moduloCurve };

std::string statusName(CheckStatus status);
std::string modeName(CheckMode mode);

/// Outcome of a single identity check. Failures always carry a witness: the
/// full residue polynomial in canonical order, so its leading monomial is
/// the canonically first counterexample. Reports are deterministic for a
/// fixed curve and options; only elapsed_ms varies between runs.
struct VerificationReport {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::optional<CheckMode> mode;
  std::optional<Polynomial> witness;
  std::vector<std::string> notes;
  long long elapsed_ms = 0;
};

enum class CurveFamily { hyperelliptic, generalizedHyperelliptic, cyclic, trigonal };

std::string familyName(CurveFamily family);

/// Families whose shape the curve matches, in declaration order. A curve can
/// match several (a hyperelliptic curve is also generalized hyperelliptic).
std::vector<CurveFamily> matchingFamilies(const CurveSpec& spec);

/// Exact invariance of a two-form numerator under the simultaneous swap
/// x <-> z, y <-> w.
VerificationReport checkSymmetry(const Polynomial& numerator);
VerificationReport checkSymmetry(const FundamentalForm& form);

/// Diagonal normalization: the numerator restricted to z = x, w = y must be
/// congruent to F_y(x,y)^2 modulo the curve.
VerificationReport checkNormalization(const CurveSpec& spec,
                                      const FundamentalForm& form);

/// Ties the two construction routes together: the assembled numerator
/// (block sum plus basis correction) must equal the closed-form numerator,
/// exactly or modulo the curve (mode records which); and the block sum must
/// agree with the omega-derivative numerator modulo the curve.
VerificationReport checkOracleIdentity(const CurveSpec& spec,
                                       const SecondKindBasis& basis,
                                       const FundamentalForm& form);

/// bilinearBlock(m,n) + bilinearBlock(n,m) == symmetrizedBlockRhs(m,n) for
/// every 0 <= m <= n <= a, exactly.
VerificationReport checkBlockPairs(const CurveSpec& spec);

struct TelescopeSample {
  int u, v, k, r, s;
};

/// Fixed deterministic grid of tuples; extra seeded tuples are appended when
/// a seed is supplied.
std::vector<TelescopeSample> defaultTelescopeSample(std::optional<unsigned> seed = {});

/// Each sampled tuple must satisfy the two-term collapse identities and the
/// quotient bracketing, exactly.
VerificationReport checkTelescoping(const std::vector<TelescopeSample>& sample);

/// Compares the general construction against the per-family reference
/// formulas (independent transcriptions). Adjustments applied to the
/// reference forms are listed in the report notes. For the hyperelliptic
/// family the classical route (explicit basis plus reduced omega numerator)
/// is additionally required to pass symmetry and normalization on its own.
VerificationReport checkSpecialForms(const CurveSpec& spec, CurveFamily family,
                                     const ConstructionOptions& opts = {});

/// Basis cardinality equals the genus formula and the orders at infinity
/// are pairwise distinct and nonnegative.
VerificationReport checkBasisOrders(const CurveSpec& spec);

VerificationReport checkHomogeneity(const CurveSpec& spec);

struct RunOptions {
  ConstructionOptions construction;
  std::vector<std::string> selected;  // empty selects every check
  std::optional<unsigned> seed;       // extends the telescoping sample
};

/// Runs every applicable check in a fixed order, never aborting the suite:
/// a check that throws is reported as failed with the message in its notes.
std::vector<VerificationReport> runAll(const CurveSpec& spec,
                                       const RunOptions& options = {});

bool allPassed(const std::vector<VerificationReport>& reports);

/// Stable check names accepted by selectors, including the aliases
/// "prop2" -> "block-pairs" and "tdelta" -> "telescoping".
std::vector<std::string> knownCheckNames();
std::optional<std::string> canonicalCheckName(const std::string& token);

}  // namespace cabform
