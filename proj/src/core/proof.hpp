#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/formula.hpp"
#include "core/scheme.hpp"

namespace strictmodal {

enum class SystemId { S1, S1Sp, S1BoxSp, S3, S4, S5 };

std::string_view system_name(SystemId id);
std::optional<SystemId> system_from_name(std::string_view name);

// Which schemes are axioms, which of those the necessitation rule AN may box,
// and which substitution rules are admitted.  The six standard systems form a
// chain: every later config is a superset of the earlier ones.
struct SystemConfig {
  SystemId id = SystemId::S1;
  std::set<SchemeId> axiom_schemes;
  std::set<SchemeId> an_eligible;
  bool allow_spse = true;
  bool allow_sp_step = false;

  static SystemConfig standard(SystemId id);

  bool has_scheme(SchemeId s) const { return axiom_schemes.count(s) != 0; }
  bool an_allows(SchemeId s) const { return an_eligible.count(s) != 0; }
};

using StepRef = std::size_t;

struct HypJust {};
struct TautJust {};
struct AxiomJust {
  SchemeId scheme;
  std::vector<Formula> binding;
};
struct AnJust {
  StepRef ref;
};
// Conclusion (psi == psi') -> (template[var:=psi] == template[var:=psi']).
struct SpJust {
  Formula tmpl;
  unsigned var;
  Formula lhs;
  Formula rhs;
};
// From a premise-free step proving psi == psi', conclude
// template[var:=psi] == template[var:=psi'].
struct SpseJust {
  Formula tmpl;
  unsigned var;
  StepRef ref;
};
struct MpJust {
  StepRef antecedent;
  StepRef implication;
};

using Justification =
    std::variant<HypJust, TautJust, AxiomJust, AnJust, SpJust, SpseJust, MpJust>;

struct Step {
  Formula formula;
  Justification just;
};

struct Derivation {
  std::optional<SystemId> declared_system;
  std::vector<Step> steps;

  const Formula& conclusion() const;
  // Distinct formulas of hyp steps, in first-appearance order.
  std::vector<Formula> hypotheses() const;
};

enum class CheckErrorCode {
  EmptyDerivation,
  BadReference,
  FormulaMismatch,
  HypothesisUnknown,
  NotTautological,
  SchemeUnavailable,
  SchemeArity,
  AnTarget,
  AnIneligible,
  SpDisallowed,
  SpseDisallowed,
  SpseOpenPremise,
  SpsePremiseShape,
  MpShape,
};

std::string_view check_error_name(CheckErrorCode code);

struct CheckError {
  std::size_t step = 0;
  CheckErrorCode code = CheckErrorCode::EmptyDerivation;
  std::string message;
};

struct CheckOutcome {
  std::optional<CheckError> error;
  // Per step, the indices of the hyp steps it depends on; filled for the
  // prefix preceding any error.
  std::vector<std::set<StepRef>> dependencies;

  bool ok() const { return !error.has_value(); }
};

// Verifies every step against the config and the allowed hypothesis set.
// Each step's stored formula must equal the one its justification derives.
CheckOutcome check_derivation(const Derivation& d, const SystemConfig& sys,
                              const std::vector<Formula>& hypotheses);

// Discharges phi: from a derivation of psi under hypotheses + {phi}, builds a
// derivation of phi -> psi under hypotheses alone.  Steps not depending on phi
// are copied; dependent steps are lifted under the implication with weakening
// tautologies and MP.  Throws std::invalid_argument if d does not check.
Derivation deduction_transform(const Derivation& d, const SystemConfig& sys,
                               const std::vector<Formula>& hypotheses, const Formula& phi);

// Rewrites every spse step as an sp step followed by MP on the (premise-free)
// referenced equation.  The result checks in any config with allow_sp_step.
Derivation eliminate_spse(const Derivation& d);

// Proof text format, one step per line after an optional `system <id>` header:
//   <i> hyp <formula>
//   <i> taut <formula>
//   <i> ax <scheme> a=<formula> b=<formula> ... : <formula>
//   <i> an <ref> : <formula>
//   <i> sp <template> ; x<v> ; <psi> ; <psi'> : <formula>
//   <i> spse <template> ; x<v> ; <ref> : <formula>
//   <i> mp <antecedent> <implication> : <formula>
// Indices are 0-based and strictly sequential; `#` starts a comment.
Derivation parse_derivation(std::string_view text);
std::string print_derivation(const Derivation& d);

// A stream holds one or more derivations separated by `---` lines.
std::vector<Derivation> parse_derivation_stream(std::string_view text);
std::string print_derivation_stream(const std::vector<Derivation>& ds);

}  // namespace strictmodal
