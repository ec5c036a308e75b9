#include "core/proof.hpp"

#include <algorithm>
#include <stdexcept>

namespace strictmodal {

std::string_view system_name(SystemId id) {
  switch (id) {
    case SystemId::S1: return "s1";
    case SystemId::S1Sp: return "s1+sp";
    case SystemId::S1BoxSp: return "s1+boxsp";
    case SystemId::S3: return "s3";
    case SystemId::S4: return "s4";
    case SystemId::S5: return "s5";
  }
  throw std::logic_error("unknown system");
}

std::optional<SystemId> system_from_name(std::string_view name) {
  if (name == "s1") return SystemId::S1;
  if (name == "s1+sp") return SystemId::S1Sp;
  if (name == "s1+boxsp") return SystemId::S1BoxSp;
  if (name == "s3") return SystemId::S3;
  if (name == "s4") return SystemId::S4;
  if (name == "s5") return SystemId::S5;
  return std::nullopt;
}

SystemConfig SystemConfig::standard(SystemId id) {
  SystemConfig c;
  c.id = id;
  c.axiom_schemes = {SchemeId::Taut, SchemeId::II, SchemeId::III};
  c.an_eligible = c.axiom_schemes;
  c.allow_spse = true;
  c.allow_sp_step = false;
  if (id == SystemId::S1) return c;

  c.axiom_schemes.insert({SchemeId::IV, SchemeId::V, SchemeId::VI});
  c.allow_sp_step = true;
  if (id == SystemId::S1Sp) return c;
  if (id == SystemId::S1BoxSp) {
    c.an_eligible = c.axiom_schemes;
    return c;
  }

  c.axiom_schemes.insert(SchemeId::S3Ax);
  c.an_eligible.insert(SchemeId::S3Ax);
  if (id == SystemId::S3) return c;

  c.axiom_schemes.insert(SchemeId::S4Ax);
  c.an_eligible.insert(SchemeId::S4Ax);
  if (id == SystemId::S4) return c;

  c.axiom_schemes.insert(SchemeId::S5Ax);
  c.an_eligible.insert(SchemeId::S5Ax);
  return c;
}

const Formula& Derivation::conclusion() const {
  if (steps.empty()) throw std::logic_error("empty derivation has no conclusion");
  return steps.back().formula;
}

std::vector<Formula> Derivation::hypotheses() const {
  std::vector<Formula> out;
  for (const Step& s : steps)
    if (std::holds_alternative<HypJust>(s.just))
      if (std::find(out.begin(), out.end(), s.formula) == out.end()) out.push_back(s.formula);
  return out;
}

std::string_view check_error_name(CheckErrorCode code) {
  switch (code) {
    case CheckErrorCode::EmptyDerivation: return "empty derivation";
    case CheckErrorCode::BadReference: return "bad step reference";
    case CheckErrorCode::FormulaMismatch: return "stored formula does not match justification";
    case CheckErrorCode::HypothesisUnknown: return "formula is not an allowed hypothesis";
    case CheckErrorCode::NotTautological: return "formula is not a tautological form";
    case CheckErrorCode::SchemeUnavailable: return "axiom scheme not available in this system";
    case CheckErrorCode::SchemeArity: return "wrong number of scheme bindings";
    case CheckErrorCode::AnTarget: return "an must reference a taut or ax step";
    case CheckErrorCode::AnIneligible: return "an is not applicable to this scheme here";
    case CheckErrorCode::SpDisallowed: return "sp steps are not allowed in this system";
    case CheckErrorCode::SpseDisallowed: return "spse steps are not allowed in this system";
    case CheckErrorCode::SpseOpenPremise: return "spse premise depends on hypotheses";
    case CheckErrorCode::SpsePremiseShape: return "spse premise is not a strict equation";
    case CheckErrorCode::MpShape: return "mp premises do not fit";
  }
  return "unknown error";
}

namespace {

struct Checker {
  const Derivation& d;
  const SystemConfig& sys;
  const std::vector<Formula>& hypotheses;
  CheckOutcome out;

  bool fail(std::size_t i, CheckErrorCode code, std::string detail = {}) {
    std::string msg = "step " + std::to_string(i) + ": " + std::string(check_error_name(code));
    if (!detail.empty()) msg += " (" + detail + ")";
    out.error = CheckError{i, code, std::move(msg)};
    return false;
  }

  bool check_ref(std::size_t i, StepRef r) { return r < i; }

  bool step(std::size_t i) {
    const Step& s = d.steps[i];
    std::set<StepRef>& deps = out.dependencies[i];

    if (std::holds_alternative<HypJust>(s.just)) {
      if (std::find(hypotheses.begin(), hypotheses.end(), s.formula) == hypotheses.end())
        return fail(i, CheckErrorCode::HypothesisUnknown);
      deps.insert(i);
      return true;
    }
    if (std::holds_alternative<TautJust>(s.just)) {
      if (!is_tautological_form(s.formula)) return fail(i, CheckErrorCode::NotTautological);
      return true;
    }
    if (const auto* ax = std::get_if<AxiomJust>(&s.just)) {
      if (ax->scheme == SchemeId::Taut || !sys.has_scheme(ax->scheme))
        return fail(i, CheckErrorCode::SchemeUnavailable);
      if (ax->binding.size() != scheme_metavar_count(ax->scheme))
        return fail(i, CheckErrorCode::SchemeArity);
      if (instantiate_scheme(ax->scheme, ax->binding) != s.formula)
        return fail(i, CheckErrorCode::FormulaMismatch);
      return true;
    }
    if (const auto* an = std::get_if<AnJust>(&s.just)) {
      if (!check_ref(i, an->ref)) return fail(i, CheckErrorCode::BadReference);
      const Step& target = d.steps[an->ref];
      if (std::holds_alternative<TautJust>(target.just)) {
        if (!sys.an_allows(SchemeId::Taut)) return fail(i, CheckErrorCode::AnIneligible);
      } else if (const auto* tax = std::get_if<AxiomJust>(&target.just)) {
        if (!sys.an_allows(tax->scheme))
          return fail(i, CheckErrorCode::AnIneligible, std::string(scheme_name(tax->scheme)));
      } else {
        return fail(i, CheckErrorCode::AnTarget);
      }
      if (s.formula != Formula::box(target.formula))
        return fail(i, CheckErrorCode::FormulaMismatch);
      return true;
    }
    if (const auto* sp = std::get_if<SpJust>(&s.just)) {
      if (!sys.allow_sp_step) return fail(i, CheckErrorCode::SpDisallowed);
      Formula expect = Formula::implies(
          Formula::equiv(sp->lhs, sp->rhs),
          Formula::equiv(substitute(sp->tmpl, sp->var, sp->lhs),
                         substitute(sp->tmpl, sp->var, sp->rhs)));
      if (s.formula != expect) return fail(i, CheckErrorCode::FormulaMismatch);
      return true;
    }
    if (const auto* se = std::get_if<SpseJust>(&s.just)) {
      if (!sys.allow_spse) return fail(i, CheckErrorCode::SpseDisallowed);
      if (!check_ref(i, se->ref)) return fail(i, CheckErrorCode::BadReference);
      if (!out.dependencies[se->ref].empty()) return fail(i, CheckErrorCode::SpseOpenPremise);
      auto eq = d.steps[se->ref].formula.as_equiv();
      if (!eq) return fail(i, CheckErrorCode::SpsePremiseShape);
      Formula expect = Formula::equiv(substitute(se->tmpl, se->var, eq->first),
                                      substitute(se->tmpl, se->var, eq->second));
      if (s.formula != expect) return fail(i, CheckErrorCode::FormulaMismatch);
      return true;
    }
    const auto& mp = std::get<MpJust>(s.just);
    if (!check_ref(i, mp.antecedent) || !check_ref(i, mp.implication))
      return fail(i, CheckErrorCode::BadReference);
    const Formula& impl = d.steps[mp.implication].formula;
    if (impl.kind() != Formula::Kind::Impl || impl.lhs() != d.steps[mp.antecedent].formula)
      return fail(i, CheckErrorCode::MpShape);
    if (s.formula != impl.rhs()) return fail(i, CheckErrorCode::FormulaMismatch);
    const auto& da = out.dependencies[mp.antecedent];
    const auto& di = out.dependencies[mp.implication];
    deps.insert(da.begin(), da.end());
    deps.insert(di.begin(), di.end());
    return true;
  }
};

}  // namespace

CheckOutcome check_derivation(const Derivation& d, const SystemConfig& sys,
                              const std::vector<Formula>& hypotheses) {
  Checker ck{d, sys, hypotheses, {}};
  if (d.steps.empty()) {
    ck.fail(0, CheckErrorCode::EmptyDerivation);
    return std::move(ck.out);
  }
  ck.out.dependencies.resize(d.steps.size());
  for (std::size_t i = 0; i < d.steps.size(); ++i)
    if (!ck.step(i)) {
      ck.out.dependencies.resize(i);
      break;
    }
  return std::move(ck.out);
}

}  // namespace strictmodal
