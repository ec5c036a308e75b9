#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "core/builder.hpp"
#include "core/proof.hpp"

namespace strictmodal {

namespace {

Justification remap(const Justification& j,
                    const std::unordered_map<StepRef, StepRef>& to_new) {
  Justification out = j;
  if (auto* an = std::get_if<AnJust>(&out)) {
    an->ref = to_new.at(an->ref);
  } else if (auto* se = std::get_if<SpseJust>(&out)) {
    se->ref = to_new.at(se->ref);
  } else if (auto* mp = std::get_if<MpJust>(&out)) {
    mp->antecedent = to_new.at(mp->antecedent);
    mp->implication = to_new.at(mp->implication);
  }
  return out;
}

}  // namespace

Derivation deduction_transform(const Derivation& d, const SystemConfig& sys,
                               const std::vector<Formula>& hypotheses, const Formula& phi) {
  std::vector<Formula> extended = hypotheses;
  if (std::find(extended.begin(), extended.end(), phi) == extended.end())
    extended.push_back(phi);
  CheckOutcome chk = check_derivation(d, sys, extended);
  if (!chk.ok())
    throw std::invalid_argument("input derivation does not check: " + chk.error->message);

  const std::size_t n = d.steps.size();
  auto depends_on_phi = [&](std::size_t i) {
    for (StepRef h : chk.dependencies[i])
      if (d.steps[h].formula == phi) return true;
    return false;
  };

  // Backward pass: which original steps are needed verbatim, and which are
  // needed in lifted phi -> chi form.  Only the conclusion's cone is kept.
  std::vector<char> need_direct(n, 0), need_lifted(n, 0);
  need_lifted[n - 1] = 1;
  for (std::size_t i = n; i-- > 0;) {
    if (need_lifted[i]) {
      if (!depends_on_phi(i)) {
        need_direct[i] = 1;
      } else if (const auto* mp = std::get_if<MpJust>(&d.steps[i].just)) {
        need_lifted[mp->antecedent] = 1;
        need_lifted[mp->implication] = 1;
      }
      // A dependent non-MP step can only be the hypothesis phi itself, which
      // lifts to the tautology phi -> phi with no prerequisites.
    }
    if (need_direct[i]) {
      if (const auto* mp = std::get_if<MpJust>(&d.steps[i].just)) {
        need_direct[mp->antecedent] = 1;
        need_direct[mp->implication] = 1;
      } else if (const auto* an = std::get_if<AnJust>(&d.steps[i].just)) {
        need_direct[an->ref] = 1;
      } else if (const auto* se = std::get_if<SpseJust>(&d.steps[i].just)) {
        need_direct[se->ref] = 1;
      }
    }
  }

  DerivationBuilder b(sys.id);
  std::unordered_map<StepRef, StepRef> direct_ref, lifted_ref;
  for (std::size_t i = 0; i < n; ++i) {
    const Step& s = d.steps[i];
    if (need_direct[i]) {
      b.append_raw(s.formula, remap(s.just, direct_ref));
      direct_ref[i] = b.size() - 1;
    }
    if (!need_lifted[i]) continue;
    const Formula& chi = s.formula;
    if (!depends_on_phi(i)) {
      StepRef t = b.taut(Formula::implies(chi, Formula::implies(phi, chi)));
      lifted_ref[i] = b.mp(direct_ref.at(i), t);
    } else if (std::holds_alternative<HypJust>(s.just)) {
      lifted_ref[i] = b.taut(Formula::implies(phi, phi));
    } else {
      const auto& mp = std::get<MpJust>(s.just);
      const Formula& chi_a = d.steps[mp.antecedent].formula;
      StepRef lift_impl = lifted_ref.at(mp.implication);
      StepRef lift_ante = lifted_ref.at(mp.antecedent);
      StepRef t = b.taut(Formula::implies(
          b.formula(lift_impl),
          Formula::implies(Formula::implies(phi, chi_a), Formula::implies(phi, chi))));
      lifted_ref[i] = b.mp(lift_ante, b.mp(lift_impl, t));
    }
  }
  return std::move(b).take();
}

Derivation eliminate_spse(const Derivation& d) {
  DerivationBuilder b(d.declared_system.value_or(SystemId::S1Sp));
  std::unordered_map<StepRef, StepRef> to_new;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& s = d.steps[i];
    if (const auto* se = std::get_if<SpseJust>(&s.just)) {
      StepRef premise = to_new.at(se->ref);
      auto eq = b.formula(premise).as_equiv();
      if (!eq) throw std::invalid_argument("spse premise is not a strict equation");
      StepRef sp_step = b.sp(se->tmpl, se->var, eq->first, eq->second);
      to_new[i] = b.mp(premise, sp_step);
    } else {
      b.append_raw(s.formula, remap(s.just, to_new));
      to_new[i] = b.size() - 1;
    }
  }
  return std::move(b).take();
}

}  // namespace strictmodal
