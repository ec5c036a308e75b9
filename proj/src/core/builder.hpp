#pragma once

#include <stdexcept>
#include <utility>

#include "core/proof.hpp"

namespace strictmodal {

// Appends steps with formulas computed from their justifications, so a built
// derivation cannot drift from what the checker re-derives.  No system gating
// happens here; ill-gated steps are caught by check_derivation, which lets
// tests construct deliberately rejected derivations.
class DerivationBuilder {
 public:
  explicit DerivationBuilder(SystemId declared) { d_.declared_system = declared; }

  const Formula& formula(StepRef i) const { return d_.steps.at(i).formula; }
  std::size_t size() const { return d_.steps.size(); }

  StepRef hyp(Formula f) { return push(std::move(f), HypJust{}); }
  StepRef taut(Formula f) { return push(std::move(f), TautJust{}); }

  StepRef axiom(SchemeId s, std::vector<Formula> binding) {
    Formula f = instantiate_scheme(s, binding);
    return push(std::move(f), AxiomJust{s, std::move(binding)});
  }

  StepRef an(StepRef ref) { return push(Formula::box(formula(ref)), AnJust{ref}); }

  StepRef sp(Formula tmpl, unsigned var, Formula lhs, Formula rhs) {
    Formula f =
        Formula::implies(Formula::equiv(lhs, rhs), Formula::equiv(substitute(tmpl, var, lhs),
                                                                  substitute(tmpl, var, rhs)));
    return push(std::move(f), SpJust{std::move(tmpl), var, std::move(lhs), std::move(rhs)});
  }

  StepRef spse(Formula tmpl, unsigned var, StepRef ref) {
    auto eq = formula(ref).as_equiv();
    if (!eq) throw std::logic_error("spse premise is not a strict equation");
    Formula f = Formula::equiv(substitute(tmpl, var, eq->first),
                               substitute(tmpl, var, eq->second));
    return push(std::move(f), SpseJust{std::move(tmpl), var, ref});
  }

  StepRef mp(StepRef antecedent, StepRef implication) {
    const Formula& impl = formula(implication);
    if (impl.kind() != Formula::Kind::Impl || impl.lhs() != formula(antecedent))
      throw std::logic_error("mp premises do not fit");
    return push(impl.rhs(), MpJust{antecedent, implication});
  }

  // Inlines all of sub with its internal references shifted; returns the new
  // index of sub's final step.
  StepRef embed(const Derivation& sub) {
    if (sub.steps.empty()) throw std::logic_error("cannot embed an empty derivation");
    const std::size_t base = d_.steps.size();
    for (const Step& s : sub.steps) {
      Justification j = s.just;
      if (auto* an_j = std::get_if<AnJust>(&j)) {
        an_j->ref += base;
      } else if (auto* se = std::get_if<SpseJust>(&j)) {
        se->ref += base;
      } else if (auto* mp_j = std::get_if<MpJust>(&j)) {
        mp_j->antecedent += base;
        mp_j->implication += base;
      }
      d_.steps.push_back({s.formula, std::move(j)});
    }
    return d_.steps.size() - 1;
  }

  StepRef conj_intro(StepRef a, StepRef b) {
    const Formula fa = formula(a);
    const Formula fb = formula(b);
    StepRef t = taut(Formula::implies(fa, Formula::implies(fb, Formula::conj(fa, fb))));
    return mp(b, mp(a, t));
  }

  StepRef conj_elim_left(StepRef ab) {
    auto parts = formula(ab).as_conj();
    if (!parts) throw std::logic_error("step is not a conjunction");
    return mp(ab, taut(Formula::implies(formula(ab), parts->first)));
  }

  StepRef conj_elim_right(StepRef ab) {
    auto parts = formula(ab).as_conj();
    if (!parts) throw std::logic_error("step is not a conjunction");
    return mp(ab, taut(Formula::implies(formula(ab), parts->second)));
  }

  // Copies a pre-justified step verbatim.  The caller vouches that any
  // references inside j already point into this derivation.
  StepRef append_raw(Formula f, Justification j) { return push(std::move(f), std::move(j)); }

  Derivation take() && { return std::move(d_); }

 private:
  StepRef push(Formula f, Justification j) {
    d_.steps.push_back({std::move(f), std::move(j)});
    return d_.steps.size() - 1;
  }

  Derivation d_;
};

}  // namespace strictmodal
