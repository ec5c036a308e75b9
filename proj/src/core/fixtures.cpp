#include "core/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/builder.hpp"

namespace strictmodal {

namespace {

// T mentions x0, so fresh variables start at 1.
unsigned fresh_var_above(const Formula& f) { return std::max(f.max_var_index() + 1, 1u); }

Formula boxed_operand(const DerivationBuilder& b, StepRef ref) {
  const Formula& f = b.formula(ref);
  if (f.kind() != Formula::Kind::Box) throw std::logic_error("step is not boxed");
  return f.child();
}

// From []X and the tautology X -> Y, derives []Y by distribution.
StepRef box_mono(DerivationBuilder& b, StepRef boxed, const Formula& target) {
  Formula source = boxed_operand(b, boxed);
  StepRef t = b.taut(Formula::implies(source, target));
  StepRef an_t = b.an(t);
  StepRef k = b.embed(distribution_proof(source, target));
  StepRef bridge = b.mp(an_t, k);
  return b.mp(boxed, bridge);
}

// From []X and []Y, derives [](X & Y) by distributing X -> (Y -> X & Y).
StepRef box_combine(DerivationBuilder& b, StepRef bx, StepRef by) {
  Formula x = boxed_operand(b, bx);
  Formula y = boxed_operand(b, by);
  Formula both = Formula::conj(x, y);
  Formula curried = Formula::implies(y, both);
  StepRef t = b.taut(Formula::implies(x, curried));
  StepRef an_t = b.an(t);
  StepRef k1 = b.embed(distribution_proof(x, curried));
  StepRef s1 = b.mp(an_t, k1);
  StepRef s2 = b.mp(bx, s1);
  StepRef k2 = b.embed(distribution_proof(y, both));
  StepRef s3 = b.mp(s2, k2);
  return b.mp(by, s3);
}

}  // namespace

Derivation necessity_as_identity_proof(const Formula& phi) {
  const Formula top = Formula::truth();
  const unsigned x = fresh_var_above(phi);
  const unsigned y = x + 1;
  const Formula phi_top = Formula::implies(phi, top);
  const Formula top_phi = Formula::implies(top, phi);

  DerivationBuilder b(SystemId::S1Sp);

  // (phi -> T) == T
  StepRef t1 = b.taut(Formula::implies(phi_top, top));
  StepRef t2 = b.taut(Formula::implies(top, phi_top));
  StepRef an1 = b.an(t1);
  StepRef an2 = b.an(t2);
  StepRef eq_a = b.conj_intro(an1, an2);

  // (T -> phi) == phi
  StepRef t3 = b.taut(Formula::implies(top_phi, phi));
  StepRef t4 = b.taut(Formula::implies(phi, top_phi));
  StepRef an3 = b.an(t3);
  StepRef an4 = b.an(t4);
  StepRef eq_b = b.conj_intro(an3, an4);

  // chi1[x := phi -> T] is the goal; chi1[x := T] is the halfway form h.
  Formula chi1 = Formula::iff(Formula::box(phi),
                              Formula::conj(Formula::box(Formula::var(x)), Formula::box(top_phi)));
  Formula goal = substitute(chi1, x, phi_top);
  Formula h = substitute(chi1, x, top);
  StepRef sp1 = b.sp(chi1, x, phi_top, top);
  StepRef goal_eq_h = b.mp(eq_a, sp1);

  // chi2[y := T -> phi] is h again; chi2[y := phi] is the residue r.
  Formula chi2 = Formula::iff(Formula::box(phi),
                              Formula::conj(Formula::box(top), Formula::box(Formula::var(y))));
  Formula r = substitute(chi2, y, phi);
  StepRef sp2 = b.sp(chi2, y, top_phi, phi);
  StepRef h_eq_r = b.mp(eq_b, sp2);

  // Chain the equations to r -> goal.
  StepRef box_h_goal = b.conj_elim_right(goal_eq_h);
  StepRef box_r_h = b.conj_elim_right(h_eq_r);
  StepRef pair = b.conj_intro(box_r_h, box_h_goal);
  StepRef chain = b.axiom(SchemeId::III, {r, h, goal});
  StepRef box_r_goal = b.mp(pair, chain);
  StepRef deflate = b.axiom(SchemeId::II, {Formula::implies(r, goal)});
  StepRef r_goal = b.mp(box_r_goal, deflate);

  // r itself follows from []T.
  StepRef t_top = b.taut(top);
  StepRef box_top = b.an(t_top);
  StepRef top_r = b.taut(Formula::implies(Formula::box(top), r));
  StepRef have_r = b.mp(box_top, top_r);
  b.mp(have_r, r_goal);
  return std::move(b).take();
}

Derivation distribution_hypothesis_proof(const Formula& phi, const Formula& psi) {
  const Formula top = Formula::truth();
  const Formula phi_psi = Formula::implies(phi, psi);
  const Formula top_psi = Formula::implies(top, psi);

  DerivationBuilder b(SystemId::S1Sp);
  StepRef h1 = b.hyp(Formula::box(phi_psi));
  StepRef h2 = b.hyp(Formula::box(phi));

  // phi == T from []phi.
  StepRef n_phi = b.embed(necessity_as_identity_proof(phi));
  StepRef fwd = b.taut(Formula::implies(
      b.formula(n_phi), Formula::implies(Formula::box(phi), Formula::equiv(phi, top))));
  StepRef fwd_mp = b.mp(n_phi, fwd);
  StepRef phi_eq_top = b.mp(h2, fwd_mp);

  // Rewrite the boxed antecedent: [](phi -> psi) == [](T -> psi).
  unsigned x = std::max(fresh_var_above(phi), fresh_var_above(psi));
  StepRef sp_step =
      b.sp(Formula::box(Formula::implies(Formula::var(x), psi)), x, phi, top);
  StepRef eq_boxes = b.mp(phi_eq_top, sp_step);
  StepRef left = b.conj_elim_left(eq_boxes);
  StepRef deflate =
      b.axiom(SchemeId::II, {Formula::implies(Formula::box(phi_psi), Formula::box(top_psi))});
  StepRef bridge = b.mp(left, deflate);
  StepRef box_top_psi = b.mp(h1, bridge);

  // psi == T, then []psi by the converse direction of the principle.
  StepRef t = b.taut(Formula::implies(psi, top));
  StepRef an_t = b.an(t);
  StepRef psi_eq_top = b.conj_intro(an_t, box_top_psi);
  StepRef n_psi = b.embed(necessity_as_identity_proof(psi));
  StepRef bwd = b.taut(Formula::implies(
      b.formula(n_psi), Formula::implies(Formula::equiv(psi, top), Formula::box(psi))));
  StepRef bwd_mp = b.mp(n_psi, bwd);
  b.mp(psi_eq_top, bwd_mp);
  return std::move(b).take();
}

Derivation distribution_proof(const Formula& phi, const Formula& psi) {
  const SystemConfig cfg = SystemConfig::standard(SystemId::S1Sp);
  const Formula h1 = Formula::box(Formula::implies(phi, psi));
  const Formula h2 = Formula::box(phi);
  Derivation base = distribution_hypothesis_proof(phi, psi);
  Derivation once = deduction_transform(base, cfg, {h1}, h2);
  return deduction_transform(once, cfg, {}, h1);
}

namespace {

// Closed derivation of []([](x -> y) -> ([]x -> []y)) inside b; needs AN on
// the s3 scheme, so s3 or above.
StepRef boxed_distribution(DerivationBuilder& b, const Formula& x, const Formula& y) {
  Formula boxed_impl = Formula::box(Formula::implies(x, y));
  Formula inner = Formula::implies(Formula::box(x), Formula::box(y));
  StepRef lift = b.axiom(SchemeId::S3Ax, {x, y});
  StepRef an1 = b.an(lift);
  StepRef deflate = b.axiom(SchemeId::II, {inner});
  StepRef an2 = b.an(deflate);
  StepRef pair = b.conj_intro(an1, an2);
  StepRef chain = b.axiom(SchemeId::III, {boxed_impl, Formula::box(inner), inner});
  return b.mp(pair, chain);
}

// Closed derivation of []([]p -> ([]q -> []r)) from the tautology
// p -> (q -> r), lifting twice through the box.
StepRef curried_boxed(DerivationBuilder& b, const Formula& p, const Formula& q,
                      const Formula& r) {
  Formula qr = Formula::implies(q, r);
  StepRef t = b.taut(Formula::implies(p, qr));
  StepRef an_t = b.an(t);
  StepRef lift = b.axiom(SchemeId::S3Ax, {p, qr});
  StepRef s1 = b.mp(an_t, lift);
  StepRef k = boxed_distribution(b, q, r);
  StepRef pair = b.conj_intro(s1, k);
  StepRef chain = b.axiom(
      SchemeId::III,
      {Formula::box(p), Formula::box(qr), Formula::implies(Formula::box(q), Formula::box(r))});
  return b.mp(pair, chain);
}

Derivation negation_congruence(const SystemConfig& cfg, const Formula& phi, const Formula& psi) {
  Formula fwd = Formula::implies(phi, psi);
  Formula bwd = Formula::implies(psi, phi);
  Formula nfwd = Formula::implies(Formula::neg(phi), Formula::neg(psi));
  Formula nbwd = Formula::implies(Formula::neg(psi), Formula::neg(phi));
  Formula hyp = Formula::equiv(phi, psi);

  DerivationBuilder b(cfg.id);
  StepRef h = b.hyp(hyp);
  StepRef b_fwd = b.conj_elim_left(h);
  StepRef b_bwd = b.conj_elim_right(h);
  StepRef b_nfwd = box_mono(b, b_bwd, nfwd);
  StepRef b_nbwd = box_mono(b, b_fwd, nbwd);
  b.conj_intro(b_nfwd, b_nbwd);
  return deduction_transform(std::move(b).take(), cfg, {}, hyp);
}

Derivation implication_congruence(const SystemConfig& cfg, const Formula& phi, const Formula& psi,
                                  const Formula& phi2, const Formula& psi2) {
  Formula a1 = Formula::implies(phi, psi);
  Formula a2 = Formula::implies(psi, phi);
  Formula b1 = Formula::implies(phi2, psi2);
  Formula b2 = Formula::implies(psi2, phi2);
  Formula c1 = Formula::implies(Formula::implies(phi, phi2), Formula::implies(psi, psi2));
  Formula c2 = Formula::implies(Formula::implies(psi, psi2), Formula::implies(phi, phi2));
  Formula hyp = Formula::conj(Formula::equiv(phi, psi), Formula::equiv(phi2, psi2));

  DerivationBuilder b(cfg.id);
  StepRef h = b.hyp(hyp);
  StepRef left_eq = b.conj_elim_left(h);
  StepRef right_eq = b.conj_elim_right(h);
  StepRef b_a1 = b.conj_elim_left(left_eq);
  StepRef b_a2 = b.conj_elim_right(left_eq);
  StepRef b_b1 = b.conj_elim_left(right_eq);
  StepRef b_b2 = b.conj_elim_right(right_eq);
  StepRef comb1 = box_combine(b, b_a2, b_b1);
  StepRef b_c1 = box_mono(b, comb1, c1);
  StepRef comb2 = box_combine(b, b_a1, b_b2);
  StepRef b_c2 = box_mono(b, comb2, c2);
  b.conj_intro(b_c1, b_c2);
  return deduction_transform(std::move(b).take(), cfg, {}, hyp);
}

Derivation box_congruence(const SystemConfig& cfg, const Formula& phi, const Formula& psi) {
  Formula hyp = Formula::equiv(phi, psi);
  DerivationBuilder b(cfg.id);
  StepRef h = b.hyp(hyp);
  StepRef b_fwd = b.conj_elim_left(h);
  StepRef b_bwd = b.conj_elim_right(h);
  StepRef lift1 = b.axiom(SchemeId::S3Ax, {phi, psi});
  StepRef d1 = b.mp(b_fwd, lift1);
  StepRef lift2 = b.axiom(SchemeId::S3Ax, {psi, phi});
  StepRef d2 = b.mp(b_bwd, lift2);
  b.conj_intro(d1, d2);
  return deduction_transform(std::move(b).take(), cfg, {}, hyp);
}

Derivation boxed_negation_congruence(const SystemConfig& cfg, const Formula& phi,
                                     const Formula& psi) {
  Formula a1 = Formula::implies(phi, psi);
  Formula a2 = Formula::implies(psi, phi);
  Formula n1 = Formula::implies(Formula::neg(phi), Formula::neg(psi));
  Formula n2 = Formula::implies(Formula::neg(psi), Formula::neg(phi));

  DerivationBuilder b(cfg.id);
  StepRef t1 = b.taut(Formula::implies(a2, n1));
  StepRef an1 = b.an(t1);
  StepRef lift1 = b.axiom(SchemeId::S3Ax, {a2, n1});
  StepRef d1 = b.mp(an1, lift1);
  StepRef t2 = b.taut(Formula::implies(a1, n2));
  StepRef an2 = b.an(t2);
  StepRef lift2 = b.axiom(SchemeId::S3Ax, {a1, n2});
  StepRef d2 = b.mp(an2, lift2);
  StepRef comb = box_combine(b, d1, d2);
  Formula inner = Formula::implies(Formula::equiv(phi, psi),
                                   Formula::equiv(Formula::neg(phi), Formula::neg(psi)));
  box_mono(b, comb, inner);
  return std::move(b).take();
}

Derivation boxed_implication_congruence(const SystemConfig& cfg, const Formula& phi,
                                        const Formula& psi, const Formula& phi2,
                                        const Formula& psi2) {
  Formula a1 = Formula::implies(phi, psi);
  Formula a2 = Formula::implies(psi, phi);
  Formula b1 = Formula::implies(phi2, psi2);
  Formula b2 = Formula::implies(psi2, phi2);
  Formula c1 = Formula::implies(Formula::implies(phi, phi2), Formula::implies(psi, psi2));
  Formula c2 = Formula::implies(Formula::implies(psi, psi2), Formula::implies(phi, phi2));

  DerivationBuilder b(cfg.id);
  StepRef curry1 = curried_boxed(b, a2, b1, c1);
  Formula flat1 = Formula::implies(Formula::conj(Formula::box(a2), Formula::box(b1)),
                                   Formula::box(c1));
  StepRef u1 = box_mono(b, curry1, flat1);
  StepRef curry2 = curried_boxed(b, a1, b2, c2);
  Formula flat2 = Formula::implies(Formula::conj(Formula::box(a1), Formula::box(b2)),
                                   Formula::box(c2));
  StepRef u2 = box_mono(b, curry2, flat2);
  StepRef comb = box_combine(b, u1, u2);
  Formula inner = Formula::implies(
      Formula::conj(Formula::equiv(phi, psi), Formula::equiv(phi2, psi2)),
      Formula::equiv(Formula::implies(phi, phi2), Formula::implies(psi, psi2)));
  box_mono(b, comb, inner);
  return std::move(b).take();
}

Derivation boxed_box_congruence(const SystemConfig& cfg, const Formula& phi, const Formula& psi) {
  Formula a1 = Formula::implies(phi, psi);
  Formula a2 = Formula::implies(psi, phi);

  DerivationBuilder b(cfg.id);
  StepRef lift1 = b.axiom(SchemeId::S3Ax, {phi, psi});
  StepRef an1 = b.an(lift1);
  StepRef lift2 = b.axiom(SchemeId::S3Ax, {psi, phi});
  StepRef an2 = b.an(lift2);
  StepRef comb = box_combine(b, an1, an2);
  Formula inner = Formula::implies(Formula::equiv(phi, psi),
                                   Formula::equiv(Formula::box(phi), Formula::box(psi)));
  box_mono(b, comb, inner);
  return std::move(b).take();
}

}  // namespace

std::vector<Derivation> identity_congruence_proofs() {
  const SystemConfig cfg = SystemConfig::standard(SystemId::S3);
  const Formula x0 = Formula::var(0), x1 = Formula::var(1);
  const Formula x2 = Formula::var(2), x3 = Formula::var(3);
  std::vector<Derivation> out;
  out.push_back(negation_congruence(cfg, x0, x1));
  out.push_back(implication_congruence(cfg, x0, x1, x2, x3));
  out.push_back(box_congruence(cfg, x0, x1));
  out.push_back(boxed_negation_congruence(cfg, x0, x1));
  out.push_back(boxed_implication_congruence(cfg, x0, x1, x2, x3));
  out.push_back(boxed_box_congruence(cfg, x0, x1));
  return out;
}

}  // namespace strictmodal
