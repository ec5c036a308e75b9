#pragma once

#include <vector>

#include "core/proof.hpp"

namespace strictmodal {

// Closed s1+sp derivation of []phi <-> (phi == T).  Two substitution steps
// rewrite the trivially provable []phi <-> ([]T & []phi) into the goal, using
// the theorem-level equations (phi -> T) == T and (T -> phi) == phi.
Derivation necessity_as_identity_proof(const Formula& phi);

// Derivation of []psi from {[](phi -> psi), []phi} in s1+sp.
Derivation distribution_hypothesis_proof(const Formula& phi, const Formula& psi);

// Closed s1+sp derivation of [](phi -> psi) -> ([]phi -> []psi), produced by
// discharging both hypotheses of the derivation above.
Derivation distribution_proof(const Formula& phi, const Formula& psi);

// Closed s3 derivations of the congruence of strict equivalence under
// negation, implication and box, followed by the boxed form of each, in that
// order.  The negation and implication cases avoid the congruence axiom
// schemes, so they already hold in s1+sp; the box cases genuinely use the s3
// axiom.  Instantiated at x0, x1 (and x2, x3 for the implication forms).
std::vector<Derivation> identity_congruence_proofs();

}  // namespace strictmodal
