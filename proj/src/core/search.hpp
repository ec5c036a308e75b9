#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/algebra.hpp"
#include "core/semantics.hpp"

namespace strictmodal {

// Visits every algebra of the class with exactly atom_count atoms, in
// canonical order: designated atom ascending, then box table ascending read
// as a base-2^n numeral with entry 0 most significant.  The visitor returns
// false to stop early.  Returns the number of algebras visited.
std::uint64_t enumerate_models(unsigned atom_count, ModelClass c,
                               const std::function<bool(const FiniteModalAlgebra&)>& visit,
                               unsigned max_atoms = kDefaultMaxAtoms);

std::uint64_t count_models(unsigned atom_count, ModelClass c,
                           unsigned max_atoms = kDefaultMaxAtoms);

std::vector<FiniteModalAlgebra> collect_models(unsigned atom_count, ModelClass c,
                                               unsigned max_atoms = kDefaultMaxAtoms);

struct Countermodel {
  FiniteModalAlgebra algebra;
  Assignment assignment;
};

// First interpretation refuting f, scanning atom counts 1..max_atoms, then
// models in enumeration order, then assignments in validity order.  Empty
// means f holds in every model of the class within the bound.  A bound past
// kDefaultMaxAtoms raises LimitError rather than starting a hopeless scan.
std::optional<Countermodel> find_countermodel(const Formula& f, unsigned max_atoms, ModelClass c,
                                              std::uint64_t assignment_cap = kDefaultAssignmentCap);

struct SchemeCensus {
  std::uint64_t total = 0;
  std::uint64_t validating = 0;
  std::uint64_t refuting = 0;
  std::optional<Countermodel> first_refuting;
};

// Per-model validity verdicts for f over the whole class at one atom count.
SchemeCensus classify_scheme(const Formula& f, unsigned atom_count, ModelClass c,
                             unsigned max_atoms = kDefaultMaxAtoms,
                             std::uint64_t assignment_cap = kDefaultAssignmentCap);

}  // namespace strictmodal
