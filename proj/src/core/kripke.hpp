#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/formula.hpp"

namespace strictmodal {

inline constexpr unsigned kMaxWorlds = 5;
inline constexpr unsigned kMaxKripkeVars = 4;

// Reflexive frame with a distinguished set of normal worlds.  At a
// non-normal world every boxed formula is false; elsewhere box quantifies
// over the world's successors.  Worlds and successor sets are bitmasks.
struct KripkeModel {
  unsigned world_count = 0;
  unsigned normal = 0;
  std::vector<unsigned> access;
  std::map<unsigned, unsigned> valuation;

  bool is_normal(unsigned w) const { return (normal >> w) & 1u; }
  bool var_true_at(unsigned var, unsigned w) const;
  bool is_transitive() const;

  // Throws std::invalid_argument unless the frame is well formed: between
  // one and kMaxWorlds worlds, a successor row per world, every row
  // reflexive and in range, and at least one normal world.
  void validate() const;
};

bool evaluate_at(const KripkeModel& k, unsigned world, const Formula& f);

struct KripkeValidity {
  bool valid = true;
  unsigned witness_world = 0;
};

// Truth at every normal world; non-normal worlds do not count against
// validity.  The witness is the least normal world refuting f.
KripkeValidity check_kripke_validity(const KripkeModel& k, const Formula& f);

// First frame-and-valuation refuting f.  Scan order: world count ascending,
// normal sets by size descending then mask ascending, successor rows
// lexicographic with row 0 most significant, valuations lexicographic with
// the lowest variable most significant.
std::optional<KripkeModel> find_kripke_countermodel(const Formula& f, unsigned max_worlds);

KripkeModel parse_kripke(std::string_view text);
std::string print_kripke(const KripkeModel& k);

}  // namespace strictmodal
