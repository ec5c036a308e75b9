#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/formula.hpp"

namespace strictmodal {

// Axiom schemes beyond the tautological forms.  Taut is a placeholder id for
// the tautology rule and has no fixed pattern.
enum class SchemeId {
  Taut,
  II,
  III,
  IV,
  V,
  VI,
  S3Ax,
  S4Ax,
  S5Ax,
};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

// Number of metavariables the scheme's pattern mentions (0 for Taut).
unsigned scheme_metavar_count(SchemeId id);

// Metavariable display names, in binding order: "a", "b", "c", "d".
std::string_view metavar_name(unsigned index);

// Pattern with metavariables encoded as reserved variable indices.  Not a
// well-formed object formula; only match/instantiate below treat it specially.
Formula scheme_pattern(SchemeId id);

// If f is an instance of the scheme, returns the metavariable bindings in
// binding order.  Matching is purely structural against the desugared pattern.
std::optional<std::vector<Formula>> match_scheme(SchemeId id, const Formula& f);

// Instance of the scheme under the given bindings.  Requires
// bindings.size() == scheme_metavar_count(id).
Formula instantiate_scheme(SchemeId id, const std::vector<Formula>& bindings);

}  // namespace strictmodal
