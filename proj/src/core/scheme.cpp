#include "core/scheme.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>

namespace strictmodal {

namespace {

// Metavariables ride on variable indices far above the parser's cap, so a
// pattern can never collide with a parsed formula.
constexpr unsigned kMetaBase = 0xFF000000u;

Formula mv(unsigned i) { return Formula::var(kMetaBase + i); }

bool is_meta(const Formula& f, unsigned& out) {
  if (f.kind() == Formula::Kind::Var && f.var_index() >= kMetaBase) {
    out = f.var_index() - kMetaBase;
    return true;
  }
  return false;
}

bool match(const Formula& pat, const Formula& f, std::vector<std::optional<Formula>>& bind) {
  unsigned m;
  if (is_meta(pat, m)) {
    if (bind[m]) return *bind[m] == f;
    bind[m] = f;
    return true;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case Formula::Kind::Var:
      return pat.var_index() == f.var_index();
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
      return match(pat.child(), f.child(), bind);
    case Formula::Kind::Impl:
      return match(pat.lhs(), f.lhs(), bind) && match(pat.rhs(), f.rhs(), bind);
  }
  return false;
}

Formula subst_meta(const Formula& pat, const std::vector<Formula>& bindings) {
  unsigned m;
  if (is_meta(pat, m)) return bindings[m];
  switch (pat.kind()) {
    case Formula::Kind::Var:
      return pat;
    case Formula::Kind::Neg:
      return Formula::neg(subst_meta(pat.child(), bindings));
    case Formula::Kind::Box:
      return Formula::box(subst_meta(pat.child(), bindings));
    case Formula::Kind::Impl:
      return Formula::implies(subst_meta(pat.lhs(), bindings), subst_meta(pat.rhs(), bindings));
  }
  throw std::logic_error("unreachable");
}

struct SchemeInfo {
  SchemeId id;
  std::string_view name;
  unsigned metavars;
};

constexpr std::array<SchemeInfo, 9> kSchemes = {{
    {SchemeId::Taut, "taut", 0},
    {SchemeId::II, "ii", 1},
    {SchemeId::III, "iii", 3},
    {SchemeId::IV, "iv", 2},
    {SchemeId::V, "v", 4},
    {SchemeId::VI, "vi", 2},
    {SchemeId::S3Ax, "s3ax", 2},
    {SchemeId::S4Ax, "s4ax", 1},
    {SchemeId::S5Ax, "s5ax", 1},
}};

const SchemeInfo& info(SchemeId id) {
  for (const auto& s : kSchemes)
    if (s.id == id) return s;
  throw std::logic_error("unknown scheme");
}

}  // namespace

std::string_view scheme_name(SchemeId id) { return info(id).name; }

std::optional<SchemeId> scheme_from_name(std::string_view name) {
  for (const auto& s : kSchemes)
    if (s.name == name) return s.id;
  return std::nullopt;
}

unsigned scheme_metavar_count(SchemeId id) { return info(id).metavars; }

std::string_view metavar_name(unsigned index) {
  static constexpr std::array<std::string_view, 4> kNames = {"a", "b", "c", "d"};
  return kNames.at(index);
}

Formula scheme_pattern(SchemeId id) {
  const Formula a = mv(0), b = mv(1), c = mv(2), d = mv(3);
  switch (id) {
    case SchemeId::Taut:
      throw std::invalid_argument("taut has no pattern");
    case SchemeId::II:
      return Formula::implies(Formula::box(a), a);
    case SchemeId::III:
      return Formula::implies(
          Formula::conj(Formula::box(Formula::implies(a, b)), Formula::box(Formula::implies(b, c))),
          Formula::box(Formula::implies(a, c)));
    case SchemeId::IV:
      return Formula::implies(Formula::equiv(a, b), Formula::equiv(Formula::neg(a), Formula::neg(b)));
    case SchemeId::V:
      return Formula::implies(
          Formula::conj(Formula::equiv(a, b), Formula::equiv(c, d)),
          Formula::equiv(Formula::implies(a, c), Formula::implies(b, d)));
    case SchemeId::VI:
      return Formula::implies(Formula::equiv(a, b), Formula::equiv(Formula::box(a), Formula::box(b)));
    case SchemeId::S3Ax:
      return Formula::implies(Formula::box(Formula::implies(a, b)),
                              Formula::box(Formula::implies(Formula::box(a), Formula::box(b))));
    case SchemeId::S4Ax:
      return Formula::implies(Formula::box(a), Formula::box(Formula::box(a)));
    case SchemeId::S5Ax:
      return Formula::implies(Formula::neg(Formula::box(a)),
                              Formula::box(Formula::neg(Formula::box(a))));
  }
  throw std::logic_error("unreachable");
}

std::optional<std::vector<Formula>> match_scheme(SchemeId id, const Formula& f) {
  if (id == SchemeId::Taut) return std::nullopt;
  const unsigned n = scheme_metavar_count(id);
  std::vector<std::optional<Formula>> bind(n);
  if (!match(scheme_pattern(id), f, bind)) return std::nullopt;
  std::vector<Formula> out;
  out.reserve(n);
  for (auto& b : bind) out.push_back(*b);
  return out;
}

Formula instantiate_scheme(SchemeId id, const std::vector<Formula>& bindings) {
  if (id == SchemeId::Taut) throw std::invalid_argument("taut has no pattern");
  if (bindings.size() != scheme_metavar_count(id))
    throw std::invalid_argument("wrong number of scheme bindings");
  return subst_meta(scheme_pattern(id), bindings);
}

}  // namespace strictmodal
