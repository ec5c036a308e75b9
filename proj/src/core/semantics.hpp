#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "core/algebra.hpp"
#include "core/formula.hpp"

namespace strictmodal {

inline constexpr std::uint64_t kDefaultAssignmentCap = 1u << 24;

// Variable-to-element map; unmentioned variables denote the bottom element.
struct Assignment {
  std::map<unsigned, unsigned> values;

  unsigned value(unsigned var) const {
    auto it = values.find(var);
    return it == values.end() ? 0 : it->second;
  }
  void set(unsigned var, unsigned value) { values[var] = value; }

  bool operator==(const Assignment&) const = default;
};

// Text form: `x<i>=<elem>` tokens separated by whitespace, e.g. "x1=2 x2=3".
Assignment parse_assignment(std::string_view text);
std::string print_assignment(const Assignment& g);

// Homomorphic extension of the assignment; values out of the algebra's range
// raise std::invalid_argument.  Shared subtrees are evaluated once.
unsigned evaluate(const FiniteModalAlgebra& m, const Assignment& g, const Formula& f);
bool satisfies(const FiniteModalAlgebra& m, const Assignment& g, const Formula& f);

struct Interpretation {
  FiniteModalAlgebra algebra;
  Assignment assignment;

  unsigned evaluate(const Formula& f) const { return strictmodal::evaluate(algebra, assignment, f); }
  bool satisfies(const Formula& f) const { return strictmodal::satisfies(algebra, assignment, f); }
};

struct ValidityResult {
  bool valid = true;
  Assignment witness;  // lexicographically least falsifier when not valid
};

// Quantifies over assignments to the variables occurring in f, in ascending
// variable order with value vectors compared lexicographically.  Throws
// LimitError when (2^n)^v exceeds the cap.
ValidityResult valid_in_model(const FiniteModalAlgebra& m, const Formula& f,
                              std::uint64_t cap = kDefaultAssignmentCap);

// True when every assignment satisfying all hypotheses satisfies f; the
// witness otherwise satisfies the hypotheses and falsifies f.
ValidityResult consequence_in_model(const FiniteModalAlgebra& m,
                                    const std::vector<Formula>& hypotheses, const Formula& f,
                                    std::uint64_t cap = kDefaultAssignmentCap);

}  // namespace strictmodal
