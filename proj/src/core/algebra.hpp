#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strictmodal {

inline constexpr unsigned kDefaultMaxAtoms = 5;

// Powerset Boolean algebra on atom_count atoms.  Elements are bitmasks in
// 0..2^n-1; the true propositions are exactly the elements containing the
// designated atom (a principal ultrafilter; on a finite Boolean algebra there
// are no others).  box_table lists the value of the box operation per element.
struct FiniteModalAlgebra {
  unsigned atom_count = 0;
  unsigned designated_atom = 0;
  std::vector<unsigned> box_table;

  unsigned element_count() const { return 1u << atom_count; }
  unsigned top() const { return element_count() - 1; }
  unsigned bottom() const { return 0; }
  unsigned complement(unsigned m) const { return top() & ~m; }
  unsigned implication(unsigned m, unsigned mp) const { return complement(m) | mp; }
  unsigned meet(unsigned m, unsigned mp) const { return m & mp; }
  unsigned join(unsigned m, unsigned mp) const { return m | mp; }
  bool leq(unsigned m, unsigned mp) const { return (m & mp) == m; }
  bool designated(unsigned m) const { return (m >> designated_atom) & 1; }
  unsigned box(unsigned m) const { return box_table[m]; }

  // Throws std::invalid_argument if the shape is wrong (atom count out of
  // 1..max_atoms, designated atom out of range, table size or entry range).
  void validate(unsigned max_atoms = kDefaultMaxAtoms) const;

  bool operator==(const FiniteModalAlgebra&) const = default;
};

// Cumulative model classes: each adds one condition on top of the previous.
enum class ModelClass { Base, S3, S4, S5 };

std::string_view class_name(ModelClass c);
std::optional<ModelClass> class_from_name(std::string_view name);

// Witness elements are listed in quantifier order (m, then m', then m'').
struct ConditionResult {
  unsigned condition = 0;
  bool passed = true;
  std::vector<unsigned> witness;
};

struct ConditionReport {
  std::array<ConditionResult, 6> results;
  bool all_passed() const;
};

// Evaluates the six defining conditions, recording for each the first
// violating element tuple in ascending lexicographic order.
ConditionReport check_conditions(const FiniteModalAlgebra& m);

struct ClassCheck {
  bool passed = true;
  std::string_view condition;  // "3'", "4'" or "5'" when failed
  std::vector<unsigned> witness;
};

// Checks the extra conditions of the class beyond the base six, cumulatively:
// S3 adds 3', S4 adds 4', S5 adds 5'.  First failing condition wins.
ClassCheck check_class(const FiniteModalAlgebra& m, ModelClass c);

struct MonotonicityCheck {
  bool monotonic = true;
  unsigned lower = 0;
  unsigned upper = 0;
};

// Box is monotone when m <= m' implies box(m) <= box(m').  On failure reports
// the first offending pair in (lower, upper) lexicographic order.
MonotonicityCheck is_monotonic(const FiniteModalAlgebra& m);

// Two-atom algebra whose box operation is not monotone, yet all six model
// conditions hold.  Demonstrates that monotonicity is not forced by them.
FiniteModalAlgebra nonmonotone_countermodel();

// Text format, line-based: `atoms <n>`, `designated <atom>`, one `box <m> <v>`
// per element.  `#` starts a comment; blank lines are ignored.
FiniteModalAlgebra parse_model(std::string_view text, unsigned max_atoms = kDefaultMaxAtoms);
std::string print_model(const FiniteModalAlgebra& m);

}  // namespace strictmodal
