#pragma once

// Formula trees over four connectives: variables, negation, implication and
// necessity. Everything else (T, F, &, <->, ==) is defined notation that
// desugars at construction time, so two formulas written differently but
// meaning the same thing compare equal structurally.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strictmodal {

class Formula {
public:
  enum class Kind : std::uint8_t { Var, Neg, Impl, Box };

  static Formula var(unsigned index);
  static Formula neg(Formula f);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula box(Formula f);

  // Defined notation. truth() is literally x0 -> x0.
  static Formula truth();
  static Formula falsity();                        // ~truth()
  static Formula conj(Formula lhs, Formula rhs);   // ~(a -> ~b)
  static Formula iff(Formula lhs, Formula rhs);    // (a -> b) & (b -> a)
  static Formula equiv(Formula lhs, Formula rhs);  // [](a -> b) & [](b -> a)

  Kind kind() const { return node_->kind; }
  unsigned var_index() const;  // Var only
  Formula child() const;       // Neg, Box
  Formula lhs() const;         // Impl
  Formula rhs() const;         // Impl

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::size_t hash() const { return node_->hash; }

  unsigned max_var_index() const;
  std::vector<unsigned> variables() const;  // distinct, ascending
  bool contains_var(unsigned index) const;

  // Destructuring of defined notation; succeeds only on the exact desugared
  // shape.
  std::optional<std::pair<Formula, Formula>> as_conj() const;
  std::optional<std::pair<Formula, Formula>> as_iff() const;
  std::optional<std::pair<Formula, Formula>> as_equiv() const;
  bool is_truth() const;
  bool is_falsity() const;

private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    unsigned var;
    NodePtr a;
    NodePtr b;
    std::size_t hash;
    unsigned max_var;
  };

  explicit Formula(NodePtr n) : node_(std::move(n)) {}
  static NodePtr make(Kind kind, unsigned var, NodePtr a, NodePtr b);
  static bool equal(const Node* x, const Node* y);

  NodePtr node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Replaces every occurrence of the variable in phi by psi.
Formula substitute(const Formula& phi, unsigned var, const Formula& psi);

// Concrete syntax. parse_formula throws ParseError with position info.
// print_formula emits fully parenthesised core syntax; with resugar set,
// T, F, &, <-> and == are reintroduced wherever a subtree matches the
// definition exactly. Both forms parse back to the identical tree.
Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f, bool resugar = false);

// Propositional skeleton test: maximal boxed subformulas and variables are
// abstracted to atoms (structurally identical subtrees share one atom) and
// the skeleton is evaluated under every classical assignment. Throws
// LimitError past max_atoms.
bool is_tautological_form(const Formula& f, unsigned max_atoms = 20);

}  // namespace strictmodal
