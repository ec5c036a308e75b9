#include <cstdint>
#include <unordered_map>
#include <vector>

#include "core/errors.hpp"
#include "core/formula.hpp"

namespace strictmodal {

namespace {

// Skeleton node: atom leaves plus the two classical connectives.
struct Skel {
  enum class Kind : std::uint8_t { Atom, Neg, Impl } kind;
  unsigned atom = 0;
  int a = -1;
  int b = -1;
};

struct Abstraction {
  std::vector<Skel> nodes;
  unsigned atom_count = 0;
  std::unordered_map<Formula, unsigned, FormulaHash> atoms;

  int build(const Formula& f, unsigned max_atoms) {
    if (f.kind() == Formula::Kind::Var || f.kind() == Formula::Kind::Box) {
      auto [it, inserted] = atoms.try_emplace(f, atom_count);
      if (inserted) {
        if (++atom_count > max_atoms) throw LimitError("tautology check exceeds atom limit");
      }
      nodes.push_back({Skel::Kind::Atom, it->second, -1, -1});
      return static_cast<int>(nodes.size()) - 1;
    }
    if (f.kind() == Formula::Kind::Neg) {
      int a = build(f.child(), max_atoms);
      nodes.push_back({Skel::Kind::Neg, 0, a, -1});
      return static_cast<int>(nodes.size()) - 1;
    }
    int a = build(f.lhs(), max_atoms);
    int b = build(f.rhs(), max_atoms);
    nodes.push_back({Skel::Kind::Impl, 0, a, b});
    return static_cast<int>(nodes.size()) - 1;
  }
};

}  // namespace

bool is_tautological_form(const Formula& f, unsigned max_atoms) {
  Abstraction abs;
  int root = abs.build(f, max_atoms);
  std::vector<char> value(abs.nodes.size());
  const std::uint64_t assignments = 1ull << abs.atom_count;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    // Children precede parents in the node list, so one forward pass suffices.
    for (std::size_t i = 0; i < abs.nodes.size(); ++i) {
      const Skel& n = abs.nodes[i];
      switch (n.kind) {
        case Skel::Kind::Atom:
          value[i] = (mask >> n.atom) & 1;
          break;
        case Skel::Kind::Neg:
          value[i] = !value[n.a];
          break;
        case Skel::Kind::Impl:
          value[i] = !value[n.a] || value[n.b];
          break;
      }
    }
    if (!value[root]) return false;
  }
  return true;
}

}  // namespace strictmodal
