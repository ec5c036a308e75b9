#include "core/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "core/errors.hpp"

namespace strictmodal {

namespace {

struct Triple {
  unsigned premise_a;  // impl(m, m')
  unsigned premise_b;  // impl(m', m'')
  unsigned target;     // impl(m, m'')
};

// Triples of table indices touched by the composition law, grouped by the
// last index the table walk fills in.  Checking a group as soon as its last
// entry is assigned prunes dead branches without ever re-checking a triple.
std::vector<std::vector<Triple>> composition_groups(unsigned n) {
  const unsigned count = 1u << n;
  const unsigned top = count - 1;
  auto impl = [top](unsigned a, unsigned b) { return (~a & top) | b; };
  std::vector<std::vector<Triple>> groups(count);
  for (unsigned m = 0; m < count; ++m)
    for (unsigned m1 = 0; m1 < count; ++m1)
      for (unsigned m2 = 0; m2 < count; ++m2) {
        Triple t{impl(m, m1), impl(m1, m2), impl(m, m2)};
        unsigned last = std::max({t.premise_a, t.premise_b, t.target});
        groups[last].push_back(t);
      }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), [](const Triple& a, const Triple& b) {
      return std::tie(a.premise_a, a.premise_b, a.target) <
             std::tie(b.premise_a, b.premise_b, b.target);
    });
    g.erase(std::unique(g.begin(), g.end(),
                        [](const Triple& a, const Triple& b) {
                          return a.premise_a == b.premise_a && a.premise_b == b.premise_b &&
                                 a.target == b.target;
                        }),
            g.end());
  }
  return groups;
}

struct Enumerator {
  unsigned atom_count;
  ModelClass cls;
  const std::function<bool(const FiniteModalAlgebra&)>& visit;
  std::vector<std::vector<Triple>> groups;
  FiniteModalAlgebra work;
  std::uint64_t visited = 0;
  bool stopped = false;

  Enumerator(unsigned n, ModelClass c, const std::function<bool(const FiniteModalAlgebra&)>& v)
      : atom_count(n), cls(c), visit(v), groups(composition_groups(n)) {
    work.atom_count = n;
    work.box_table.assign(work.element_count(), 0);
  }

  bool entry_admissible(unsigned m, unsigned v) const {
    const unsigned top = work.top();
    if (m == top) {
      if (!work.designated(v)) return false;
    } else if (work.designated(v)) {
      return false;
    }
    if ((v & m) != v) return false;
    if (cls >= ModelClass::S4 && (m == top) != (v == top)) return false;
    if (cls >= ModelClass::S5 && v != top && v != 0) return false;
    for (const Triple& t : groups[m]) {
      unsigned boxed_a = t.premise_a == m ? v : work.box_table[t.premise_a];
      unsigned boxed_b = t.premise_b == m ? v : work.box_table[t.premise_b];
      unsigned boxed_t = t.target == m ? v : work.box_table[t.target];
      if (((boxed_a & boxed_b) & ~boxed_t) != 0) return false;
    }
    return true;
  }

  void fill(unsigned m) {
    if (stopped) return;
    if (m == work.element_count()) {
      if (cls != ModelClass::Base && !check_class(work, cls).passed) return;
      ++visited;
      if (!visit(work)) stopped = true;
      return;
    }
    for (unsigned v = 0; v < work.element_count(); ++v) {
      if (!entry_admissible(m, v)) continue;
      work.box_table[m] = v;
      fill(m + 1);
      if (stopped) return;
    }
  }

  std::uint64_t run() {
    for (unsigned d = 0; d < atom_count && !stopped; ++d) {
      work.designated_atom = d;
      fill(0);
    }
    return visited;
  }
};

}  // namespace

std::uint64_t enumerate_models(unsigned atom_count, ModelClass c,
                               const std::function<bool(const FiniteModalAlgebra&)>& visit,
                               unsigned max_atoms) {
  if (atom_count == 0) throw std::invalid_argument("atom count must be positive");
  if (atom_count > max_atoms) throw LimitError("atom count exceeds cap");
  Enumerator e(atom_count, c, visit);
  return e.run();
}

std::uint64_t count_models(unsigned atom_count, ModelClass c, unsigned max_atoms) {
  return enumerate_models(atom_count, c, [](const FiniteModalAlgebra&) { return true; }, max_atoms);
}

std::vector<FiniteModalAlgebra> collect_models(unsigned atom_count, ModelClass c,
                                               unsigned max_atoms) {
  std::vector<FiniteModalAlgebra> out;
  enumerate_models(atom_count, c,
                   [&out](const FiniteModalAlgebra& a) {
                     out.push_back(a);
                     return true;
                   },
                   max_atoms);
  return out;
}

std::optional<Countermodel> find_countermodel(const Formula& f, unsigned max_atoms, ModelClass c,
                                              std::uint64_t assignment_cap) {
  if (max_atoms > kDefaultMaxAtoms)
    throw LimitError("atom bound " + std::to_string(max_atoms) + " exceeds the cap of " +
                     std::to_string(kDefaultMaxAtoms));
  std::optional<Countermodel> found;
  for (unsigned n = 1; n <= max_atoms && !found; ++n) {
    enumerate_models(n, c,
                     [&](const FiniteModalAlgebra& a) {
                       ValidityResult r = valid_in_model(a, f, assignment_cap);
                       if (r.valid) return true;
                       found = Countermodel{a, r.witness};
                       return false;
                     },
                     max_atoms);
  }
  return found;
}

SchemeCensus classify_scheme(const Formula& f, unsigned atom_count, ModelClass c,
                             unsigned max_atoms, std::uint64_t assignment_cap) {
  SchemeCensus census;
  enumerate_models(atom_count, c,
                   [&](const FiniteModalAlgebra& a) {
                     ValidityResult r = valid_in_model(a, f, assignment_cap);
                     ++census.total;
                     if (r.valid) {
                       ++census.validating;
                     } else {
                       ++census.refuting;
                       if (!census.first_refuting)
                         census.first_refuting = Countermodel{a, r.witness};
                     }
                     return true;
                   },
                   max_atoms);
  return census;
}

}  // namespace strictmodal
