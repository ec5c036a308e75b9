#include "core/semantics.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>
#include <unordered_map>

#include "core/errors.hpp"

namespace strictmodal {

Assignment parse_assignment(std::string_view text) {
  Assignment g;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n') ++i;
    std::string_view tok = text.substr(start, i - start);
    auto eq = tok.find('=');
    if (tok.size() < 4 || tok[0] != 'x' || eq == std::string_view::npos)
      throw ParseError("bad assignment token '" + std::string(tok) + "'", 1, start + 1);
    std::string_view var_part = tok.substr(1, eq - 1);
    std::string_view val_part = tok.substr(eq + 1);
    unsigned var = 0, val = 0;
    auto [p1, e1] = std::from_chars(var_part.data(), var_part.data() + var_part.size(), var);
    auto [p2, e2] = std::from_chars(val_part.data(), val_part.data() + val_part.size(), val);
    if (e1 != std::errc{} || p1 != var_part.data() + var_part.size() || e2 != std::errc{} ||
        p2 != val_part.data() + val_part.size())
      throw ParseError("bad assignment token '" + std::string(tok) + "'", 1, start + 1);
    g.set(var, val);
  }
  return g;
}

std::string print_assignment(const Assignment& g) {
  std::string out;
  for (const auto& [var, val] : g.values) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(var) + '=' + std::to_string(val);
  }
  return out;
}

namespace {

struct Evaluator {
  const FiniteModalAlgebra& m;
  const Assignment& g;
  std::unordered_map<Formula, unsigned, FormulaHash> memo;

  unsigned eval(const Formula& f) {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    unsigned v = 0;
    switch (f.kind()) {
      case Formula::Kind::Var:
        v = g.value(f.var_index());
        if (v >= m.element_count()) throw std::invalid_argument("assignment value out of range");
        break;
      case Formula::Kind::Neg:
        v = m.complement(eval(f.child()));
        break;
      case Formula::Kind::Impl:
        v = m.implication(eval(f.lhs()), eval(f.rhs()));
        break;
      case Formula::Kind::Box:
        v = m.box(eval(f.child()));
        break;
    }
    memo.emplace(f, v);
    return v;
  }
};

// Odometer over value vectors for the given variables, first variable most
// significant, so successive states are lexicographically increasing.
struct AssignmentRange {
  std::vector<unsigned> vars;
  unsigned element_count;
  Assignment current;
  bool exhausted = false;

  AssignmentRange(std::vector<unsigned> v, unsigned elems, std::uint64_t cap)
      : vars(std::move(v)), element_count(elems) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      total *= element_count;
      if (total > cap) throw LimitError("assignment space exceeds cap");
    }
    for (unsigned var : vars) current.set(var, 0);
  }

  bool advance() {
    for (std::size_t i = vars.size(); i-- > 0;) {
      unsigned v = current.value(vars[i]) + 1;
      if (v < element_count) {
        current.set(vars[i], v);
        return true;
      }
      current.set(vars[i], 0);
    }
    exhausted = true;
    return false;
  }
};

}  // namespace

unsigned evaluate(const FiniteModalAlgebra& m, const Assignment& g, const Formula& f) {
  Evaluator ev{m, g, {}};
  return ev.eval(f);
}

bool satisfies(const FiniteModalAlgebra& m, const Assignment& g, const Formula& f) {
  return m.designated(evaluate(m, g, f));
}

ValidityResult valid_in_model(const FiniteModalAlgebra& m, const Formula& f, std::uint64_t cap) {
  AssignmentRange range(f.variables(), m.element_count(), cap);
  do {
    if (!satisfies(m, range.current, f)) return {false, range.current};
  } while (range.advance());
  return {};
}

ValidityResult consequence_in_model(const FiniteModalAlgebra& m,
                                    const std::vector<Formula>& hypotheses, const Formula& f,
                                    std::uint64_t cap) {
  std::vector<unsigned> vars = f.variables();
  for (const Formula& h : hypotheses) {
    std::vector<unsigned> hv = h.variables();
    std::vector<unsigned> merged;
    std::merge(vars.begin(), vars.end(), hv.begin(), hv.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    vars = std::move(merged);
  }
  AssignmentRange range(std::move(vars), m.element_count(), cap);
  do {
    bool hyps_hold = true;
    for (const Formula& h : hypotheses)
      if (!satisfies(m, range.current, h)) {
        hyps_hold = false;
        break;
      }
    if (hyps_hold && !satisfies(m, range.current, f)) return {false, range.current};
  } while (range.advance());
  return {};
}

}  // namespace strictmodal
