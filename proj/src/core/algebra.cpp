#include "core/algebra.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace strictmodal {

void FiniteModalAlgebra::validate(unsigned max_atoms) const {
  if (atom_count < 1 || atom_count > max_atoms)
    throw std::invalid_argument("atom count out of range");
  if (designated_atom >= atom_count) throw std::invalid_argument("designated atom out of range");
  if (box_table.size() != element_count())
    throw std::invalid_argument("box table size does not match element count");
  for (unsigned v : box_table)
    if (v >= element_count()) throw std::invalid_argument("box table entry out of range");
}

std::string_view class_name(ModelClass c) {
  switch (c) {
    case ModelClass::Base: return "base";
    case ModelClass::S3: return "s3";
    case ModelClass::S4: return "s4";
    case ModelClass::S5: return "s5";
  }
  throw std::logic_error("unknown class");
}

std::optional<ModelClass> class_from_name(std::string_view name) {
  if (name == "base") return ModelClass::Base;
  if (name == "s3") return ModelClass::S3;
  if (name == "s4") return ModelClass::S4;
  if (name == "s5") return ModelClass::S5;
  return std::nullopt;
}

bool ConditionReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

ConditionReport check_conditions(const FiniteModalAlgebra& M) {
  ConditionReport rep;
  for (unsigned i = 0; i < 6; ++i) rep.results[i].condition = i + 1;
  const unsigned count = M.element_count();

  // 1: bottom is not true, top is true.
  if (M.designated(M.bottom())) {
    rep.results[0] = {1, false, {M.bottom()}};
  } else if (!M.designated(M.top())) {
    rep.results[0] = {1, false, {M.top()}};
  }

  // 2: complement flips truth.
  for (unsigned m = 0; m < count && rep.results[1].passed; ++m)
    if (M.designated(M.complement(m)) == M.designated(m)) rep.results[1] = {2, false, {m}};

  // 3: implication is true exactly when the antecedent fails or the consequent holds.
  for (unsigned m = 0; m < count && rep.results[2].passed; ++m)
    for (unsigned mp = 0; mp < count; ++mp) {
      bool lhs = M.designated(M.implication(m, mp));
      bool rhs = !M.designated(m) || M.designated(mp);
      if (lhs != rhs) {
        rep.results[2] = {3, false, {m, mp}};
        break;
      }
    }

  // 4: box lands in the ultrafilter only at the top element.
  for (unsigned m = 0; m < count && rep.results[3].passed; ++m)
    if (M.designated(M.box(m)) != (m == M.top())) rep.results[3] = {4, false, {m}};

  // 5: box is deflationary.
  for (unsigned m = 0; m < count && rep.results[4].passed; ++m)
    if (!M.leq(M.box(m), m)) rep.results[4] = {5, false, {m}};

  // 6: boxed implications compose transitively.
  for (unsigned m = 0; m < count && rep.results[5].passed; ++m)
    for (unsigned mp = 0; mp < count && rep.results[5].passed; ++mp)
      for (unsigned mpp = 0; mpp < count; ++mpp) {
        unsigned lhs = M.meet(M.box(M.implication(m, mp)), M.box(M.implication(mp, mpp)));
        if (!M.leq(lhs, M.box(M.implication(m, mpp)))) {
          rep.results[5] = {6, false, {m, mp, mpp}};
          break;
        }
      }

  return rep;
}

namespace {

ClassCheck check_s3_extra(const FiniteModalAlgebra& M) {
  const unsigned count = M.element_count();
  for (unsigned m = 0; m < count; ++m)
    for (unsigned mp = 0; mp < count; ++mp)
      if (!M.leq(M.box(M.implication(m, mp)), M.box(M.implication(M.box(m), M.box(mp)))))
        return {false, "3'", {m, mp}};
  return {};
}

ClassCheck check_s4_extra(const FiniteModalAlgebra& M) {
  for (unsigned m = 0; m < M.element_count(); ++m)
    if ((M.box(m) == M.top()) != (m == M.top())) return {false, "4'", {m}};
  return {};
}

ClassCheck check_s5_extra(const FiniteModalAlgebra& M) {
  for (unsigned m = 0; m < M.element_count(); ++m)
    if ((M.box(m) != M.top()) != (M.complement(M.box(m)) == M.top()))
      return {false, "5'", {m}};
  return {};
}

}  // namespace

ClassCheck check_class(const FiniteModalAlgebra& m, ModelClass c) {
  if (c >= ModelClass::S3) {
    ClassCheck r = check_s3_extra(m);
    if (!r.passed) return r;
  }
  if (c >= ModelClass::S4) {
    ClassCheck r = check_s4_extra(m);
    if (!r.passed) return r;
  }
  if (c >= ModelClass::S5) {
    ClassCheck r = check_s5_extra(m);
    if (!r.passed) return r;
  }
  return {};
}

MonotonicityCheck is_monotonic(const FiniteModalAlgebra& M) {
  const unsigned count = M.element_count();
  for (unsigned m = 0; m < count; ++m)
    for (unsigned mp = 0; mp < count; ++mp)
      if (M.leq(m, mp) && !M.leq(M.box(m), M.box(mp))) return {false, m, mp};
  return {};
}

FiniteModalAlgebra nonmonotone_countermodel() {
  // Atoms: bit 0 designated, bit 1 the other.  Box fixes the non-designated
  // atom, shrinks the top element to the designated atom, kills the rest.
  return {2, 0, {0, 0, 2, 1}};
}

namespace {

unsigned parse_number(std::string_view tok, unsigned line_no, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what, line_no);
  return value;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

FiniteModalAlgebra parse_model(std::string_view text, unsigned max_atoms) {
  FiniteModalAlgebra m;
  bool have_atoms = false, have_designated = false;
  std::vector<char> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  unsigned line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks[0] == "atoms") {
      if (have_atoms) throw ParseError("duplicate atoms line", line_no);
      if (toks.size() != 2) throw ParseError("atoms line wants one number", line_no);
      m.atom_count = parse_number(toks[1], line_no, "atom count");
      if (m.atom_count < 1 || m.atom_count > max_atoms)
        throw ParseError("atom count out of range", line_no);
      m.box_table.assign(m.element_count(), 0);
      seen.assign(m.element_count(), 0);
      have_atoms = true;
    } else if (toks[0] == "designated") {
      if (!have_atoms) throw ParseError("designated before atoms", line_no);
      if (have_designated) throw ParseError("duplicate designated line", line_no);
      if (toks.size() != 2) throw ParseError("designated line wants one number", line_no);
      m.designated_atom = parse_number(toks[1], line_no, "designated atom");
      if (m.designated_atom >= m.atom_count)
        throw ParseError("designated atom out of range", line_no);
      have_designated = true;
    } else if (toks[0] == "box") {
      if (!have_atoms) throw ParseError("box before atoms", line_no);
      if (toks.size() != 3) throw ParseError("box line wants two numbers", line_no);
      unsigned elem = parse_number(toks[1], line_no, "box element");
      unsigned value = parse_number(toks[2], line_no, "box value");
      if (elem >= m.element_count()) throw ParseError("box element out of range", line_no);
      if (value >= m.element_count()) throw ParseError("box value out of range", line_no);
      if (seen[elem]) throw ParseError("duplicate box line", line_no);
      seen[elem] = 1;
      m.box_table[elem] = value;
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", line_no);
    }
  }
  if (!have_atoms) throw ParseError("missing atoms line", line_no);
  if (!have_designated) throw ParseError("missing designated line", line_no);
  for (unsigned e = 0; e < m.element_count(); ++e)
    if (!seen[e])
      throw ParseError("missing box line for element " + std::to_string(e), line_no);
  return m;
}

std::string print_model(const FiniteModalAlgebra& m) {
  std::string out = "atoms " + std::to_string(m.atom_count) + "\n";
  out += "designated " + std::to_string(m.designated_atom) + "\n";
  for (unsigned e = 0; e < m.element_count(); ++e)
    out += "box " + std::to_string(e) + " " + std::to_string(m.box_table[e]) + "\n";
  return out;
}

}  // namespace strictmodal
