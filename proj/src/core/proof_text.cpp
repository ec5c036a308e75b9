#include <charconv>
#include <sstream>

#include "core/errors.hpp"
#include "core/proof.hpp"

namespace strictmodal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct LineParser {
  std::string_view rest;
  unsigned line_no;

  std::string_view next_token() {
    rest = trim(rest);
    std::size_t end = 0;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    std::string_view tok = rest.substr(0, end);
    rest.remove_prefix(end);
    return tok;
  }

  std::size_t next_number(const char* what) {
    std::string_view tok = next_token();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(std::string("bad ") + what, line_no);
    return value;
  }

  Formula formula(std::string_view text) const {
    try {
      return parse_formula(trim(text));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad formula: ") + e.what(), line_no);
    }
  }

  // Splits "args : formula" at the colon, which cannot occur inside formulas.
  std::pair<std::string_view, std::string_view> split_colon() const {
    auto pos = rest.find(':');
    if (pos == std::string_view::npos) throw ParseError("missing ':' before conclusion", line_no);
    return {trim(rest.substr(0, pos)), trim(rest.substr(pos + 1))};
  }
};

unsigned parse_var_token(std::string_view tok, unsigned line_no) {
  tok = trim(tok);
  if (tok.size() < 2 || tok[0] != 'x') throw ParseError("bad variable token", line_no);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("bad variable token", line_no);
  return v;
}

std::vector<std::string_view> split_semicolons(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(';', start);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(s.substr(start)));
      return parts;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

Step parse_step_line(LineParser& lp, std::size_t expected_index) {
  std::size_t index = lp.next_number("step index");
  if (index != expected_index)
    throw ParseError("step index " + std::to_string(index) + " out of sequence", lp.line_no);
  std::string_view kind = lp.next_token();

  if (kind == "hyp") return {lp.formula(lp.rest), HypJust{}};
  if (kind == "taut") return {lp.formula(lp.rest), TautJust{}};

  if (kind == "ax") {
    std::string_view name = lp.next_token();
    auto scheme = scheme_from_name(name);
    if (!scheme || *scheme == SchemeId::Taut)
      throw ParseError("unknown axiom scheme '" + std::string(name) + "'", lp.line_no);
    auto [args, concl] = lp.split_colon();
    unsigned count = scheme_metavar_count(*scheme);
    std::vector<Formula> binding;
    std::size_t search_from = 0;
    std::vector<std::size_t> marker_pos(count);
    for (unsigned k = 0; k < count; ++k) {
      std::string marker = std::string(metavar_name(k)) + "=";
      std::size_t pos = args.find(marker, search_from);
      if (pos == std::string_view::npos)
        throw ParseError("missing binding for metavariable " + std::string(metavar_name(k)),
                         lp.line_no);
      marker_pos[k] = pos;
      search_from = pos + marker.size();
    }
    for (unsigned k = 0; k < count; ++k) {
      std::size_t value_start = marker_pos[k] + 2;
      std::size_t value_end = k + 1 < count ? marker_pos[k + 1] : args.size();
      binding.push_back(lp.formula(args.substr(value_start, value_end - value_start)));
    }
    return {lp.formula(concl), AxiomJust{*scheme, std::move(binding)}};
  }

  if (kind == "an") {
    auto [args, concl] = lp.split_colon();
    LineParser inner{args, lp.line_no};
    std::size_t ref = inner.next_number("step reference");
    if (!trim(inner.rest).empty()) throw ParseError("trailing tokens after reference", lp.line_no);
    return {lp.formula(concl), AnJust{ref}};
  }

  if (kind == "sp" || kind == "spse") {
    auto [args, concl] = lp.split_colon();
    auto parts = split_semicolons(args);
    if (kind == "sp") {
      if (parts.size() != 4) throw ParseError("sp wants template ; var ; psi ; psi'", lp.line_no);
      return {lp.formula(concl),
              SpJust{lp.formula(parts[0]), parse_var_token(parts[1], lp.line_no),
                     lp.formula(parts[2]), lp.formula(parts[3])}};
    }
    if (parts.size() != 3) throw ParseError("spse wants template ; var ; ref", lp.line_no);
    LineParser inner{parts[2], lp.line_no};
    std::size_t ref = inner.next_number("step reference");
    if (!trim(inner.rest).empty()) throw ParseError("trailing tokens after reference", lp.line_no);
    return {lp.formula(concl),
            SpseJust{lp.formula(parts[0]), parse_var_token(parts[1], lp.line_no), ref}};
  }

  if (kind == "mp") {
    auto [args, concl] = lp.split_colon();
    LineParser inner{args, lp.line_no};
    std::size_t ante = inner.next_number("antecedent reference");
    std::size_t impl = inner.next_number("implication reference");
    if (!trim(inner.rest).empty()) throw ParseError("trailing tokens after references", lp.line_no);
    return {lp.formula(concl), MpJust{ante, impl}};
  }

  throw ParseError("unknown step kind '" + std::string(kind) + "'", lp.line_no);
}

std::vector<std::pair<unsigned, std::string>> logical_lines(std::string_view text) {
  std::vector<std::pair<unsigned, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  unsigned line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    out.emplace_back(line_no, std::string(trim(raw)));
  }
  return out;
}

Derivation parse_block(const std::vector<std::pair<unsigned, std::string>>& lines) {
  Derivation d;
  std::size_t i = 0;
  if (i < lines.size() && lines[i].second.rfind("system", 0) == 0) {
    LineParser lp{lines[i].second, lines[i].first};
    lp.next_token();
    std::string_view name = trim(lp.rest);
    auto id = system_from_name(name);
    if (!id) throw ParseError("unknown system '" + std::string(name) + "'", lines[i].first);
    d.declared_system = *id;
    ++i;
  }
  for (; i < lines.size(); ++i) {
    LineParser lp{lines[i].second, lines[i].first};
    d.steps.push_back(parse_step_line(lp, d.steps.size()));
  }
  return d;
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  return parse_block(logical_lines(text));
}

std::vector<Derivation> parse_derivation_stream(std::string_view text) {
  std::vector<Derivation> out;
  std::vector<std::pair<unsigned, std::string>> block;
  for (auto& line : logical_lines(text)) {
    if (line.second == "---") {
      out.push_back(parse_block(block));
      block.clear();
    } else {
      block.push_back(std::move(line));
    }
  }
  if (!block.empty() || out.empty()) out.push_back(parse_block(block));
  return out;
}

std::string print_derivation(const Derivation& d) {
  std::string out;
  if (d.declared_system) {
    out += "system ";
    out += system_name(*d.declared_system);
    out += '\n';
  }
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& s = d.steps[i];
    out += std::to_string(i);
    if (std::holds_alternative<HypJust>(s.just)) {
      out += " hyp " + print_formula(s.formula);
    } else if (std::holds_alternative<TautJust>(s.just)) {
      out += " taut " + print_formula(s.formula);
    } else if (const auto* ax = std::get_if<AxiomJust>(&s.just)) {
      out += " ax ";
      out += scheme_name(ax->scheme);
      for (unsigned k = 0; k < ax->binding.size(); ++k) {
        out += ' ';
        out += metavar_name(k);
        out += '=' + print_formula(ax->binding[k]);
      }
      out += " : " + print_formula(s.formula);
    } else if (const auto* an = std::get_if<AnJust>(&s.just)) {
      out += " an " + std::to_string(an->ref) + " : " + print_formula(s.formula);
    } else if (const auto* sp = std::get_if<SpJust>(&s.just)) {
      out += " sp " + print_formula(sp->tmpl) + " ; x" + std::to_string(sp->var) + " ; " +
             print_formula(sp->lhs) + " ; " + print_formula(sp->rhs) + " : " +
             print_formula(s.formula);
    } else if (const auto* se = std::get_if<SpseJust>(&s.just)) {
      out += " spse " + print_formula(se->tmpl) + " ; x" + std::to_string(se->var) + " ; " +
             std::to_string(se->ref) + " : " + print_formula(s.formula);
    } else {
      const auto& mp = std::get<MpJust>(s.just);
      out += " mp " + std::to_string(mp.antecedent) + " " + std::to_string(mp.implication) +
             " : " + print_formula(s.formula);
    }
    out += '\n';
  }
  return out;
}

std::string print_derivation_stream(const std::vector<Derivation>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) out += "---\n";
    out += print_derivation(ds[i]);
  }
  return out;
}

}  // namespace strictmodal
