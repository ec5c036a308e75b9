#include "core/kripke.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace strictmodal {

bool KripkeModel::var_true_at(unsigned var, unsigned w) const {
  auto it = valuation.find(var);
  if (it == valuation.end()) return false;
  return (it->second >> w) & 1u;
}

bool KripkeModel::is_transitive() const {
  for (unsigned a = 0; a < world_count; ++a)
    for (unsigned b = 0; b < world_count; ++b)
      if ((access[a] >> b) & 1u)
        if ((access[b] & ~access[a]) != 0) return false;
  return true;
}

void KripkeModel::validate() const {
  if (world_count == 0 || world_count > kMaxWorlds)
    throw std::invalid_argument("world count out of range");
  const unsigned full = (1u << world_count) - 1u;
  if (access.size() != world_count)
    throw std::invalid_argument("one successor row per world required");
  for (unsigned i = 0; i < world_count; ++i) {
    if ((access[i] & ~full) != 0) throw std::invalid_argument("successor out of range");
    if (((access[i] >> i) & 1u) == 0)
      throw std::invalid_argument("world " + std::to_string(i) + " lacks its self edge");
  }
  if (normal == 0) throw std::invalid_argument("at least one normal world required");
  if ((normal & ~full) != 0) throw std::invalid_argument("normal world out of range");
  for (const auto& [var, mask] : valuation)
    if ((mask & ~full) != 0)
      throw std::invalid_argument("valuation of x" + std::to_string(var) + " out of range");
}

bool evaluate_at(const KripkeModel& k, unsigned world, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      return k.var_true_at(f.var_index(), world);
    case Formula::Kind::Neg:
      return !evaluate_at(k, world, f.child());
    case Formula::Kind::Impl:
      return !evaluate_at(k, world, f.lhs()) || evaluate_at(k, world, f.rhs());
    case Formula::Kind::Box: {
      if (!k.is_normal(world)) return false;
      Formula body = f.child();
      for (unsigned v = 0; v < k.world_count; ++v)
        if ((k.access[world] >> v) & 1u)
          if (!evaluate_at(k, v, body)) return false;
      return true;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

KripkeValidity check_kripke_validity(const KripkeModel& k, const Formula& f) {
  for (unsigned w = 0; w < k.world_count; ++w) {
    if (!k.is_normal(w)) continue;
    if (!evaluate_at(k, w, f)) return {false, w};
  }
  return {true, 0};
}

std::optional<KripkeModel> find_kripke_countermodel(const Formula& f, unsigned max_worlds) {
  if (max_worlds == 0 || max_worlds > kMaxWorlds)
    throw std::invalid_argument("world bound out of range");
  const std::vector<unsigned> vars = f.variables();
  if (vars.size() > kMaxKripkeVars) throw LimitError("variable count exceeds frame search cap");

  // Odometer over per-position candidate lists, position 0 most significant.
  auto advance = [](std::vector<std::size_t>& idx, const auto& limit) {
    std::size_t j = idx.size();
    while (j > 0) {
      --j;
      if (idx[j] + 1 < limit(j)) {
        ++idx[j];
        return true;
      }
      idx[j] = 0;
    }
    return false;
  };

  for (unsigned w = 1; w <= max_worlds; ++w) {
    const unsigned full = (1u << w) - 1u;
    std::vector<unsigned> normals;
    for (unsigned mask = 1; mask <= full; ++mask) normals.push_back(mask);
    std::stable_sort(normals.begin(), normals.end(), [](unsigned a, unsigned b) {
      return std::popcount(a) > std::popcount(b);
    });
    std::vector<std::vector<unsigned>> rows(w);
    for (unsigned i = 0; i < w; ++i)
      for (unsigned m = 0; m <= full; ++m)
        if ((m >> i) & 1u) rows[i].push_back(m);

    for (unsigned normal : normals) {
      KripkeModel k;
      k.world_count = w;
      k.normal = normal;
      k.access.assign(w, 0);
      std::vector<std::size_t> rel(w, 0);
      do {
        for (unsigned i = 0; i < w; ++i) k.access[i] = rows[i][rel[i]];
        std::vector<std::size_t> val(vars.size(), 0);
        do {
          for (std::size_t i = 0; i < vars.size(); ++i)
            k.valuation[vars[i]] = static_cast<unsigned>(val[i]);
          if (!check_kripke_validity(k, f).valid) return k;
        } while (advance(val, [full](std::size_t) { return std::size_t{full} + 1; }));
      } while (advance(rel, [&rows](std::size_t j) { return rows[j].size(); }));
    }
  }
  return std::nullopt;
}

namespace {

unsigned parse_number(const std::string& tok, const char* what, std::size_t line_no) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what, line_no);
  return value;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    toks.push_back(tok);
  }
  return toks;
}

}  // namespace

KripkeModel parse_kripke(std::string_view text) {
  KripkeModel k;
  bool have_worlds = false;
  bool have_normal = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "worlds") {
      if (have_worlds) throw ParseError("duplicate worlds line", line_no);
      if (toks.size() != 2) throw ParseError("worlds line wants one number", line_no);
      unsigned n = parse_number(toks[1], "world count", line_no);
      if (n == 0 || n > kMaxWorlds) throw ParseError("world count out of range", line_no);
      k.world_count = n;
      k.access.assign(n, 0);
      have_worlds = true;
    } else if (toks[0] == "normal") {
      if (!have_worlds) throw ParseError("normal before worlds", line_no);
      if (have_normal) throw ParseError("duplicate normal line", line_no);
      if (toks.size() < 2) throw ParseError("normal line wants at least one world", line_no);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        unsigned wld = parse_number(toks[i], "world", line_no);
        if (wld >= k.world_count) throw ParseError("normal world out of range", line_no);
        k.normal |= 1u << wld;
      }
      have_normal = true;
    } else if (toks[0] == "edge") {
      if (!have_worlds) throw ParseError("edge before worlds", line_no);
      if (toks.size() != 3) throw ParseError("edge line wants two worlds", line_no);
      unsigned from = parse_number(toks[1], "world", line_no);
      unsigned to = parse_number(toks[2], "world", line_no);
      if (from >= k.world_count || to >= k.world_count)
        throw ParseError("edge world out of range", line_no);
      if ((k.access[from] >> to) & 1u) throw ParseError("duplicate edge", line_no);
      k.access[from] |= 1u << to;
    } else if (toks[0] == "val") {
      if (!have_worlds) throw ParseError("val before worlds", line_no);
      if (toks.size() < 2) throw ParseError("val line wants a variable", line_no);
      const std::string& name = toks[1];
      if (name.size() < 2 || name[0] != 'x')
        throw ParseError("val variable must look like x0", line_no);
      unsigned var = parse_number(name.substr(1), "variable index", line_no);
      if (k.valuation.count(var)) throw ParseError("duplicate val line", line_no);
      unsigned mask = 0;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        unsigned wld = parse_number(toks[i], "world", line_no);
        if (wld >= k.world_count) throw ParseError("val world out of range", line_no);
        mask |= 1u << wld;
      }
      k.valuation[var] = mask;
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", line_no);
    }
  }
  if (!have_worlds) throw ParseError("missing worlds line", line_no);
  if (!have_normal) throw ParseError("missing normal line", line_no);
  for (unsigned i = 0; i < k.world_count; ++i)
    if (((k.access[i] >> i) & 1u) == 0)
      throw ParseError("world " + std::to_string(i) + " lacks its self edge", line_no);
  return k;
}

std::string print_kripke(const KripkeModel& k) {
  std::ostringstream out;
  out << "worlds " << k.world_count << '\n';
  out << "normal";
  for (unsigned w = 0; w < k.world_count; ++w)
    if (k.is_normal(w)) out << ' ' << w;
  out << '\n';
  for (unsigned from = 0; from < k.world_count; ++from)
    for (unsigned to = 0; to < k.world_count; ++to)
      if ((k.access[from] >> to) & 1u) out << "edge " << from << ' ' << to << '\n';
  for (const auto& [var, mask] : k.valuation) {
    out << "val x" << var;
    for (unsigned w = 0; w < k.world_count; ++w)
      if ((mask >> w) & 1u) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace strictmodal
