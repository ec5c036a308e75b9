// Acceptance gate: ten numbered end-to-end checks, one verdict line each.
// Exits nonzero when any of them fails.

#include <bit>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "core/builder.hpp"
#include "core/fixtures.hpp"
#include "core/kripke.hpp"
#include "core/search.hpp"
#include "oracle.hpp"
#include "random_derivations.hpp"

using namespace strictmodal;

namespace {

Formula F(const char* text) { return parse_formula(text); }

Formula monotonicity_scheme() { return F("[](x1 -> x2) -> []([]x1 -> []x2)"); }

Formula box_identity_scheme() { return F("(x0 == x1) -> ([]x0 == []x1)"); }

bool checks_in(const Derivation& d, SystemId sys) {
  return check_derivation(d, SystemConfig::standard(sys), d.hypotheses()).ok();
}

std::vector<FiniteModalAlgebra> small_base_models() {
  std::vector<FiniteModalAlgebra> out = collect_models(1, ModelClass::Base);
  std::vector<FiniteModalAlgebra> two = collect_models(2, ModelClass::Base);
  out.insert(out.end(), two.begin(), two.end());
  return out;
}

// k models drawn with replacement from the class at the given atom count,
// without materialising the whole census.
std::vector<FiniteModalAlgebra> sample_models(unsigned atoms, ModelClass c, unsigned k,
                                              std::uint64_t seed) {
  const std::uint64_t total = count_models(atoms, c);
  std::mt19937_64 rng(seed);
  std::multiset<std::uint64_t> wanted;
  for (unsigned i = 0; i < k; ++i) wanted.insert(rng() % total);
  std::vector<FiniteModalAlgebra> out;
  std::uint64_t index = 0;
  enumerate_models(atoms, c, [&](const FiniteModalAlgebra& m) {
    auto copies = wanted.count(index);
    for (std::size_t i = 0; i < copies; ++i) out.push_back(m);
    ++index;
    return index <= *wanted.rbegin();
  });
  return out;
}

// All assignments over the variables of vars, in enumeration order.
bool forall_assignments(const FiniteModalAlgebra& m, const std::vector<unsigned>& vars,
                        const std::function<bool(const Assignment&)>& body) {
  std::vector<unsigned> vals(vars.size(), 0);
  while (true) {
    Assignment g;
    for (std::size_t i = 0; i < vars.size(); ++i) g.set(vars[i], vals[i]);
    if (!body(g)) return false;
    std::size_t j = vals.size();
    while (j > 0 && vals[j - 1] + 1 == m.element_count()) vals[--j] = 0;
    if (j == 0) return true;
    ++vals[j - 1];
  }
}

bool criterion1() {
  FiniteModalAlgebra m = nonmonotone_countermodel();
  if (!(m == FiniteModalAlgebra{2, 0, {0, 0, 2, 1}})) return false;
  if (!check_conditions(m).all_passed()) return false;
  MonotonicityCheck mono = is_monotonic(m);
  if (mono.monotonic || mono.lower != 2 || mono.upper != 3) return false;
  Assignment g = parse_assignment("x1=2 x2=3");
  return !satisfies(m, g, monotonicity_scheme());
}

bool criterion2() {
  auto base = find_countermodel(monotonicity_scheme(), 2, ModelClass::Base);
  if (!base.has_value()) return false;
  auto s3 = find_countermodel(monotonicity_scheme(), 3, ModelClass::S3);
  return !s3.has_value();
}

bool criterion3() {
  if (!checks_in(necessity_as_identity_proof(F("x0")), SystemId::S1Sp)) return false;
  if (!checks_in(necessity_as_identity_proof(F("[]x1")), SystemId::S1Sp)) return false;
  if (!checks_in(distribution_proof(F("x0"), F("x1")), SystemId::S1Sp)) return false;
  if (!checks_in(distribution_proof(F("[]x0"), F("x0")), SystemId::S1Sp)) return false;

  DerivationBuilder b(SystemId::S1Sp);
  StepRef ax = b.axiom(SchemeId::VI, {F("x0"), F("x1")});
  b.an(ax);
  Derivation boxed_vi = std::move(b).take();
  if (check_derivation(boxed_vi, SystemConfig::standard(SystemId::S1Sp), {}).ok()) return false;
  if (!check_derivation(boxed_vi, SystemConfig::standard(SystemId::S1BoxSp), {}).ok()) return false;

  std::vector<Derivation> identity = identity_congruence_proofs();
  if (identity.size() != 6) return false;
  for (const Derivation& d : identity)
    if (!checks_in(d, SystemId::S3)) return false;
  return true;
}

bool criterion4() {
  std::vector<Derivation> corpus;
  corpus.push_back(necessity_as_identity_proof(F("x0")));
  corpus.push_back(necessity_as_identity_proof(F("[]x1")));
  corpus.push_back(distribution_proof(F("x0"), F("x1")));
  corpus.push_back(distribution_proof(F("[]x0"), F("x0")));
  for (Derivation& d : identity_congruence_proofs())
    if (check_derivation(d, SystemConfig::standard(SystemId::S1Sp), {}).ok())
      corpus.push_back(std::move(d));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Derivation d = testsupport::random_derivation(seed, false);
    if (!check_derivation(d, SystemConfig::standard(SystemId::S1Sp), {}).ok()) return false;
    corpus.push_back(std::move(d));
  }

  const std::vector<FiniteModalAlgebra> small = small_base_models();
  for (const Derivation& d : corpus)
    for (const FiniteModalAlgebra& m : small)
      if (!valid_in_model(m, d.conclusion()).valid) return false;

  const std::vector<FiniteModalAlgebra> big = sample_models(3, ModelClass::Base, 50, 2026);
  std::mt19937_64 rng(40426);
  for (const Derivation& d : corpus) {
    const Formula& concl = d.conclusion();
    const std::vector<unsigned> vars = concl.variables();
    for (const FiniteModalAlgebra& m : big) {
      for (unsigned k = 0; k < 100; ++k) {
        Assignment g;
        for (unsigned v : vars) g.set(v, static_cast<unsigned>(rng() % m.element_count()));
        if (!satisfies(m, g, concl)) return false;
      }
    }
  }
  return true;
}

bool criterion5() {
  std::mt19937_64 rng(777);
  std::vector<Formula> corpus;
  for (int i = 0; i < 100; ++i) corpus.push_back(testsupport::random_formula(rng, 3));
  std::vector<std::pair<Formula, Formula>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(corpus[i], corpus[i]);
  for (int i = 0; i < 100; ++i) pairs.emplace_back(corpus[i], corpus[(i + 37) % 100]);
  for (int i = 0; i < 100; ++i) pairs.emplace_back(corpus[i], Formula::neg(Formula::neg(corpus[i])));

  for (const FiniteModalAlgebra& m : small_base_models()) {
    for (const auto& [a, b] : pairs) {
      Formula eq = Formula::equiv(a, b);
      std::vector<unsigned> vars = eq.variables();
      bool ok = forall_assignments(m, vars, [&](const Assignment& g) {
        const bool same = evaluate(m, g, a) == evaluate(m, g, b);
        return satisfies(m, g, eq) == same;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool criterion6() {
  auto equations_hold = [](const FiniteModalAlgebra& m) {
    if (m.box(m.top()) != m.top()) return false;
    for (unsigned a = 0; a < m.element_count(); ++a)
      for (unsigned b = 0; b < m.element_count(); ++b)
        if (m.box(m.meet(a, b)) != m.meet(m.box(a), m.box(b))) return false;
    return true;
  };
  for (unsigned n : {1u, 2u})
    for (const FiniteModalAlgebra& m : collect_models(n, ModelClass::S4))
      if (!equations_hold(m)) return false;
  for (const FiniteModalAlgebra& m : sample_models(3, ModelClass::S4, 50, 515))
    if (!equations_hold(m)) return false;
  return true;
}

bool criterion7() {
  Formula scheme = monotonicity_scheme();
  for (const FiniteModalAlgebra& m : small_base_models())
    if (is_monotonic(m).monotonic != valid_in_model(m, scheme).valid) return false;
  return true;
}

bool criterion8() {
  auto cm = find_kripke_countermodel(box_identity_scheme(), 3);
  if (!cm.has_value()) return false;
  cm->validate();
  if (std::popcount(cm->normal) != 3) return false;
  if (cm->is_transitive()) return false;
  return !check_kripke_validity(*cm, box_identity_scheme()).valid;
}

bool criterion9() {
  const SystemConfig cfg = SystemConfig::standard(SystemId::S1Sp);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Derivation d = testsupport::random_derivation(seed, true);
    std::vector<Formula> hyps = d.hypotheses();
    if (hyps.size() != 1) return false;
    if (!check_derivation(d, cfg, hyps).ok()) return false;
    Formula expected = Formula::implies(hyps[0], d.conclusion());
    Derivation out = deduction_transform(d, cfg, {}, hyps[0]);
    if (!check_derivation(out, cfg, {}).ok()) return false;
    if (out.conclusion() != expected) return false;
  }
  return true;
}

bool criterion10() {
  if (count_models(1, ModelClass::Base) != 1) return false;
  const std::uint64_t pinned[] = {8, 6, 4, 2};
  const ModelClass classes[] = {ModelClass::Base, ModelClass::S3, ModelClass::S4, ModelClass::S5};
  for (int i = 0; i < 4; ++i) {
    if (count_models(2, classes[i]) != pinned[i]) return false;
    for (unsigned n : {1u, 2u})
      if (collect_models(n, classes[i]) != testsupport::oracle_models(n, classes[i])) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    bool (*run)();
  };
  const Entry entries[] = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    bool ok = false;
    try {
      ok = e.run();
    } catch (const std::exception& ex) {
      std::fprintf(stderr, "criterion %d threw: %s\n", e.number, ex.what());
    }
    std::printf("criterion %d: %s\n", e.number, ok ? "pass" : "fail");
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
