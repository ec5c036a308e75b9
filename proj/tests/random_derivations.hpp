#pragma once

// Seeded generator of derivations that check in s1+sp.  Every move appends
// only steps the checker re-derives itself, so acceptance of the output is a
// real test of the checker, not of the generator.  mt19937_64 plus modulo
// keeps the stream identical across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "core/builder.hpp"

namespace testsupport {

inline strictmodal::Formula random_formula(std::mt19937_64& rng, unsigned depth) {
  using strictmodal::Formula;
  if (depth == 0) return Formula::var(static_cast<unsigned>(rng() % 3));
  switch (rng() % 4) {
    case 0:
      return Formula::var(static_cast<unsigned>(rng() % 3));
    case 1:
      return Formula::neg(random_formula(rng, depth - 1));
    case 2: {
      Formula l = random_formula(rng, depth - 1);
      Formula r = random_formula(rng, depth - 1);
      return Formula::implies(l, r);
    }
    default:
      return Formula::box(random_formula(rng, depth - 1));
  }
}

inline strictmodal::Derivation random_derivation(std::uint64_t seed, bool with_hypothesis) {
  using namespace strictmodal;
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::uint64_t n) { return static_cast<unsigned>(rng() % n); };
  auto rf = [&rng](unsigned depth) { return random_formula(rng, depth); };

  DerivationBuilder b(SystemId::S1Sp);
  std::vector<StepRef> pool;
  std::vector<StepRef> an_targets;  // taut steps and ax steps the an rule may box

  auto add_taut = [&] {
    Formula a = rf(1);
    Formula bb = rf(1);
    Formula c = rf(1);
    Formula t = [&]() -> Formula {
      switch (pick(6)) {
        case 0: return Formula::implies(a, a);
        case 1: return Formula::implies(a, Formula::implies(bb, a));
        case 2:
          return Formula::implies(
              Formula::implies(a, Formula::implies(bb, c)),
              Formula::implies(Formula::implies(a, bb), Formula::implies(a, c)));
        case 3: return Formula::implies(Formula::neg(Formula::neg(a)), a);
        case 4: return Formula::implies(a, Formula::implies(bb, Formula::conj(a, bb)));
        default: return Formula::implies(Formula::conj(a, bb), a);
      }
    }();
    StepRef s = b.taut(std::move(t));
    pool.push_back(s);
    an_targets.push_back(s);
  };

  if (with_hypothesis) pool.push_back(b.hyp(rf(2)));
  add_taut();

  const unsigned moves = 4 + pick(5);
  for (unsigned i = 0; i < moves; ++i) {
    switch (pick(6)) {
      case 0:
        add_taut();
        break;
      case 1: {
        static constexpr SchemeId kSchemes[] = {SchemeId::II, SchemeId::III, SchemeId::IV,
                                                SchemeId::V, SchemeId::VI};
        SchemeId s = kSchemes[pick(5)];
        std::vector<Formula> binding;
        for (unsigned k = 0; k < scheme_metavar_count(s); ++k) binding.push_back(rf(1));
        StepRef r = b.axiom(s, std::move(binding));
        pool.push_back(r);
        if (s == SchemeId::II || s == SchemeId::III) an_targets.push_back(r);
        break;
      }
      case 2: {
        if (an_targets.empty()) {
          add_taut();
          break;
        }
        pool.push_back(b.an(an_targets[pick(an_targets.size())]));
        break;
      }
      case 3: {
        Formula tmpl = rf(2);
        unsigned var = pick(3);
        Formula lhs = rf(1);
        Formula rhs = rf(1);
        pool.push_back(b.sp(std::move(tmpl), var, std::move(lhs), std::move(rhs)));
        break;
      }
      case 4: {
        Formula a = rf(1);
        StepRef t = b.taut(Formula::implies(a, a));
        an_targets.push_back(t);
        StepRef boxed = b.an(t);
        StepRef eq = b.conj_intro(boxed, boxed);  // a == a, premise-free
        pool.push_back(b.spse(rf(2), pick(3), eq));
        break;
      }
      default: {
        StepRef s = pool[pick(pool.size())];
        Formula fs = b.formula(s);
        Formula extra = rf(1);
        StepRef t = b.taut(Formula::implies(fs, Formula::implies(extra, fs)));
        pool.push_back(b.mp(s, t));
        break;
      }
    }
  }
  return std::move(b).take();
}

}  // namespace testsupport
