#include "strictmodal.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/formula.hpp"
#include "core/kripke.hpp"
#include "core/proof.hpp"
#include "core/search.hpp"
#include "core/semantics.hpp"

using namespace strictmodal;

struct sm_formula {
  Formula f;
};
struct sm_model {
  FiniteModalAlgebra a;
};
struct sm_proof {
  std::vector<Derivation> ds;
};
struct sm_kripke {
  KripkeModel k;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sm_status guarded(Fn&& fn) {
  try {
    fn();
    return SM_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return SM_ERR_PARSE;
  } catch (const LimitError& e) {
    g_last_error = e.what();
    return SM_ERR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SM_ERR_ARG;
  }
}

ModelClass resolve_class(const char* cls) {
  if (cls == nullptr || *cls == '\0') return ModelClass::Base;
  auto c = class_from_name(cls);
  if (!c) throw std::invalid_argument(std::string("unknown model class '") + cls + "'");
  return *c;
}

SystemId resolve_system(const char* system, const Derivation& d, std::size_t index) {
  if (system != nullptr && *system != '\0') {
    auto id = system_from_name(system);
    if (!id) throw std::invalid_argument(std::string("unknown system '") + system + "'");
    return *id;
  }
  if (d.declared_system) return *d.declared_system;
  throw std::invalid_argument("derivation " + std::to_string(index) +
                              " names no system and none was supplied");
}

void append_witness(std::ostringstream& out, const std::vector<unsigned>& witness) {
  out << " witness";
  for (unsigned w : witness) out << ' ' << w;
}

}  // namespace

extern "C" {

const char* sm_version(void) { return "0.1.0"; }

const char* sm_last_error(void) { return g_last_error.c_str(); }

void sm_string_free(char* s) { std::free(s); }

sm_status sm_formula_parse(const char* text, sm_formula** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new sm_formula{parse_formula(text)};
  });
}

sm_status sm_formula_print(const sm_formula* f, int resugar, char** out) {
  return guarded([&] {
    if (!f || !out) throw std::invalid_argument("null argument");
    *out = dup_string(print_formula(f->f, resugar != 0));
  });
}

void sm_formula_free(sm_formula* f) { delete f; }

sm_status sm_model_parse(const char* text, sm_model** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new sm_model{parse_model(text)};
  });
}

sm_status sm_model_builtin_countermodel(sm_model** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    *out = new sm_model{nonmonotone_countermodel()};
  });
}

sm_status sm_model_print(const sm_model* m, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    *out = dup_string(print_model(m->a));
  });
}

void sm_model_free(sm_model* m) { delete m; }

sm_status sm_model_check(const sm_model* m, const char* cls, int* all_pass, char** report) {
  return guarded([&] {
    if (!m || !all_pass || !report) throw std::invalid_argument("null argument");
    ModelClass c = resolve_class(cls);
    ConditionReport conditions = check_conditions(m->a);
    std::ostringstream out;
    bool pass = true;
    for (const ConditionResult& r : conditions.results) {
      out << "condition " << r.condition << (r.passed ? " pass" : " fail");
      if (!r.passed) {
        append_witness(out, r.witness);
        pass = false;
      }
      out << '\n';
    }
    if (c != ModelClass::Base) {
      ClassCheck extra = check_class(m->a, c);
      out << "class " << class_name(c) << (extra.passed ? " pass" : " fail");
      if (!extra.passed) {
        out << " condition " << extra.condition;
        append_witness(out, extra.witness);
        pass = false;
      }
      out << '\n';
    }
    *all_pass = pass ? 1 : 0;
    *report = dup_string(out.str());
  });
}

sm_status sm_model_monotonic(const sm_model* m, int* monotonic, unsigned* lower, unsigned* upper) {
  return guarded([&] {
    if (!m || !monotonic) throw std::invalid_argument("null argument");
    MonotonicityCheck r = is_monotonic(m->a);
    *monotonic = r.monotonic ? 1 : 0;
    if (lower) *lower = r.lower;
    if (upper) *upper = r.upper;
  });
}

sm_status sm_eval(const sm_model* m, const char* assign_text, const sm_formula* f,
                  unsigned* value, int* designated) {
  return guarded([&] {
    if (!m || !f || !value || !designated) throw std::invalid_argument("null argument");
    Assignment g = assign_text ? parse_assignment(assign_text) : Assignment{};
    // Reject out-of-range entries even for variables the formula never reads.
    for (const auto& [var, val] : g.values)
      if (val >= m->a.element_count())
        throw std::invalid_argument("assignment value " + std::to_string(val) + " for x" +
                                    std::to_string(var) + " is outside the algebra");
    unsigned v = evaluate(m->a, g, f->f);
    *value = v;
    *designated = m->a.designated(v) ? 1 : 0;
  });
}

sm_status sm_valid(const sm_model* m, const sm_formula* f, int* valid, char** witness) {
  return guarded([&] {
    if (!m || !f || !valid) throw std::invalid_argument("null argument");
    ValidityResult r = valid_in_model(m->a, f->f);
    *valid = r.valid ? 1 : 0;
    if (witness) *witness = r.valid ? nullptr : dup_string(print_assignment(r.witness));
  });
}

sm_status sm_consequence(const sm_model* m, const sm_formula* const* hyps, size_t hyp_count,
                         const sm_formula* f, int* holds, char** witness) {
  return guarded([&] {
    if (!m || !f || !holds || (hyp_count > 0 && !hyps))
      throw std::invalid_argument("null argument");
    std::vector<Formula> hs;
    hs.reserve(hyp_count);
    for (size_t i = 0; i < hyp_count; ++i) {
      if (!hyps[i]) throw std::invalid_argument("null hypothesis");
      hs.push_back(hyps[i]->f);
    }
    ValidityResult r = consequence_in_model(m->a, hs, f->f);
    *holds = r.valid ? 1 : 0;
    if (witness) *witness = r.valid ? nullptr : dup_string(print_assignment(r.witness));
  });
}

sm_status sm_enumerate_count(unsigned atoms, const char* cls, uint64_t* count) {
  return guarded([&] {
    if (!count) throw std::invalid_argument("null argument");
    *count = count_models(atoms, resolve_class(cls));
  });
}

sm_status sm_enumerate_emit(unsigned atoms, const char* cls, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    std::ostringstream text;
    bool first = true;
    enumerate_models(atoms, resolve_class(cls), [&](const FiniteModalAlgebra& a) {
      if (!first) text << "---\n";
      first = false;
      text << print_model(a);
      return true;
    });
    *out = dup_string(text.str());
  });
}

sm_status sm_find_countermodel(const sm_formula* f, unsigned max_atoms, const char* cls,
                               int* found, char** model_text, char** witness) {
  return guarded([&] {
    if (!f || !found) throw std::invalid_argument("null argument");
    auto r = find_countermodel(f->f, max_atoms, resolve_class(cls));
    *found = r ? 1 : 0;
    if (model_text) *model_text = r ? dup_string(print_model(r->algebra)) : nullptr;
    if (witness) *witness = r ? dup_string(print_assignment(r->assignment)) : nullptr;
  });
}

sm_status sm_proof_parse(const char* text, sm_proof** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new sm_proof{parse_derivation_stream(text)};
  });
}

sm_status sm_proof_print(const sm_proof* p, char** out) {
  return guarded([&] {
    if (!p || !out) throw std::invalid_argument("null argument");
    *out = dup_string(print_derivation_stream(p->ds));
  });
}

size_t sm_proof_count(const sm_proof* p) { return p ? p->ds.size() : 0; }

void sm_proof_free(sm_proof* p) { delete p; }

sm_status sm_proof_check(const sm_proof* p, const char* system, int* ok, char** report) {
  return guarded([&] {
    if (!p || !ok || !report) throw std::invalid_argument("null argument");
    std::ostringstream out;
    bool all_ok = true;
    for (std::size_t i = 0; i < p->ds.size(); ++i) {
      const Derivation& d = p->ds[i];
      SystemConfig cfg = SystemConfig::standard(resolve_system(system, d, i));
      CheckOutcome outcome = check_derivation(d, cfg, d.hypotheses());
      if (outcome.ok()) {
        out << "derivation " << i << ": ok (" << d.steps.size() << " steps)\n";
        out << "derivation " << i << ": conclusion " << print_formula(d.conclusion()) << '\n';
      } else {
        out << "derivation " << i << ": rejected: " << outcome.error->message << '\n';
        all_ok = false;
      }
    }
    *ok = all_ok ? 1 : 0;
    *report = dup_string(out.str());
  });
}

sm_status sm_proof_deduce(const sm_proof* p, const char* system, const sm_formula* discharge,
                          sm_proof** out) {
  return guarded([&] {
    if (!p || !discharge || !out) throw std::invalid_argument("null argument");
    if (p->ds.size() != 1)
      throw std::invalid_argument("deduce wants exactly one derivation");
    const Derivation& d = p->ds.front();
    SystemConfig cfg = SystemConfig::standard(resolve_system(system, d, 0));
    std::vector<Formula> ambient;
    for (const Formula& h : d.hypotheses())
      if (h != discharge->f) ambient.push_back(h);
    Derivation transformed = deduction_transform(d, cfg, ambient, discharge->f);
    *out = new sm_proof{{std::move(transformed)}};
  });
}

sm_status sm_fixture(const char* name, const sm_formula* const* args, size_t arg_count,
                     char** out) {
  return guarded([&] {
    if (!name || !out || (arg_count > 0 && !args)) throw std::invalid_argument("null argument");
    for (size_t i = 0; i < arg_count; ++i)
      if (!args[i]) throw std::invalid_argument("null fixture argument");
    std::string text;
    std::string which = name;
    if (which == "lemma2") {
      if (arg_count != 1) throw std::invalid_argument("lemma2 wants one formula");
      text = print_derivation(necessity_as_identity_proof(args[0]->f));
    } else if (which == "lemma3") {
      if (arg_count != 2) throw std::invalid_argument("lemma3 wants two formulas");
      text = print_derivation(distribution_proof(args[0]->f, args[1]->f));
    } else if (which == "s3-identity") {
      if (arg_count != 0) throw std::invalid_argument("s3-identity wants no formulas");
      text = print_derivation_stream(identity_congruence_proofs());
    } else {
      throw std::invalid_argument("unknown fixture '" + which + "'");
    }
    *out = dup_string(text);
  });
}

sm_status sm_kripke_parse(const char* text, sm_kripke** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    KripkeModel k = parse_kripke(text);
    k.validate();
    *out = new sm_kripke{std::move(k)};
  });
}

sm_status sm_kripke_print(const sm_kripke* k, char** out) {
  return guarded([&] {
    if (!k || !out) throw std::invalid_argument("null argument");
    *out = dup_string(print_kripke(k->k));
  });
}

void sm_kripke_free(sm_kripke* k) { delete k; }

sm_status sm_kripke_valid(const sm_kripke* k, const sm_formula* f, int* valid,
                          unsigned* witness_world) {
  return guarded([&] {
    if (!k || !f || !valid) throw std::invalid_argument("null argument");
    KripkeValidity r = check_kripke_validity(k->k, f->f);
    *valid = r.valid ? 1 : 0;
    if (witness_world) *witness_world = r.witness_world;
  });
}

sm_status sm_kripke_search(const sm_formula* f, unsigned max_worlds, int* found,
                           char** model_text) {
  return guarded([&] {
    if (!f || !found) throw std::invalid_argument("null argument");
    auto r = find_kripke_countermodel(f->f, max_worlds);
    *found = r ? 1 : 0;
    if (model_text) *model_text = r ? dup_string(print_kripke(*r)) : nullptr;
  });
}

} /* extern "C" */
