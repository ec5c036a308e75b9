// Command-line front end.  Talks to the core exclusively through the C API
// so the shared library surface stays honest.  Exit codes: 0 affirmative,
// 1 negative verdict (countermodel found, proof rejected, condition failed),
// 2 usage or format trouble.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strictmodal.h"

namespace {

template <typename T, void (*Free)(T*)>
struct Owned {
  T* p = nullptr;
  Owned() = default;
  ~Owned() {
    if (p) Free(p);
  }
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  T** out() { return &p; }
  T* get() const { return p; }
};

using FormulaPtr = Owned<sm_formula, sm_formula_free>;
using ModelPtr = Owned<sm_model, sm_model_free>;
using ProofPtr = Owned<sm_proof, sm_proof_free>;
using KripkePtr = Owned<sm_kripke, sm_kripke_free>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { sm_string_free(p); }
  char** out() { return &p; }
  const char* get() const { return p ? p : ""; }
};

int report_error() {
  std::cerr << "error: " << sm_last_error() << '\n';
  return 2;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int parse_formula_arg(const std::string& text, FormulaPtr& f) {
  if (sm_formula_parse(text.c_str(), f.out()) != SM_OK) return report_error();
  return 0;
}

// Resolves --model/--paper-countermodel; exactly one source is accepted.
int load_model(const std::string& path, bool paper, ModelPtr& m) {
  if (paper && !path.empty()) {
    std::cerr << "error: pick either a model file or --paper-countermodel\n";
    return 2;
  }
  if (paper) {
    if (sm_model_builtin_countermodel(m.out()) != SM_OK) return report_error();
    return 0;
  }
  if (path.empty()) {
    std::cerr << "error: a model is required (--model <file> or --paper-countermodel)\n";
    return 2;
  }
  std::string text;
  if (!read_file(path, text)) return 2;
  if (sm_model_parse(text.c_str(), m.out()) != SM_OK) return report_error();
  return 0;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

int run_parse(const std::string& formula) {
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  OwnedString core, sugar;
  if (sm_formula_print(f.get(), 0, core.out()) != SM_OK) return report_error();
  if (sm_formula_print(f.get(), 1, sugar.out()) != SM_OK) return report_error();
  std::cout << "core " << core.get() << '\n';
  std::cout << "sugar " << sugar.get() << '\n';
  return 0;
}

int run_eval(const std::string& formula, const std::string& model_path, bool paper,
             const std::vector<std::string>& assign) {
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  ModelPtr m;
  if (int rc = load_model(model_path, paper, m)) return rc;
  unsigned value = 0;
  int designated = 0;
  std::string assign_text = join(assign);
  if (sm_eval(m.get(), assign_text.c_str(), f.get(), &value, &designated) != SM_OK)
    return report_error();
  std::cout << "value " << value << '\n';
  std::cout << "designated " << (designated ? "yes" : "no") << '\n';
  return 0;
}

int run_check_model(const std::string& model_path, bool paper, const std::string& cls) {
  ModelPtr m;
  if (int rc = load_model(model_path, paper, m)) return rc;
  int all_pass = 0;
  OwnedString report;
  if (sm_model_check(m.get(), cls.c_str(), &all_pass, report.out()) != SM_OK)
    return report_error();
  std::cout << report.get();
  return all_pass ? 0 : 1;
}

int run_valid(const std::string& formula, const std::string& model_path, bool paper) {
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  ModelPtr m;
  if (int rc = load_model(model_path, paper, m)) return rc;
  int valid = 0;
  OwnedString witness;
  if (sm_valid(m.get(), f.get(), &valid, witness.out()) != SM_OK) return report_error();
  if (valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "not valid\n";
  std::cout << "witness " << witness.get() << '\n';
  return 1;
}

int run_consequence(const std::vector<std::string>& hyp_texts, const std::string& formula,
                    const std::string& model_path, bool paper) {
  std::vector<FormulaPtr> hyps(hyp_texts.size());
  std::vector<const sm_formula*> raw;
  for (std::size_t i = 0; i < hyp_texts.size(); ++i) {
    if (int rc = parse_formula_arg(hyp_texts[i], hyps[i])) return rc;
    raw.push_back(hyps[i].get());
  }
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  ModelPtr m;
  if (int rc = load_model(model_path, paper, m)) return rc;
  int holds = 0;
  OwnedString witness;
  if (sm_consequence(m.get(), raw.data(), raw.size(), f.get(), &holds, witness.out()) != SM_OK)
    return report_error();
  if (holds) {
    std::cout << "holds\n";
    return 0;
  }
  std::cout << "fails\n";
  std::cout << "witness " << witness.get() << '\n';
  return 1;
}

int run_find_countermodel(const std::string& formula, unsigned atoms, const std::string& cls) {
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  int found = 0;
  OwnedString model_text, witness;
  if (sm_find_countermodel(f.get(), atoms, cls.c_str(), &found, model_text.out(),
                           witness.out()) != SM_OK)
    return report_error();
  if (!found) {
    std::cout << "no countermodel\n";
    return 0;
  }
  std::cout << model_text.get();
  std::cout << "witness " << witness.get() << '\n';
  return 1;
}

int run_enumerate(unsigned atoms, const std::string& cls, bool emit) {
  if (emit) {
    OwnedString text;
    if (sm_enumerate_emit(atoms, cls.c_str(), text.out()) != SM_OK) return report_error();
    std::cout << text.get();
    return 0;
  }
  uint64_t count = 0;
  if (sm_enumerate_count(atoms, cls.c_str(), &count) != SM_OK) return report_error();
  std::cout << "count " << count << '\n';
  return 0;
}

int run_check_proof(const std::string& path, const std::string& system) {
  std::string text;
  if (!read_file(path, text)) return 2;
  ProofPtr p;
  if (sm_proof_parse(text.c_str(), p.out()) != SM_OK) return report_error();
  int ok = 0;
  OwnedString report;
  if (sm_proof_check(p.get(), system.empty() ? nullptr : system.c_str(), &ok, report.out()) !=
      SM_OK)
    return report_error();
  std::cout << report.get();
  return ok ? 0 : 1;
}

int run_deduce(const std::string& path, const std::string& system,
               const std::string& discharge) {
  std::string text;
  if (!read_file(path, text)) return 2;
  ProofPtr p;
  if (sm_proof_parse(text.c_str(), p.out()) != SM_OK) return report_error();
  FormulaPtr phi;
  if (int rc = parse_formula_arg(discharge, phi)) return rc;
  const char* sys = system.empty() ? nullptr : system.c_str();
  // A rejected input derivation is a negative verdict, not a usage error.
  int ok = 0;
  OwnedString report;
  if (sm_proof_check(p.get(), sys, &ok, report.out()) != SM_OK) return report_error();
  if (!ok) {
    std::cout << report.get();
    return 1;
  }
  ProofPtr transformed;
  if (sm_proof_deduce(p.get(), sys, phi.get(), transformed.out()) != SM_OK)
    return report_error();
  OwnedString out;
  if (sm_proof_print(transformed.get(), out.out()) != SM_OK) return report_error();
  std::cout << out.get();
  return 0;
}

int run_emit_fixture(const std::string& name, const std::vector<std::string>& arg_texts) {
  std::vector<FormulaPtr> args(arg_texts.size());
  std::vector<const sm_formula*> raw;
  for (std::size_t i = 0; i < arg_texts.size(); ++i) {
    if (int rc = parse_formula_arg(arg_texts[i], args[i])) return rc;
    raw.push_back(args[i].get());
  }
  OwnedString text;
  if (sm_fixture(name.c_str(), raw.data(), raw.size(), text.out()) != SM_OK)
    return report_error();
  std::cout << text.get();
  return 0;
}

int run_kripke_search(const std::string& formula, unsigned max_worlds) {
  FormulaPtr f;
  if (int rc = parse_formula_arg(formula, f)) return rc;
  int found = 0;
  OwnedString model_text;
  if (sm_kripke_search(f.get(), max_worlds, &found, model_text.out()) != SM_OK)
    return report_error();
  if (!found) {
    std::cout << "no countermodel\n";
    return 0;
  }
  std::cout << model_text.get();
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for strict-implication modal systems"};
  app.set_version_flag("--version", std::string("strictmodal ") + sm_version());
  app.require_subcommand(1);
  int rc = 0;

  std::string formula, model_path, proof_path, cls = "base", system, discharge, fixture_name;
  std::vector<std::string> assign, hyps, fixture_args;
  bool paper = false, emit = false, count = false;
  unsigned atoms = 0, max_worlds = 0;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print both renderings");
  parse_cmd->add_option("formula", formula)->required();
  parse_cmd->callback([&] { rc = run_parse(formula); });

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model");
  eval_cmd->add_option("formula", formula)->required();
  eval_cmd->add_option("--model", model_path, "model file");
  eval_cmd->add_flag("--paper-countermodel", paper, "use the built-in nonmonotone model");
  eval_cmd->add_option("--assign", assign, "assignment tokens x<i>=<elem>");
  eval_cmd->callback([&] { rc = run_eval(formula, model_path, paper, assign); });

  auto* check_model_cmd = app.add_subcommand("check-model", "test the defining conditions");
  check_model_cmd->add_option("file", model_path, "model file");
  check_model_cmd->add_flag("--paper-countermodel", paper,
                            "use the built-in nonmonotone model");
  check_model_cmd->add_option("--class", cls, "base, s3, s4 or s5");
  check_model_cmd->callback([&] { rc = run_check_model(model_path, paper, cls); });

  auto* valid_cmd = app.add_subcommand("valid", "test validity in one model");
  valid_cmd->add_option("formula", formula)->required();
  valid_cmd->add_option("--model", model_path, "model file");
  valid_cmd->add_flag("--paper-countermodel", paper, "use the built-in nonmonotone model");
  valid_cmd->callback([&] { rc = run_valid(formula, model_path, paper); });

  auto* consequence_cmd = app.add_subcommand("consequence", "test local consequence");
  // One formula per --hyp, so the trailing positional stays reachable.
  consequence_cmd->add_option("--hyp", hyps, "hypothesis formula")
      ->type_size(1)
      ->allow_extra_args(false);
  consequence_cmd->add_option("formula", formula)->required();
  consequence_cmd->add_option("--model", model_path, "model file");
  consequence_cmd->add_flag("--paper-countermodel", paper,
                            "use the built-in nonmonotone model");
  consequence_cmd->callback([&] { rc = run_consequence(hyps, formula, model_path, paper); });

  auto* find_cmd = app.add_subcommand("find-countermodel", "search models up to an atom bound");
  find_cmd->add_option("formula", formula)->required();
  find_cmd->add_option("--atoms", atoms, "largest atom count to try")->required();
  find_cmd->add_option("--class", cls, "base, s3, s4 or s5");
  find_cmd->callback([&] { rc = run_find_countermodel(formula, atoms, cls); });

  auto* enum_cmd = app.add_subcommand("enumerate", "walk all models at one atom count");
  enum_cmd->add_option("--atoms", atoms, "atom count")->required();
  enum_cmd->add_option("--class", cls, "base, s3, s4 or s5");
  enum_cmd->add_flag("--count", count, "print only the count (default)");
  enum_cmd->add_flag("--emit", emit, "print every model, --- separated");
  enum_cmd->callback([&] {
    if (count && emit) {
      std::cerr << "error: --count and --emit exclude each other\n";
      rc = 2;
      return;
    }
    rc = run_enumerate(atoms, cls, emit);
  });

  auto* check_proof_cmd = app.add_subcommand("check-proof", "verify a derivation file");
  check_proof_cmd->add_option("file", proof_path)->required();
  check_proof_cmd->add_option("--system", system, "s1, s1+sp, s1+boxsp, s3, s4 or s5");
  check_proof_cmd->callback([&] { rc = run_check_proof(proof_path, system); });

  auto* deduce_cmd = app.add_subcommand("deduce", "discharge a hypothesis");
  deduce_cmd->add_option("file", proof_path)->required();
  deduce_cmd->add_option("--system", system, "s1, s1+sp, s1+boxsp, s3, s4 or s5");
  deduce_cmd->add_option("--discharge", discharge, "hypothesis to discharge")->required();
  deduce_cmd->callback([&] { rc = run_deduce(proof_path, system, discharge); });

  auto* fixture_cmd = app.add_subcommand("emit-fixture", "print a ready-made derivation");
  fixture_cmd->add_option("name", fixture_name, "lemma2, lemma3 or s3-identity")->required();
  fixture_cmd->add_option("--args", fixture_args, "instantiation formulas");
  fixture_cmd->callback([&] { rc = run_emit_fixture(fixture_name, fixture_args); });

  auto* kripke_cmd = app.add_subcommand("kripke-search", "search relational countermodels");
  kripke_cmd->add_option("formula", formula)->required();
  kripke_cmd->add_option("--max-worlds", max_worlds, "largest world count to try")->required();
  kripke_cmd->callback([&] { rc = run_kripke_search(formula, max_worlds); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
