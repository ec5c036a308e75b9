#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "strictmodal.h"

namespace {

// Owns one sm_* handle or string for the duration of a test.
struct String {
  char* p = nullptr;
  ~String() { sm_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Fm {
  sm_formula* p = nullptr;
  ~Fm() { sm_formula_free(p); }
};

struct Mdl {
  sm_model* p = nullptr;
  ~Mdl() { sm_model_free(p); }
};

struct Prf {
  sm_proof* p = nullptr;
  ~Prf() { sm_proof_free(p); }
};

struct Krp {
  sm_kripke* p = nullptr;
  ~Krp() { sm_kripke_free(p); }
};

Fm parse(const char* text) {
  Fm f;
  REQUIRE(sm_formula_parse(text, &f.p) == SM_OK);
  return f;
}

Mdl builtin() {
  Mdl m;
  REQUIRE(sm_model_builtin_countermodel(&m.p) == SM_OK);
  return m;
}

const char* kBuiltinText =
    "atoms 2\n"
    "designated 0\n"
    "box 0 0\n"
    "box 1 0\n"
    "box 2 2\n"
    "box 3 1\n";

const char* kScheme = "[](x1 -> x2) -> []([]x1 -> []x2)";

}  // namespace

TEST_CASE("version string is present") {
  REQUIRE(sm_version() != nullptr);
  CHECK(std::string(sm_version()) == "0.1.0");
}

TEST_CASE("formula parse and print through the boundary") {
  Fm f = parse("x0 & ~x1");
  String core, sugar;
  REQUIRE(sm_formula_print(f.p, 0, &core.p) == SM_OK);
  CHECK(core.str() == "~(x0 -> ~~x1)");
  REQUIRE(sm_formula_print(f.p, 1, &sugar.p) == SM_OK);
  CHECK(sugar.str() == "(x0 & ~x1)");
}

TEST_CASE("parse failures set the thread error message") {
  sm_formula* f = nullptr;
  REQUIRE(sm_formula_parse("x0 ->", &f) == SM_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::strlen(sm_last_error()) > 0);
}

TEST_CASE("models roundtrip and the builtin is the nonmonotone one") {
  Mdl m = builtin();
  String text;
  REQUIRE(sm_model_print(m.p, &text.p) == SM_OK);
  CHECK(text.str() == kBuiltinText);

  Mdl back;
  REQUIRE(sm_model_parse(kBuiltinText, &back.p) == SM_OK);
  String again;
  REQUIRE(sm_model_print(back.p, &again.p) == SM_OK);
  CHECK(again.str() == text.str());

  sm_model* bad = nullptr;
  CHECK(sm_model_parse("atoms 2\n", &bad) == SM_ERR_PARSE);
}

TEST_CASE("condition report and monotonicity probe") {
  Mdl m = builtin();
  int all_pass = 0;
  String report;
  REQUIRE(sm_model_check(m.p, "base", &all_pass, &report.p) == SM_OK);
  CHECK(all_pass == 1);
  for (int i = 1; i <= 6; ++i) {
    std::string line = "condition " + std::to_string(i) + " pass";
    CHECK(report.str().find(line) != std::string::npos);
  }

  int s3_pass = 1;
  String s3_report;
  REQUIRE(sm_model_check(m.p, "s3", &s3_pass, &s3_report.p) == SM_OK);
  CHECK(s3_pass == 0);
  CHECK(s3_report.str().find("class s3 fail") != std::string::npos);

  int unused = 0;
  char* no_report = nullptr;
  CHECK(sm_model_check(m.p, "s9", &unused, &no_report) == SM_ERR_ARG);

  int monotonic = 1;
  unsigned lower = 0, upper = 0;
  REQUIRE(sm_model_monotonic(m.p, &monotonic, &lower, &upper) == SM_OK);
  CHECK(monotonic == 0);
  CHECK(lower == 2);
  CHECK(upper == 3);
}

TEST_CASE("evaluation against an assignment") {
  Mdl m = builtin();
  Fm f = parse("[]x2");
  unsigned value = 99;
  int designated = 0;
  REQUIRE(sm_eval(m.p, "x1=2 x2=3", f.p, &value, &designated) == SM_OK);
  CHECK(value == 1);
  CHECK(designated == 1);

  Fm g = parse("[]x1");
  REQUIRE(sm_eval(m.p, "x1=2 x2=3", g.p, &value, &designated) == SM_OK);
  CHECK(value == 2);
  CHECK(designated == 0);

  // A missing assignment text defaults every variable to bottom.
  Fm h = parse("~x7");
  REQUIRE(sm_eval(m.p, nullptr, h.p, &value, &designated) == SM_OK);
  CHECK(value == 3);

  CHECK(sm_eval(m.p, "x1=9", f.p, &value, &designated) == SM_ERR_ARG);
  CHECK(sm_eval(m.p, "bogus", f.p, &value, &designated) == SM_ERR_PARSE);
}

TEST_CASE("validity and consequence with witnesses") {
  Mdl m = builtin();
  Fm ok = parse("[]x0 -> x0");
  int valid = 0;
  String witness;
  REQUIRE(sm_valid(m.p, ok.p, &valid, &witness.p) == SM_OK);
  CHECK(valid == 1);
  CHECK(witness.p == nullptr);

  Fm bad = parse(kScheme);
  String falsifier;
  REQUIRE(sm_valid(m.p, bad.p, &valid, &falsifier.p) == SM_OK);
  CHECK(valid == 0);
  CHECK(falsifier.str() == "x1=2 x2=3");

  Fm h1 = parse("[](x1 -> x2)");
  Fm h2 = parse("[]x1");
  Fm goal = parse("[]x2");
  const sm_formula* hyps[] = {h1.p, h2.p};
  int holds = 0;
  String cw;
  REQUIRE(sm_consequence(m.p, hyps, 2, goal.p, &holds, &cw.p) == SM_OK);
  CHECK(holds == 1);
  CHECK(cw.p == nullptr);

  Fm x1 = parse("x1");
  Fm bx1 = parse("[]x1");
  const sm_formula* one[] = {x1.p};
  String cw2;
  REQUIRE(sm_consequence(m.p, one, 1, bx1.p, &holds, &cw2.p) == SM_OK);
  CHECK(holds == 0);
  CHECK(cw2.str() == "x1=1");
}

TEST_CASE("enumeration counts and emission") {
  uint64_t count = 0;
  REQUIRE(sm_enumerate_count(2, "base", &count) == SM_OK);
  CHECK(count == 8);
  REQUIRE(sm_enumerate_count(2, "s5", &count) == SM_OK);
  CHECK(count == 2);
  CHECK(sm_enumerate_count(0, "base", &count) == SM_ERR_ARG);
  CHECK(sm_enumerate_count(6, "base", &count) == SM_ERR_LIMIT);
  CHECK(sm_enumerate_count(2, "s6", &count) == SM_ERR_ARG);

  String text;
  REQUIRE(sm_enumerate_emit(1, "base", &text.p) == SM_OK);
  CHECK(text.str() ==
        "atoms 1\n"
        "designated 0\n"
        "box 0 0\n"
        "box 1 1\n");

  String s5;
  REQUIRE(sm_enumerate_emit(2, "s5", &s5.p) == SM_OK);
  CHECK(s5.str().find("---\n") != std::string::npos);
}

TEST_CASE("countermodel search lands on the builtin model") {
  Fm f = parse(kScheme);
  int found = 0;
  String model_text, witness;
  REQUIRE(sm_find_countermodel(f.p, 2, "base", &found, &model_text.p, &witness.p) == SM_OK);
  CHECK(found == 1);
  CHECK(model_text.str() == kBuiltinText);
  CHECK(witness.str() == "x1=2 x2=3");

  Fm taut = parse("x0 -> x0");
  int none = 1;
  String mt, wt;
  REQUIRE(sm_find_countermodel(taut.p, 2, "base", &none, &mt.p, &wt.p) == SM_OK);
  CHECK(none == 0);
  CHECK(mt.p == nullptr);
  CHECK(wt.p == nullptr);

  CHECK(sm_find_countermodel(f.p, 2, "s3", &found, &mt.p, &wt.p) == SM_OK);
  CHECK(found == 0);
}

TEST_CASE("proof objects parse, check and report") {
  const char* text =
      "system s1\n"
      "0 taut (x0 -> x0)\n"
      "1 an 0 : [](x0 -> x0)\n";
  Prf p;
  REQUIRE(sm_proof_parse(text, &p.p) == SM_OK);
  CHECK(sm_proof_count(p.p) == 1);

  int ok = 0;
  String report;
  REQUIRE(sm_proof_check(p.p, nullptr, &ok, &report.p) == SM_OK);
  CHECK(ok == 1);
  CHECK(report.str().find("derivation 0: ok (2 steps)") != std::string::npos);
  CHECK(report.str().find("conclusion [](x0 -> x0)") != std::string::npos);

  // The same derivation under an override that forbids nothing here.
  int ok2 = 0;
  String report2;
  REQUIRE(sm_proof_check(p.p, "s4", &ok2, &report2.p) == SM_OK);
  CHECK(ok2 == 1);

  sm_proof* bad = nullptr;
  CHECK(sm_proof_parse("0 zap T\n", &bad) == SM_ERR_PARSE);
}

TEST_CASE("checking without any system information is refused") {
  Prf p;
  REQUIRE(sm_proof_parse("0 taut (x0 -> x0)\n", &p.p) == SM_OK);
  int ok = 0;
  char* report = nullptr;
  CHECK(sm_proof_check(p.p, nullptr, &ok, &report) == SM_ERR_ARG);
  String rep;
  REQUIRE(sm_proof_check(p.p, "s1", &ok, &rep.p) == SM_OK);
  CHECK(ok == 1);
}

TEST_CASE("a failing derivation is reported, not errored") {
  const char* text =
      "system s1\n"
      "0 sp x9 ; x9 ; x0 ; x1 : ((x0 == x1) -> (x0 == x1))\n";
  Prf p;
  REQUIRE(sm_proof_parse(text, &p.p) == SM_OK);
  int ok = 1;
  String report;
  REQUIRE(sm_proof_check(p.p, nullptr, &ok, &report.p) == SM_OK);
  CHECK(ok == 0);
  CHECK(report.str().find("rejected") != std::string::npos);
  CHECK(report.str().find("step 0") != std::string::npos);
}

TEST_CASE("deduction through the boundary") {
  const char* text =
      "system s1\n"
      "0 hyp x0\n"
      "1 taut (x0 -> (x1 -> x0))\n"
      "2 mp 0 1 : (x1 -> x0)\n";
  Prf p;
  REQUIRE(sm_proof_parse(text, &p.p) == SM_OK);
  Fm discharge = parse("x0");
  Prf out;
  REQUIRE(sm_proof_deduce(p.p, nullptr, discharge.p, &out.p) == SM_OK);

  int ok = 0;
  String report;
  REQUIRE(sm_proof_check(out.p, nullptr, &ok, &report.p) == SM_OK);
  CHECK(ok == 1);
  CHECK(report.str().find("conclusion (x0 -> (x1 -> x0))") != std::string::npos);

  // Two derivations at once cannot be discharged.
  Prf two;
  REQUIRE(sm_proof_parse("system s1\n0 taut (x0 -> x0)\n---\nsystem s1\n0 taut (x1 -> x1)\n",
                         &two.p) == SM_OK);
  CHECK(sm_proof_count(two.p) == 2);
  sm_proof* no = nullptr;
  CHECK(sm_proof_deduce(two.p, nullptr, discharge.p, &no) == SM_ERR_ARG);

  // A derivation that does not check cannot be transformed either.
  Prf broken;
  REQUIRE(sm_proof_parse("system s1\n0 taut (x0 -> x1)\n", &broken.p) == SM_OK);
  CHECK(sm_proof_deduce(broken.p, nullptr, discharge.p, &no) == SM_ERR_ARG);
}

TEST_CASE("fixtures emit checkable derivation text") {
  Fm x0 = parse("x0");
  const sm_formula* one[] = {x0.p};
  String lemma2;
  REQUIRE(sm_fixture("lemma2", one, 1, &lemma2.p) == SM_OK);
  Prf p2;
  REQUIRE(sm_proof_parse(lemma2.str().c_str(), &p2.p) == SM_OK);
  int ok = 0;
  String rep2;
  REQUIRE(sm_proof_check(p2.p, nullptr, &ok, &rep2.p) == SM_OK);
  CHECK(ok == 1);

  Fm x1 = parse("x1");
  const sm_formula* two[] = {x0.p, x1.p};
  String lemma3;
  REQUIRE(sm_fixture("lemma3", two, 2, &lemma3.p) == SM_OK);
  Prf p3;
  REQUIRE(sm_proof_parse(lemma3.str().c_str(), &p3.p) == SM_OK);
  String rep3;
  REQUIRE(sm_proof_check(p3.p, nullptr, &ok, &rep3.p) == SM_OK);
  CHECK(ok == 1);
  CHECK(rep3.str().find("conclusion ([](x0 -> x1) -> ([]x0 -> []x1))") != std::string::npos);

  String identity;
  REQUIRE(sm_fixture("s3-identity", nullptr, 0, &identity.p) == SM_OK);
  Prf pi;
  REQUIRE(sm_proof_parse(identity.str().c_str(), &pi.p) == SM_OK);
  CHECK(sm_proof_count(pi.p) == 6);
  String repi;
  REQUIRE(sm_proof_check(pi.p, nullptr, &ok, &repi.p) == SM_OK);
  CHECK(ok == 1);

  char* no = nullptr;
  CHECK(sm_fixture("lemma2", nullptr, 0, &no) == SM_ERR_ARG);
  CHECK(sm_fixture("lemma9", one, 1, &no) == SM_ERR_ARG);
}

TEST_CASE("kripke models through the boundary") {
  const char* text =
      "worlds 2\n"
      "normal 0\n"
      "edge 0 0\n"
      "edge 0 1\n"
      "edge 1 1\n"
      "val x0 0\n";
  Krp k;
  REQUIRE(sm_kripke_parse(text, &k.p) == SM_OK);
  String out;
  REQUIRE(sm_kripke_print(k.p, &out.p) == SM_OK);
  CHECK(out.str() == text);

  Fm f = parse("[](x0 -> x0)");
  int valid = 0;
  unsigned world = 9;
  REQUIRE(sm_kripke_valid(k.p, f.p, &valid, &world) == SM_OK);
  CHECK(valid == 1);

  Fm g = parse("x1");
  REQUIRE(sm_kripke_valid(k.p, g.p, &valid, &world) == SM_OK);
  CHECK(valid == 0);
  CHECK(world == 0);

  sm_kripke* bad = nullptr;
  CHECK(sm_kripke_parse("worlds 0\n", &bad) == SM_ERR_PARSE);
}

TEST_CASE("kripke search finds the three-world refuter") {
  Fm f = parse("(x0 == x1) -> ([]x0 == []x1)");
  int found = 0;
  String model_text;
  REQUIRE(sm_kripke_search(f.p, 3, &found, &model_text.p) == SM_OK);
  CHECK(found == 1);
  CHECK(model_text.str() ==
        "worlds 3\n"
        "normal 0 1 2\n"
        "edge 0 0\n"
        "edge 1 0\n"
        "edge 1 1\n"
        "edge 2 1\n"
        "edge 2 2\n"
        "val x0 1\n"
        "val x1 0 1\n");

  int none = 1;
  String empty;
  REQUIRE(sm_kripke_search(f.p, 2, &none, &empty.p) == SM_OK);
  CHECK(none == 0);
  CHECK(empty.p == nullptr);

  Fm wide = parse("x0 & (x1 & (x2 & (x3 & x4)))");
  char* no = nullptr;
  CHECK(sm_kripke_search(wide.p, 3, &found, &no) == SM_ERR_LIMIT);
}
