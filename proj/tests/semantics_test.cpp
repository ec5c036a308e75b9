#include "doctest.h"

#include "core/errors.hpp"
#include "core/formula.hpp"
#include "core/semantics.hpp"

using namespace strictmodal;

namespace {

const FiniteModalAlgebra kModel = nonmonotone_countermodel();

Assignment assign(std::string_view text) { return parse_assignment(text); }

}  // namespace

TEST_CASE("assignment text roundtrip") {
  Assignment g = assign("x2=3 x1=2");
  CHECK(g.value(1) == 2u);
  CHECK(g.value(2) == 3u);
  CHECK(g.value(7) == 0u);  // unmentioned variables sit at bottom
  CHECK(print_assignment(g) == "x1=2 x2=3");
  CHECK(parse_assignment(print_assignment(g)) == g);
  CHECK(print_assignment(Assignment{}) == "");
  CHECK(parse_assignment("") == Assignment{});
}

TEST_CASE("assignment parse errors") {
  CHECK_THROWS_AS(parse_assignment("x1"), ParseError);
  CHECK_THROWS_AS(parse_assignment("1=2"), ParseError);
  CHECK_THROWS_AS(parse_assignment("x1=2x"), ParseError);
  CHECK_THROWS_AS(parse_assignment("x=2"), ParseError);
}

TEST_CASE("evaluation is the homomorphic extension") {
  Assignment g = assign("x1=2 x2=3");
  CHECK(evaluate(kModel, g, parse_formula("x1")) == 2u);
  CHECK(evaluate(kModel, g, parse_formula("~x1")) == 1u);
  CHECK(evaluate(kModel, g, parse_formula("x1 -> x2")) == 3u);
  CHECK(evaluate(kModel, g, parse_formula("x2 -> x1")) == 2u);
  CHECK(evaluate(kModel, g, parse_formula("[]x2")) == 1u);
  CHECK(evaluate(kModel, g, parse_formula("[]x1")) == 2u);
  CHECK(evaluate(kModel, g, parse_formula("T")) == 3u);
  CHECK(evaluate(kModel, g, parse_formula("F")) == 0u);
  CHECK(evaluate(kModel, g, parse_formula("x1 & x2")) == 2u);
  CHECK(evaluate(kModel, g, parse_formula("[](x1 -> x2) -> []([]x1 -> []x2)")) == 2u);
  CHECK(satisfies(kModel, g, parse_formula("[]x2")));
  CHECK(!satisfies(kModel, g, parse_formula("[]x1")));
}

TEST_CASE("assignment values outside the algebra are rejected") {
  Assignment g = assign("x0=4");
  CHECK_THROWS_AS(evaluate(kModel, g, parse_formula("x0")), std::invalid_argument);
}

TEST_CASE("validity quantifies over assignments, least falsifier first") {
  CHECK(valid_in_model(kModel, parse_formula("x0 -> x0")).valid);
  CHECK(valid_in_model(kModel, parse_formula("T")).valid);
  CHECK(valid_in_model(kModel, parse_formula("[]x0 -> x0")).valid);

  // F mentions x0 once desugared, so the witness pins it.
  ValidityResult f = valid_in_model(kModel, parse_formula("F"));
  CHECK(!f.valid);
  CHECK(print_assignment(f.witness) == "x0=0");

  ValidityResult r =
      valid_in_model(kModel, parse_formula("[](x1 -> x2) -> []([]x1 -> []x2)"));
  CHECK(!r.valid);
  CHECK(print_assignment(r.witness) == "x1=2 x2=3");
}

TEST_CASE("validity respects the assignment cap") {
  Formula two_vars = parse_formula("x0 -> x1");
  CHECK_THROWS_AS(valid_in_model(kModel, two_vars, 8), LimitError);
  CHECK_NOTHROW(valid_in_model(kModel, two_vars, 16));
}

TEST_CASE("local consequence") {
  std::vector<Formula> hyps = {parse_formula("[](x1 -> x2)"), parse_formula("[]x1")};
  ValidityResult k = consequence_in_model(kModel, hyps, parse_formula("[]x2"));
  CHECK(k.valid);

  ValidityResult bad =
      consequence_in_model(kModel, {parse_formula("x1")}, parse_formula("[]x1"));
  CHECK(!bad.valid);
  CHECK(print_assignment(bad.witness) == "x1=1");

  // Hypotheses and conclusion contribute variables jointly.
  ValidityResult joint =
      consequence_in_model(kModel, {parse_formula("x1")}, parse_formula("x2"));
  CHECK(!joint.valid);
  CHECK(print_assignment(joint.witness) == "x1=1 x2=0");
}

TEST_CASE("interpretation bundles a model with an assignment") {
  Interpretation i{kModel, assign("x0=3")};
  CHECK(i.evaluate(parse_formula("[]x0")) == 1u);
  CHECK(i.satisfies(parse_formula("[]x0")));
}
