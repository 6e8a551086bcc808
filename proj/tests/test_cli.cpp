#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hyperint/cli.hpp"
#include "hyperint/parse.hpp"
#include "random_inputs.hpp"

using namespace hyperint;

TEST_CASE("parse_expr") {
  CHECK(parse_rfunc("x1*x2 + 1/2") == RFunc(parse_poly("2*x1*x2+1"), MPoly(2)));
  const OneForm w = fixtures::form("form(x2, x1)", 2);
  CHECK(w == d(parse_rfunc("x1*x2"), 2));
  const OneForm e2 = fixtures::form("form(2*(7*x1-2)/(x1^2-2), -16/(x2^2-2))", 2);
  CHECK(e2 == fixtures::form(fixtures::example2(4), 2));
  CHECK_THROWS_AS(parse_rfunc("x1 + * 2"), SyntaxError);
  CHECK_THROWS_AS(parse_rfunc("x1 + y"), UnknownVariable);
  ParseContext two(2);
  CHECK_THROWS_AS(parse_rfunc("x3", two), UnknownVariable);
  try {
    parse_rfunc("(x1 + 2");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 7);
  }
}

TEST_CASE("print-parse round trip") {
  std::mt19937 rng(99);
  for (int it = 0; it < 60; ++it) {
    const RFunc f = randgen::rfunc(rng, 3, 3);
    CHECK(parse_rfunc(f.str()) == f);
  }
  for (const char* s : {"-1/(x1*x2)", "1/(2*(z-1))", "x1^2/(3*x2)", "-(x1+1)/x2^3"}) {
    const RFunc f = parse_rfunc(s);
    CHECK(parse_rfunc(f.str()) == f);
  }
  ParseContext ctx(2);
  ctx.declare("with s: t^2-2");
  const RFunc a = parse_rfunc("s*x1 + 1/(x2 - s)", ctx);
  CHECK(parse_rfunc(a.str(), ctx) == a);
  const OneForm w = fixtures::form(fixtures::kExample4Half, 2);
  CHECK(fixtures::form(w.str(), 2) == w);
}

TEST_CASE("run") {
  cli::Request req;
  req.command = "rational-integrate";
  req.inputs = {"form(0,0)"};
  const auto r = cli::run(req);
  CHECK(r.certified);
  CHECK(r.vars == 2);
  CHECK(r.result.at("F0") == "0");

  cli::Request lv;
  lv.command = "liouville";
  lv.inputs = {(RFunc(-2) * fixtures::form(fixtures::kExample3Half, 2)).str(),
               std::string("form(") + fixtures::kExample3X2 + ", -(" + fixtures::kExample3X1 + "))"};
  const auto r3 = cli::run(lv);
  CHECK(r3.error_type == "");
  CHECK(r3.certified);

  cli::Request co;
  co.command = "cohomology";
  co.inputs = {(RFunc(2) * fixtures::form(fixtures::kExample4Half, 2)).str(), "(x1^2+x2^2+x1+x2)*(x1^2+x2^2-x1-x2)*(x1+2*x2)"};
  const auto r4 = cli::run(co);
  CHECK(r4.certified);
  CHECK(r4.result.value("dimension", 0) == 3);
  CHECK(cli::exit_code({r, r3, r4}) == 0);
}

TEST_CASE("errors and exit codes") {
  cli::Request bad;
  bad.command = "liouville";
  bad.inputs = {"form(x2, x1", "form(1, 1)"};
  const auto r = cli::run(bad);
  CHECK(r.error_type == "SyntaxError");
  CHECK(cli::exit_code({r}) == 2);

  cli::Request deg;
  deg.command = "linearize";
  deg.inputs = {"form(-1, 0)", "x2"};
  const auto r2 = cli::run(deg);
  CHECK(r2.error_type == "FirstIntegralDegenerate");
  CHECK(cli::exit_code({r2}) == 1);

  cli::Request unknown;
  unknown.command = "integrate";
  CHECK(cli::run(unknown).error_type == "UsageError");

  cli::Request none;
  none.command = "hyperexp-decompose";
  none.inputs = {"form(1, 2*x2 + 4/(x2^2-2))"};
  const auto r3 = cli::run(none);
  CHECK(r3.result.value("decomposition", "") == "none");
  CHECK_FALSE(r3.certified);
}

TEST_CASE("batch files and determinism") {
  std::istringstream in(
      "# two requests\n"
      "with s: t^2-2\n"
      "rational-integrate: form(s^2/x1, 0)\n"
      "\n"
      "liouville: form(x2, x1) | form(x1*x2^2 + x2, x1^2*x2 + x1)\n");
  cli::Request defaults;
  const auto reqs = cli::parse_batch(in, defaults);
  REQUIRE(reqs.size() == 2);
  CHECK(reqs[0].declarations.size() == 1);
  CHECK(reqs[1].inputs.size() == 2);
  std::vector<cli::Report> reports;
  for (const auto& q : reqs) reports.push_back(cli::run(q));
  CHECK(reports[0].certified);
  CHECK(reports[1].certified);
  CHECK(cli::render_text(reports[1]) == cli::render_text(cli::run(reqs[1])));
  CHECK(cli::render_json(reports[0]).dump() == cli::render_json(cli::run(reqs[0])).dump());
}
