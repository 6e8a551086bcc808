#include <doctest.h>

#include "fixtures.hpp"
#include "hyperint/decompose.hpp"
#include "hyperint/parse.hpp"

using namespace hyperint;

namespace {
RFunc R(const std::string& s) { return parse_rfunc(s); }

// F1 and F2 differ by a homography
bool same_up_to_homography(const RFunc& F1, const RFunc& F2) {
  try {
    return rational_degree(express_in_F(F1, F2)) == 1;
  } catch (const NotAFunctionOfF&) {
    return false;
  }
}

void check_decomposition(const std::string& G, const std::string& u, const std::string& F) {
  const auto dec = decompose_rational(R(G));
  CHECK(compose(dec.u, dec.F) == R(G));
  CHECK(same_up_to_homography(dec.F, R(F)));
  CHECK(rational_degree(dec.u) == rational_degree(R(u)));
}
}  // namespace

TEST_CASE("decompose_rational") {
  const auto triv = decompose_rational(R("x1+x2"));
  CHECK(triv.u == R("z"));
  CHECK(triv.F == R("x1+x2"));
  check_decomposition("(x1*x2)^2+x1*x2", "z^2+z", "x1*x2");
  check_decomposition("((x1+x2)^2-1)/((x1+x2)^2+1)", "(z^2-1)/(z^2+1)", "x1+x2");
  check_decomposition("(x1^2+x2^3)^3/(x1^2+x2^3+1)", "z^3/(z+1)", "x1^2+x2^3");
  // functions of a single variable, including inputs vanishing at infinity
  check_decomposition("(x1+3)/(3*x1^2+2)", "(z+3)/(3*z^2+2)", "x1");
  check_decomposition("(x1^2+1)/(x1-2)", "(z^2+1)/(z-2)", "x1");
  // indecomposable inputs come back unchanged
  CHECK(decompose_rational(R("x1^2+x2")).u == R("z"));
  CHECK_THROWS_AS(decompose_rational(R("3")), ConstantF);
}

TEST_CASE("express_in_F") {
  CHECK(express_in_F(R("x1*x2"), R("x1*x2")) == R("z"));
  CHECK(express_in_F(R("(x1*x2)^2+1"), R("x1*x2")) == R("z^2+1"));
  CHECK(express_in_F(R("1/((x1+x2)^2-x1-x2)"), R("x1+x2")) == R("1/(z^2-z)"));
  CHECK_THROWS_AS(express_in_F(R("x1"), R("x1*x2")), NotAFunctionOfF);
}

TEST_CASE("rational_degree and max_partial_degree") {
  CHECK(rational_degree(R("x1^2*x2/(x1+1)")) == 3);
  CHECK(max_partial_degree(R("x1^2*x2/(x1+1)")) == 2);
}

TEST_CASE("hyperexp_decompose on e^(x1 x2)") {
  const OneForm eta = fixtures::form("form(x2, x1)", 2);
  const auto pd = hyperexp_decompose(eta);
  REQUIRE(pd);
  CHECK(certify(eta, *pd));
  CHECK(pd->F == R("x1*x2"));
  CHECK(pd->T == R("1"));
  CHECK(pd->g == R("1"));
}

TEST_CASE("hyperexp_decompose of the second example") {
  for (int a : {2, 3, 4}) {
    const OneForm eta = fixtures::form(fixtures::example2(a), 2);
    const auto pd = hyperexp_decompose(eta);
    REQUIRE(pd);
    CHECK(certify(eta, *pd));
    CHECK(max_partial_degree(pd->F) == a);
    // T is (x1^2-2)^7 up to a rational function of F
    CHECK_NOTHROW(express_in_F(pd->T / pow(R("x1^2-2"), 7), pd->F));
  }
}

TEST_CASE("hyperexp_decompose of the third example") {
  const OneForm eta = RFunc(-2) * fixtures::form(fixtures::kExample3Half, 2);
  const auto pd = hyperexp_decompose(eta);
  REQUIRE(pd);
  CHECK(certify(eta, *pd));
  CHECK(same_up_to_homography(pd->F, R("-(x1^2+x2^2)/(x1+x2)")));
  CHECK_NOTHROW(express_in_F(pd->T * pow(R("x1+x2"), 3), pd->F));
}

TEST_CASE("hyperexp_decompose errors and failures") {
  // H = x1^(1/2) is algebraic
  CHECK_THROWS_AS(hyperexp_decompose(fixtures::form("form(1/(2*x1), 0)", 2)), AlgebraicH);
  // H = e^(x1 + x2^2) ((x2 - s)/(x2 + s))^s with s^2 = 2 has no decomposition
  const OneForm eta = fixtures::form("form(1, 2*x2 + 4/(x2^2-2))", 2);
  CHECK_FALSE(hyperexp_decompose(eta).has_value());
}
