#include <doctest.h>

#include "fixtures.hpp"
#include "hyperint/ode.hpp"
#include "hyperint/parse.hpp"

using namespace hyperint;

namespace {
RFunc R(const std::string& s) { return parse_rfunc(s); }
}  // namespace

TEST_CASE("degenerate first integrals") {
  // e^(-x1) x2 is a first integral of x2' = x2
  CHECK_THROWS_AS(linearize(R("x2"), fixtures::form("form(-1, 0)", 2)), FirstIntegralDegenerate);
  // algebraic integrating factor
  CHECK_THROWS_AS(linearize(R("x2/x1"), fixtures::form("form(-1/x1, 0)", 2)), FirstIntegralDegenerate);
}

TEST_CASE("third example as a vector field") {
  ParseContext c(2);
  const RFunc P = parse_rfunc(fixtures::kExample3X1, c), Q = parse_rfunc(fixtures::kExample3X2, c);
  const OneForm eta = RFunc(-2) * fixtures::form(fixtures::kExample3Half, 2);
  const Linearization lin = linearize(P, Q, eta);
  CHECK(certify(P, Q, lin));
  // b is -(3X^2-2)/X^3 up to the homography on X
  CHECK(lin.b.num().degree(kVarZ) == 2);
  CHECK(lin.b.den().degree(kVarZ) == 3);
  // the same system through dx2/dx1 = Q/P
  const Linearization lin2 = linearize(Q / P, eta + dlog(P, 2));
  CHECK(certify(RFunc(1), Q / P, lin2));
}

TEST_CASE("pullback of Y' = X + Y/X^2 through X = x1 x2, Y = x1 + x2") {
  // x2' = V with Y(x1, x2) = x1 + x2 and X = x1 x2 satisfying dY/dX = X + Y/X^2
  const RFunc X = R("x1*x2"), Y = R("x1+x2");
  const RFunc k = X + Y / (X * X);
  // (1 + V) = k (x2 + x1 V)
  const RFunc V = (k * R("x2") - RFunc(1)) / (RFunc(1) - k * R("x1"));
  // H = e^(1/X) (1 - k x1) with Y' - Y/X^2 = X
  const OneForm eta = d(RFunc(1) / X, 2) + dlog(RFunc(1) - k * R("x1"), 2);
  const Linearization lin = linearize(V, eta);
  CHECK(certify(RFunc(1), V, lin));
  CHECK_FALSE(lin.X.is_constant());
}
