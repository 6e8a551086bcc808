#include <doctest.h>

#include "fixtures.hpp"
#include "hyperint/connection.hpp"
#include "hyperint/decompose.hpp"
#include "hyperint/parse.hpp"
#include "random_inputs.hpp"

using namespace hyperint;

namespace {
RFunc R(const std::string& s) { return parse_rfunc(s); }
}  // namespace

TEST_CASE("tangential derivations annihilate F") {
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + it % 2;
    const RFunc F = randgen::rfunc(rng, n, 2);
    if (F.is_constant()) continue;
    const auto ds = tangential_poly_derivations(F, n);
    CHECK(ds.size() == static_cast<std::size_t>(n - 1));
    for (const auto& D : ds) CHECK(D.apply(F).is_zero());
    // brackets stay tangent
    const RFunc u = randgen::rfunc(rng, n, 2);
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        const RFunc a = ds[i].apply(ds[j].apply(F * u)) - ds[j].apply(ds[i].apply(F * u));
        const RFunc b = ds[i].apply(ds[j].apply(u)) - ds[j].apply(ds[i].apply(u));
        CHECK(a == F * b);
      }
  }
}

TEST_CASE("solve_exactness") {
  const OneForm eta = fixtures::form("form(x2, x1)", 2);
  auto R1 = solve_exactness(eta, eta);
  REQUIRE(R1);
  CHECK(*R1 == R("1"));
  const OneForm w = R("x1*x2+1") * eta;
  auto R2 = solve_exactness(eta, w);
  REQUIRE(R2);
  CHECK(*R2 == R("x1*x2"));
  // int e^(-1/z) dz is not rational times e^(-1/z)
  const OneForm eta3 = fixtures::form("form(x2/(x1*x2)^2, x1/(x1*x2)^2)", 2);
  CHECK_FALSE(solve_exactness(eta3, eta).has_value());
  // R of degree 0 with constant top part, while eta decays fast at infinity
  const OneForm eta4 = fixtures::form("form(-3*x1/(x1^2-1)^2, 0)", 2);
  const RFunc r4 = R("(x2^2-x2/2+1)/(x2^2-3*x1/4)");
  const auto R4 = solve_exactness(eta4, d(r4, 2) + r4 * eta4);
  REQUIRE(R4);
  CHECK(*R4 == r4);
}

TEST_CASE("solve_exactness recovers random certificates") {
  std::mt19937 rng(17);
  for (int it = 0; it < 15; ++it) {
    const HyperexpRep h = randgen::rep(rng, 2, 2);
    const OneForm eta = log_derivative(h);
    const RFunc r = randgen::rfunc(rng, 2, 2);
    const OneForm w = d(r, 2) + r * eta;
    const auto got = solve_exactness(eta, w);
    REQUIRE(got);
    CHECK(d(*got, 2) + *got * eta == w);
  }
}

TEST_CASE("solve_tangential") {
  const RFunc F = R("x1*x2");
  // H = x1 e^(x1 x2)
  const OneForm eta = fixtures::form("form(1/x1 + x2, x1)", 2);
  const auto sys = tangential_system(F, eta, OneForm(2));
  const auto T = solve_tangential(sys);
  REQUIRE(T);
  CHECK(sys.satisfied_by(*T));
  CHECK_NOTHROW(express_in_F(*T / R("x1"), F));

  const auto T0 = solve_tangential(tangential_system(F, d(F, 2), OneForm(2)));
  REQUIRE(T0);
  CHECK(T0->is_constant());

  // ((x1 - s)/(x1 + s))^s with s^2 = 2 is not rational
  const OneForm eta2 = fixtures::form("form(4/(x1^2-2), 0)", 2);
  CHECK_FALSE(solve_tangential(tangential_system(F, eta2, OneForm(2))).has_value());
}

TEST_CASE("solve_tangential on the third example") {
  const OneForm eta = RFunc(-2) * fixtures::form(fixtures::kExample3Half, 2);
  const RFunc F = R("(x1^2+x2^2)/(x1+x2)");
  const auto sys = tangential_system(F, eta, OneForm(2));
  const auto T = solve_tangential(sys);
  REQUIRE(T);
  CHECK(sys.satisfied_by(*T));
  CHECK_NOTHROW(express_in_F(*T * pow(R("x1+x2"), 3), F));
}

TEST_CASE("solve_tangential_inhom") {
  const RFunc F = R("x1*x2");
  const auto zero = solve_tangential_inhom(tangential_system(F, OneForm(2), OneForm(2)));
  REQUIRE(zero);
  CHECK(zero->is_zero());

  const OneForm theta = d(R("x1/x2 + x2^2"), 2);
  const auto sys = tangential_system(R("x2^3 + x1"), OneForm(2), theta);
  const auto y = solve_tangential_inhom(sys);
  REQUIRE(y);
  CHECK(sys.satisfied_by(*y));

  // D(y) = x1 x2 along x1 x2 = const has no rational solution
  Options small;
  small.max_num_degree = 8;
  small.max_den_power = 2;
  const auto sys2 = tangential_system(F, OneForm(2), fixtures::form("form(x2, 0)", 2));
  CHECK_FALSE(solve_tangential_inhom(sys2, small).has_value());
}
