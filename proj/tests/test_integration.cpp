#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "hyperint/hermite.hpp"
#include "hyperint/rational_integration.hpp"
#include "random_inputs.hpp"

using namespace hyperint;

namespace {
RFunc R(const std::string& s) { return parse_rfunc(s); }
MPoly P(const std::string& s) { return parse_poly(s); }

void check_hermite(const RFunc& r, int v) {
  HermiteResult h = hermite_reduce(r, v);
  CHECK(h.R.derivative(v) + RFunc(h.P, h.Q) == r);
  CHECK(h.P.degree(v) < std::max(1, h.Q.degree(v)));
  if (h.Q.degree(v) > 0) CHECK(gcd(h.Q, h.Q.derivative(v)).degree(v) == 0);
}
}  // namespace

TEST_CASE("hermite reduction") {
  const int x = xvar(1);
  HermiteResult h = hermite_reduce(R("1/x1^2"), x);
  CHECK(h.R == R("-1/x1"));
  CHECK(h.P.is_zero());
  check_hermite(R("(x1+1)/(x1^2*(x1-1))"), x);
  check_hermite(R("(x2*x1^3+1)/((x1-x2)^3*(x1+1)^2)"), x);
  check_hermite(R("x2/x1"), xvar(2));
  check_hermite(R("3*x1^2+x2"), x);
  std::mt19937 rng(21);
  for (int it = 0; it < 15; ++it) {
    MPoly a = randgen::nonconstant_poly(rng, 2, 2, 3), b = randgen::nonconstant_poly(rng, 2, 2, 3);
    RFunc r(randgen::poly(rng, 2, 3, 4), a * a * b);
    check_hermite(r, x);
    check_hermite(r, xvar(2));
  }
}

TEST_CASE("residues") {
  const int x = xvar(1);
  ResidueData rd = extract_residues(P("1"), P("x1^2-2"), x);
  REQUIRE(rd.factors.size() == 1);
  CHECK(rd.factors[0].S == QPoly({Rational(-1, 8), Rational(0), Rational(1)}));
  CHECK(rd.factors[0].shift == 0);
  REQUIRE(rd.factors[0].entries.size() == 2);
  for (const auto& [lam, G] : rd.factors[0].entries) {
    CHECK(lam * lam == AlgNumber(Rational(1, 8)));
    CHECK(G.degree(x) == 1);
  }
  rd = extract_residues(P("3*x1+1"), P("x1*(x1+1)"), x);
  REQUIRE(rd.factors.size() == 2);
  CHECK(!rd.field);
  CHECK_THROWS_AS(extract_residues(P("x2"), P("x1"), x), NonConstantResidue);
}

TEST_CASE("residue lattice") {
  auto L = randgen::quadratic(2);
  AlgNumber s = AlgNumber::generator(L);
  auto lat = residue_lattice_basis({s, -s, AlgNumber(2) * s}, L);
  REQUIRE(lat.basis.size() == 1);
  CHECK(lat.basis[0] == s);
  CHECK(lat.M[0][0] == 1);
  CHECK(lat.M[1][0] == -1);
  CHECK(lat.M[2][0] == 2);
  lat = residue_lattice_basis({AlgNumber(Rational(1, 2)), AlgNumber(Rational(1, 3))}, nullptr);
  REQUIRE(lat.basis.size() == 1);
  CHECK(lat.basis[0] == AlgNumber(Rational(1, 6)));
  lat = residue_lattice_basis({AlgNumber(1) + s, AlgNumber(1) - s}, L);
  CHECK(lat.basis.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    AlgNumber acc(0);
    for (std::size_t j = 0; j < lat.basis.size(); ++j) acc += AlgNumber(Rational(lat.M[i][j])) * lat.basis[j];
    CHECK(acc == (i == 0 ? AlgNumber(1) + s : AlgNumber(1) - s));
  }
}

TEST_CASE("rational integration of the first worked example") {
  auto t0 = std::chrono::steady_clock::now();
  OneForm w = fixtures::form(fixtures::kExample1, 3);
  IntegrationTrace tr;
  HyperexpRep h = rational_integrate(w, {}, &tr);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10);
  CHECK(h.F0 == R("1/x1"));
  CHECK(h.q == 3);
  RFunc ratio = h.A / R("x3^3*(x1^2-2*x2^2)");
  CHECK(ratio.is_constant());
  REQUIRE(h.logs.size() == 1);
  const AlgNumber lam = h.logs[0].first;
  CHECK(lam * lam == AlgNumber(2));
  RFunc expect = (RFunc(lam) * R("x1") + R("2*x2")) / (RFunc(-lam) * R("x1") + R("2*x2"));
  CHECK((h.logs[0].second / expect).is_constant());
  CHECK(log_derivative(h) == w);
  REQUIRE(tr.after_pass.size() == 3);
  for (int p = 0; p < 3; ++p)
    for (int k = 3 - p; k <= 3; ++k) CHECK(tr.after_pass[static_cast<std::size_t>(p)][k - 1].is_zero());
}

TEST_CASE("rational integration edge cases") {
  CHECK_THROWS_AS(rational_integrate(fixtures::form("form(x2, 0)", 2)), NotClosed);
  HyperexpRep h = rational_integrate(OneForm(2));
  CHECK(h.F0.is_zero());
  CHECK(h.logs.empty());
  // pure rational residues go into A
  OneForm w = dlog(R("x1^2*(x1+x2)^3/x2"), 2);
  h = rational_integrate(w);
  CHECK(h.logs.empty());
  CHECK(log_derivative(h) == w);
  // 1/(x^2+1): residues +-i/2
  w = fixtures::form("form(1/(x1^2+1))", 1);
  h = rational_integrate(w);
  REQUIRE(h.logs.size() == 1);
  CHECK(log_derivative(h) == w);
}

TEST_CASE("integration round trip on random representations") {
  std::mt19937 rng(1234);
  for (int it = 0; it < 25; ++it) {
    std::uniform_int_distribution<int> nd(1, 3);
    HyperexpRep rep = randgen::rep(rng, nd(rng), 2);
    OneForm w = log_derivative(rep);
    REQUIRE(w.field() == nullptr);
    HyperexpRep back = rational_integrate(w);
    CHECK(log_derivative(back) == w);
  }
}
