#include <doctest.h>

#include <random>

#include "hyperint/factor.hpp"
#include "hyperint/parse.hpp"

using namespace hyperint;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }
RFunc R(const std::string& s) { return parse_rfunc(s); }

MPoly product_of(const MFactorization& f) {
  MPoly acc(f.unit);
  for (const auto& [g, k] : f.factors) acc *= pow(g, static_cast<unsigned>(k));
  return acc;
}

MPoly random_poly(std::mt19937& rng, int nvars, int deg, int terms) {
  std::uniform_int_distribution<int> c(-4, 4), e(0, deg), v(1, nvars);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    MPoly m(c(rng));
    int left = e(rng);
    while (left-- > 0) m *= MPoly::var(xvar(v(rng)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("gcd") {
  CHECK(gcd(P("x1^2-x2^2"), P("x1-x2")) == P("x1-x2"));
  CHECK(gcd(P("2*x1+4"), MPoly()) == P("x1+2"));
  MPoly g = gcd(P("(x1+x2)^2*x3"), P("(x1+x2)*x3^2"));
  CHECK(g == P("(x1+x2)*x3"));
  CHECK(divides(g, P("(x1+x2)^2*x3")));
  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    MPoly a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4), c = random_poly(rng, 3, 2, 3);
    if (c.is_constant()) continue;
    MPoly h = gcd(a * c, b * c);
    CHECK(divides(c, h));
    CHECK(divides(h, a * c));
    CHECK(divides(h, b * c));
  }
}

TEST_CASE("resultant") {
  const int x = xvar(1);
  CHECK(resultant(P("x1^2-2"), P("x1-t"), x) == P("t^2-2"));
  CHECK(resultant(P("x1"), P("x1+1"), x).is_constant());
  MPoly lam = MPoly::var(kVarLambda);
  MPoly r = resultant(P("x1^2-2"), MPoly(1) - MPoly(2) * lam * MPoly::var(x), x);
  CHECK(r.monic() == (MPoly(-8) * lam * lam + MPoly(1)).monic());
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    MPoly a = random_poly(rng, 2, 3, 4), b = random_poly(rng, 2, 3, 4);
    if (a.degree(x) < 1 || b.degree(x) < 1) continue;
    const int s = (a.degree(x) * b.degree(x)) % 2 ? -1 : 1;
    CHECK(resultant(a, b, x) == AlgNumber(s) * resultant(b, a, x));
  }
}

TEST_CASE("squarefree factorization") {
  const int x = xvar(1);
  auto s = squarefree_factor(P("x1^2"), x);
  REQUIRE(s.size() == 1);
  CHECK(s[0].first == P("x1"));
  CHECK(s[0].second == 2);
  CHECK(squarefree_factor(P("x1^2-2"), x).size() == 1);
  s = squarefree_factor(P("(x1-x2)^3*(x1+x2)"), x);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::make_pair(P("x1+x2"), 1));
  CHECK(s[1] == std::make_pair(P("x1-x2"), 3));
}

TEST_CASE("irreducible factorization over Q") {
  auto f = factor_irreducible(P("x1^2-x2^2"));
  CHECK(f.factors.size() == 2);
  CHECK(product_of(f) == P("x1^2-x2^2"));
  CHECK(factor_irreducible(P("x1^2-2*x2^2")).factors.size() == 1);
  MPoly p = P("3*(x1*x2+1)^2*(x1^2+x2^3-x3)*(x1-2*x3+5)*(x2^2*x1+x1+1)");
  f = factor_irreducible(p);
  CHECK(f.factors.size() == 4);
  CHECK(product_of(f) == p);
  std::mt19937 rng(11);
  for (int it = 0; it < 15; ++it) {
    MPoly a = random_poly(rng, 3, 3, 3), b = random_poly(rng, 3, 3, 3);
    if (a.is_constant() || b.is_constant()) continue;
    MPoly q = a * b * b;
    auto fq = factor_irreducible(q);
    CHECK(product_of(fq) == q);
    CHECK(fq.factors.size() >= 2);
  }
}

TEST_CASE("irreducible factorization over a number field") {
  ParseContext ctx;
  ctx.declare("with s: t^2-2");
  MPoly p = parse_poly("x1^2-2*x2^2", ctx);
  FieldPtr L = ctx.names().at("s").field();
  auto f = factor_irreducible(p, L);
  REQUIRE(f.factors.size() == 2);
  CHECK(product_of(f) == p);
  CHECK(f.factors[0].first.degree(xvar(1)) == 1);
  auto g = factor_irreducible(parse_poly("x1^4-10*x1^2+1", ctx), L);
  CHECK(g.factors.size() == 2);
}

TEST_CASE("splitting fields and conjugates") {
  auto s = splitting_field(QPoly({Rational(-2), Rational(0), Rational(1)}));
  REQUIRE(s.field);
  CHECK(s.field->degree() == 2);
  CHECK(s.roots.size() == 2);
  CHECK(s.field->is_galois());
  s = splitting_field(QPoly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(!s.field);
  CHECK(s.roots.size() == 2);
  QPoly sd({Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)});
  s = splitting_field(sd);
  REQUIRE(s.field);
  CHECK(s.field->degree() == 4);
  REQUIRE(s.roots.size() == 4);
  for (const auto& r : s.roots) CHECK(evaluate(sd, r).zero());
  CHECK(s.field->is_galois());
  // x^3-2 needs degree 6
  s = splitting_field(QPoly({Rational(-2), Rational(0), Rational(0), Rational(1)}));
  REQUIRE(s.field);
  CHECK(s.field->degree() == 6);
  CHECK(s.roots.size() == 3);
  CHECK(s.field->is_galois());
  // conjugates of a root and of 1 + root
  for (const auto& r : s.roots) {
    auto conj = galois_conjugates(AlgNumber(1) + r, s.field);
    AlgNumber sum(0);
    for (const auto& c : conj) sum += c;
    CHECK(sum.is_rational());
    CHECK(sum.rational() == Rational(s.field->degree()) / 3 * trace(AlgNumber(1) + r));
  }
  CHECK_THROWS_AS(splitting_field(QPoly({Rational(-2), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}), 10), DegreeCapExceeded);
}

TEST_CASE("galois conjugates in Q(sqrt2)") {
  auto s = splitting_field(QPoly({Rational(-2), Rational(0), Rational(1)}));
  AlgNumber r = s.roots[1];
  auto c = galois_conjugates(AlgNumber(1) + r, s.field);
  REQUIRE(c.size() == 2);
  CHECK(c[0] + c[1] == AlgNumber(2));
  CHECK(c[0] * c[1] == AlgNumber(-1));
  auto five = galois_conjugates(AlgNumber(5), s.field);
  CHECK(five.size() == 2);
}

TEST_CASE("rational functions: derivative, compose, normalization") {
  CHECK(R("1/x1").derivative(xvar(1)) == R("-1/x1^2"));
  CHECK(compose(R("z^2"), R("x1*x2")) == R("x1^2*x2^2"));
  CHECK(compose(R("1/(z-1)"), R("(x1+1)/x1")) == R("x1"));
  CHECK_THROWS_AS(compose(R("1/(z-1)"), R("1")), ComposePoleCollision);
  RFunc a(P("(x1+x2)*(x1-1)*3"), P("(x1-1)*6*x2"));
  RFunc b(P("(x1+x2)*(x1-1)*3*(x3+1)"), P("(x1-1)*6*x2*(x3+1)"));
  CHECK(a == b);
  CHECK(a.den().lc().one());
  CHECK(RFunc(a.num(), a.den()) == a);
  std::mt19937 rng(9);
  for (int it = 0; it < 15; ++it) {
    RFunc f(random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3) + MPoly(7));
    RFunc g(random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3) + MPoly(5));
    if (f.den().is_zero() || g.den().is_zero()) continue;
    const int v = xvar(1);
    CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    RFunc u = R("z^3 - 2*z + 1/(z+3)");
    try {
      RFunc lhs = compose(u, f).derivative(v);
      RFunc rhs = compose(u.derivative(kVarZ), f) * f.derivative(v);
      CHECK(lhs == rhs);
    } catch (const ComposePoleCollision&) {
    }
  }
}

TEST_CASE("parser round trip") {
  ParseContext ctx;
  RFunc r = parse_rfunc("x1*x2 + 1/2", ctx);
  CHECK(r == RFunc(P("2*x1*x2+1"), MPoly(2)));
  for (const char* s : {"(x1^2-2*x2^2)/(3*x1^2)", "alg(t^2-2; t)*x1 + 1", "-x1/(x2+1)^2", "z^3 - 1/2*z"}) {
    RFunc v = parse_rfunc(s, ctx);
    CHECK(parse_rfunc(v.str(), ctx) == v);
  }
  CHECK_THROWS_AS(parse_rfunc("x1 + * 2", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_rfunc("y + 1", ctx), UnknownVariable);
  ParseContext two(2);
  CHECK_THROWS_AS(parse_rfunc("x3", two), UnknownVariable);
}
