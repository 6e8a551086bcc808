#pragma once

// Random generators shared by the property tests and the acceptance binary.

#include <random>

#include "hyperint/rational_integration.hpp"

namespace randgen {

using namespace hyperint;

inline MPoly poly(std::mt19937& rng, int nvars, int deg, int terms, int coef = 4) {
  std::uniform_int_distribution<int> c(-coef, coef), e(0, deg), v(1, nvars);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    MPoly m(c(rng));
    int left = e(rng);
    while (left-- > 0) m *= MPoly::var(xvar(v(rng)));
    p += m;
  }
  return p;
}

inline MPoly nonconstant_poly(std::mt19937& rng, int nvars, int deg, int terms) {
  for (;;) {
    MPoly p = poly(rng, nvars, deg, terms);
    if (!p.is_constant()) return p;
  }
}

inline RFunc rfunc(std::mt19937& rng, int nvars, int deg) {
  MPoly den = poly(rng, nvars, deg, 3);
  if (den.is_zero()) den = MPoly(1);
  return RFunc(poly(rng, nvars, deg, 3), den);
}

inline FieldPtr quadratic(int d) {
  static FieldPtr f2 = NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}), "s2");
  static FieldPtr f3 = NumberField::make(QPoly({Rational(-3), Rational(0), Rational(1)}), "s3");
  return d == 2 ? f2 : f3;
}

// Random H with lambda in {0, sqrt2, sqrt3}; each log term is
// (g + s*h)/(g - s*h) so that its contribution is rational.
inline HyperexpRep rep(std::mt19937& rng, int n, int deg) {
  HyperexpRep h;
  h.n = n;
  std::uniform_int_distribution<int> coin(0, 2), qd(1, 3), ed(-2, 2);
  if (coin(rng)) h.F0 = rfunc(rng, n, deg);
  h.q = qd(rng);
  RFunc A(1);
  for (int k = coin(rng); k > 0; --k) {
    int e = ed(rng);
    if (e == 0) e = 1;
    A *= pow(RFunc(nonconstant_poly(rng, n, std::min(deg, 2), 2)), e);
  }
  h.A = A;
  const int pick = coin(rng);
  if (pick) {
    FieldPtr L = quadratic(pick + 1);
    AlgNumber s = AlgNumber::generator(L);
    MPoly g = nonconstant_poly(rng, n, std::min(deg, 2), 2), k = nonconstant_poly(rng, n, std::min(deg, 2), 2);
    MPoly a = g + s * k, b = g - s * k;
    h.field = L;
    h.logs.emplace_back(s, RFunc(a, b));
  }
  return h;
}

}  // namespace randgen
