#pragma once

// Univariate factorization over Q (Cantor–Zassenhaus modulo p, Hensel lifting,
// factor recombination).

#include <utility>
#include <vector>

#include "hyperint/upoly.hpp"

namespace hyperint {

using QPoly = UPoly<Rational>;

struct QFactorization {
  Rational unit;                                // p = unit * prod f^k
  std::vector<std::pair<QPoly, int>> factors;  // primitive integer polys, positive lc
};

// Complete factorization of a nonzero rational polynomial.
QFactorization factor_rational(const QPoly& p);

// Irreducible factors of a squarefree primitive integer polynomial of degree >= 1.
std::vector<QPoly> factor_squarefree_integer(const QPoly& f);

// Integer-coefficient primitive associate with positive leading coefficient.
QPoly primitive_integer(const QPoly& p);

// Rational roots of p (distinct).
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace hyperint
