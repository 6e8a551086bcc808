#pragma once

// Rational linearization of a planar vector field (x1' = P, x2' = Q) that
// has a first integral int H*(Q dx1 - P dx2) with H hyperexponential.
//
// In the variables X = F, Y = R*T the trajectories satisfy
//   -dY/dX = a(X) + b(X)*Y.

#include <stdexcept>

#include "hyperint/liouville.hpp"

namespace hyperint {

struct FirstIntegralDegenerate : std::domain_error {
  using std::domain_error::domain_error;
};

struct Linearization {
  RFunc X, Y, a, b;
};

// L(Y) + (a(X) + b(X)*Y) * L(X) == 0 with L = P d/dx1 + Q d/dx2, and the
// Jacobian of (X, Y) is not identically zero.
bool certify(const RFunc& P, const RFunc& Q, const Linearization& lin);

// eta = dH/H with H*(Q dx1 - P dx2) closed. Throws FirstIntegralDegenerate
// when the first integral is Darbouxian-like (H algebraic or H*omega exact).
Linearization linearize(const RFunc& P, const RFunc& Q, const OneForm& eta, const Options& opt = {});
// dx2/dx1 = V
Linearization linearize(const RFunc& V, const OneForm& eta, const Options& opt = {});

}  // namespace hyperint
