#pragma once

// Rational solutions of the linear first order systems behind the
// decompositions: exactness of H*omega, and the systems along the level sets
// of a rational function F.

#include <optional>
#include <utility>
#include <vector>

#include "hyperint/forms.hpp"
#include "hyperint/options.hpp"

namespace hyperint {

// sum_v c_v * d/dx_v with polynomial coefficients.
struct PolyDerivation {
  std::vector<std::pair<int, MPoly>> terms;
  MPoly apply(const MPoly& p) const;
  RFunc apply(const RFunc& f) const;
  RFunc apply(const OneForm& w) const;  // contraction w(D)
};

// Derivations tangent to the level sets of F, with denominators cleared.
std::vector<PolyDerivation> tangential_poly_derivations(const RFunc& F, int n);

// D_i(y) = a_i*y + b_i for every derivation D_i.
struct LinearPDESystem {
  int n = 0;
  RFunc F;
  std::vector<PolyDerivation> derivations;
  std::vector<RFunc> a, b;
  MPoly poles = MPoly(1);  // extra candidate poles of the solution
  bool satisfied_by(const RFunc& y) const;
};

// D(y) = eta(D)*y + theta(D) along the level sets of F.
LinearPDESystem tangential_system(const RFunc& F, const OneForm& eta, const OneForm& theta);

// Homogeneous systems (all b_i = 0). The solution is a product of integer
// powers of irreducible polynomials: their exponents solve a linear system
// over Z. Returns nullopt when no rational solution exists.
std::optional<RFunc> solve_tangential(const LinearPDESystem& sys, const Options& opt = {});

// Particular rational solution by an ansatz N/Q. Returns nullopt when the
// search space fixed by the options is exhausted; throws DegreeBoundExceeded
// when the ansatz would exceed the size limit before that.
std::optional<RFunc> solve_tangential_inhom(const LinearPDESystem& sys, const Options& opt = {});

// R with dR + R*eta = omega. Pole orders and the degree at infinity of R are
// bounded from the local data of eta and omega, so a single ansatz decides
// existence; nullopt means no rational solution.
std::optional<RFunc> solve_exactness(const OneForm& eta, const OneForm& omega, const Options& opt = {});

}  // namespace hyperint
