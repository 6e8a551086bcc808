#pragma once

// Cohomology of H*K[x, 1/(SD)]_n for a transcendental hyperexponential H.
// Univariate rational functions are RFuncs in z.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperint/decompose.hpp"

namespace hyperint {

struct PoleOutsideSupport : std::domain_error {
  using std::domain_error::domain_error;
};
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoHomographyFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoShiftPoleAvailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// g = K + s'/s where K keeps every pole of g except the simple poles with
// integer residue.
struct KernelShell {
  RFunc K, s;
};
KernelShell kernel_shell(const RFunc& g);

// (z^i/Q) for i < deg Q, then (z^i/g2) for i < d2, i != d1.
std::vector<RFunc> prop3_basis(const RFunc& g, const QPoly& Q);

// f = r' + r*g + sum coords[k] * basis[k] with the basis of prop3_basis.
struct UnivariateReduction {
  std::vector<Rational> coords;
  RFunc r;
};
UnivariateReduction univariate_reduce(const RFunc& f, const RFunc& g, const QPoly& Q);

// g' = h'*(g o h) of degree <= -2 and F' = h^{-1}(F) whose denominator has a
// factor outside SD. Candidates: h = z, then h = c + 1/z for c = 0, 1, -1, 2, ...
struct Homography {
  RFunc g, F, h;
};
Homography normalize_homography(const RFunc& g, const RFunc& F, const MPoly& SD, const Options& opt = {});

// Minimal polynomials of the constants c for which num(F - c) divides a power of SD.
std::vector<QPoly> sigma_minimal_polynomials(const RFunc& F, const MPoly& SD);
// The same set as algebraic numbers (conjugate closed).
std::vector<AlgNumber> sigma_set(const RFunc& F, const MPoly& S, const MPoly& D, const Options& opt = {});

enum class Family { Q, G2, Combined };

struct CohomBasis {
  std::vector<OneForm> forms;
  std::vector<std::pair<int, Family>> provenance;
  std::size_t dimension() const { return forms.size(); }
  // Normalized decomposition used to build the forms.
  RFunc F, T, g;
  QPoly Q;
  bool decomposed = false;
};

CohomBasis cohomology_basis(const OneForm& eta, const MPoly& S, const Options& opt = {});

// Coordinates of H*omega in the basis modulo exact forms (rational
// decompositions only).
std::vector<Rational> cohomology_coordinates(const CohomBasis& basis, const OneForm& eta, const OneForm& omega, const Options& opt = {});

std::string to_string(Family f);

}  // namespace hyperint
