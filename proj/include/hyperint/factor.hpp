#pragma once

// Irreducible factorization of multivariate polynomials over Q (Hensel
// lifting from a univariate image) and over number fields (norms), plus
// splitting fields.

#include <utility>
#include <vector>

#include "hyperint/mpoly.hpp"

namespace hyperint {

struct MFactorization {
  AlgNumber unit;
  std::vector<std::pair<MPoly, int>> factors;  // monic, sorted canonically
};

struct FactorOptions {
  int max_total_degree = 60;  // beyond this DegreeCapExceeded is raised
};

// Complete factorization over the field `over` (null: the field of the coefficients).
MFactorization factor_irreducible(const MPoly& p, const FieldPtr& over = nullptr, const FactorOptions& opt = {});
// Irreducible factors (monic) of a squarefree polynomial.
std::vector<MPoly> irreducible_factors(const MPoly& f, const FieldPtr& over = nullptr, const FactorOptions& opt = {});

struct SplittingField {
  FieldPtr field;                 // null when every root is rational
  std::vector<AlgNumber> roots;   // distinct roots, canonical order
};

// Galois closure of the roots of p; throws DegreeCapExceeded above `cap`.
SplittingField splitting_field(const QPoly& p, int cap = 24);
// Splitting field of p over an existing field (the result contains it). The
// returned `embedding` is the image of the old generator.
struct FieldExtension {
  FieldPtr field;
  AlgNumber old_generator;
  std::vector<AlgNumber> roots;
};
FieldExtension extend_to_split(const FieldPtr& base, const QPoly& p, int cap = 24);
// Re-expresses a in the field `to` given the image of its generator.
AlgNumber embed(const AlgNumber& a, const AlgNumber& generator_image);

// Roots of p lying in the field L (or rational roots when L is null).
std::vector<AlgNumber> roots_in(const QPoly& p, const FieldPtr& L);
std::vector<AlgNumber> roots_in(const UPoly<AlgNumber>& p, const FieldPtr& L);

}  // namespace hyperint
