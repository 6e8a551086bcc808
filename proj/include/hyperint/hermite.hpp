#pragma once

// Hermite reduction and residues with respect to one variable; the other
// variables are treated as constants.

#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperint/rfunc.hpp"

namespace hyperint {

struct NonConstantResidue : std::domain_error {
  using std::domain_error::domain_error;
};

// r = d/dv R + P/Q with Q squarefree in v and deg_v P < deg_v Q.
struct HermiteResult {
  RFunc R;
  MPoly P, Q;
};
HermiteResult hermite_reduce(const RFunc& r, int v);

// Residues of P/Q at the roots of one irreducible factor Qj of Q. The
// residues are the roots of S; `shift` is their mean. Each entry is a
// residue lambda (unshifted) with the gcd G of Qj and P - lambda*dQ/dv.
struct ResidueFactor {
  MPoly Qj;
  QPoly S;
  Rational shift;
  std::vector<std::pair<AlgNumber, MPoly>> entries;
};

struct ResidueData {
  FieldPtr field;  // splitting field of all S (null when the residues are rational)
  std::vector<ResidueFactor> factors;
};

ResidueData extract_residues(const MPoly& P, const MPoly& Q, int v, int field_cap = 24);

// The residue polynomial of Qj: resultant in v of Qj and P - lambda*dQ/dv,
// reduced to its y-free content. Throws NonConstantResidue.
QPoly residue_polynomial(const MPoly& P, const MPoly& Q, const MPoly& Qj, int v);

// gcd over the field of lambda of Qj and P - lambda*dQ/dv.
MPoly residue_gcd(const MPoly& P, const MPoly& Q, const MPoly& Qj, int v, const AlgNumber& lambda);

}  // namespace hyperint
