#pragma once

// int H*omega = int^F f(z) exp(int g) dz + H*R for closed H*omega.

#include <stdexcept>

#include "hyperint/decompose.hpp"

namespace hyperint {

struct NotClosedTwisted : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

struct LiouvilleDecomp {
  bool exact = false;
  RFunc F, R, f, g;
  RFunc T;  // from the underlying decomposition of H (1 when exact)
};

// exact:     dR + R*eta = omega
// otherwise: T*omega - T*dR - T*R*eta = f(F) dF
bool certify(const OneForm& eta, const OneForm& omega, const LiouvilleDecomp& L);

LiouvilleDecomp liouville_decompose(const OneForm& eta, const OneForm& omega, const Options& opt = {});
// The non-exact case with a given decomposition of H.
LiouvilleDecomp liouville_along(const OneForm& eta, const OneForm& omega, const PullbackDecomp& pd, const Options& opt = {});

}  // namespace hyperint
