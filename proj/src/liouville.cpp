#include "hyperint/liouville.hpp"

#include "hyperint/connection.hpp"

namespace hyperint {

bool certify(const OneForm& eta, const OneForm& omega, const LiouvilleDecomp& L) {
  const int n = eta.n();
  if (L.exact) return d(L.R, n) + L.R * eta == omega;
  const OneForm lhs = L.T * omega - L.T * d(L.R, n) - (L.T * L.R) * eta;
  return lhs == compose(L.f, L.F) * d(L.F, n);
}

LiouvilleDecomp liouville_decompose(const OneForm& eta, const OneForm& omega, const Options& opt) {
  if (!is_closed_twisted(eta, omega)) throw NotClosedTwisted("H*omega is not closed");
  LiouvilleDecomp out;
  std::optional<RFunc> R;
  try {
    R = solve_exactness(eta, omega, opt);
  } catch (const DegreeBoundExceeded&) {
  }
  if (R) {
    out.exact = true;
    out.R = *R;
    out.T = RFunc(1);
    return out;
  }

  const auto pd = hyperexp_decompose(eta, opt);
  if (!pd) throw InternalInconsistency("H*omega is not exact but H has no decomposition");
  return liouville_along(eta, omega, *pd, opt);
}

LiouvilleDecomp liouville_along(const OneForm& eta, const OneForm& omega, const PullbackDecomp& pd, const Options& opt) {
  const int n = eta.n();
  LiouvilleDecomp out;
  out.F = pd.F;
  out.T = pd.T;
  out.g = pd.g;

  // D(T*R) = T*omega(D) along the level sets of F
  const auto Y = solve_tangential_inhom(tangential_system(out.F, OneForm(n), out.T * omega), opt);
  if (!Y) throw InternalInconsistency("no rational solution along the level sets within the bounds");
  out.R = *Y / out.T;
  const OneForm rest = out.T * omega - out.T * d(out.R, n) - (out.T * out.R) * eta;
  const auto rho = ratio_to_dF(rest, out.F);
  if (!rho) throw InternalInconsistency("remainder is not proportional to dF");
  try {
    out.f = express_in_F(*rho, out.F, opt);
  } catch (const NotAFunctionOfF&) {
    throw InternalInconsistency("remainder is not a function of F");
  }
  if (!certify(eta, omega, out)) throw InternalInconsistency("certification failed");
  return out;
}

}  // namespace hyperint
