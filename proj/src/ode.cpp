#include "hyperint/ode.hpp"

namespace hyperint {

bool certify(const RFunc& P, const RFunc& Q, const Linearization& lin) {
  const int x = xvar(1), y = xvar(2);
  auto flow = [&](const RFunc& f) { return P * f.derivative(x) + Q * f.derivative(y); };
  if (flow(lin.Y) + (compose(lin.a, lin.X) + compose(lin.b, lin.X) * lin.Y) * flow(lin.X) != RFunc(0)) return false;
  return !(lin.X.derivative(x) * lin.Y.derivative(y) - lin.X.derivative(y) * lin.Y.derivative(x)).is_zero();
}

Linearization linearize(const RFunc& P, const RFunc& Q, const OneForm& eta, const Options& opt) {
  if (eta.n() != 2) throw std::invalid_argument("linearize: planar systems only");
  const OneForm omega(std::vector<RFunc>{Q, -P});
  LiouvilleDecomp L;
  try {
    L = liouville_decompose(eta, omega, opt);
  } catch (const AlgebraicH&) {
    throw FirstIntegralDegenerate("the integrating factor is algebraic");
  }
  if (L.exact) throw FirstIntegralDegenerate("the first integral is the exponential of a Darbouxian function");
  Linearization lin{L.F, L.R * L.T, L.f, L.g};
  if (!certify(P, Q, lin)) throw InternalInconsistency("linearization failed its certification");
  return lin;
}

Linearization linearize(const RFunc& V, const OneForm& eta, const Options& opt) { return linearize(RFunc(1), V, eta, opt); }

}  // namespace hyperint
