#pragma once

// Decomposition of rational functions G = u(F) and of hyperexponential
// functions H = T * exp(int^F g).

#include <optional>
#include <stdexcept>

#include "hyperint/forms.hpp"
#include "hyperint/options.hpp"

namespace hyperint {

struct NotAFunctionOfF : std::domain_error {
  using std::domain_error::domain_error;
};
struct AlgebraicH : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// max(total degree of num, total degree of den)
int rational_degree(const RFunc& f);
// max over the variables of the partial degrees of num and den
int max_partial_degree(const RFunc& f);

struct RationalDecomposition {
  RFunc u;  // in z
  RFunc F;
};

// G = u(F) with F indecomposable over Q; u = z and F = G when G itself is
// indecomposable. F is normalized up to homography: a polynomial without
// constant term when the pencil of F contains constants.
RationalDecomposition decompose_rational(const RFunc& G, const Options& opt = {});

// f in Q(z) with f(F) = phi; throws NotAFunctionOfF.
RFunc express_in_F(const RFunc& phi, const RFunc& F, const Options& opt = {});

// dH/H = dT/T + g(F) dF
struct PullbackDecomp {
  RFunc F, T, g;
};

bool certify(const OneForm& eta, const PullbackDecomp& p);

// nullopt when H admits no such decomposition. Throws AlgebraicH.
std::optional<PullbackDecomp> hyperexp_decompose(const OneForm& eta, const Options& opt = {});

// The form w = rho dF is proportional to dF; returns rho, or nullopt.
std::optional<RFunc> ratio_to_dF(const OneForm& w, const RFunc& F);

}  // namespace hyperint
