#pragma once

// Closed rational 1-forms dH/H with H hyperexponential:
//   H = exp(F0) * A^(1/q) * prod_i F_i^lambda_i

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperint/forms.hpp"
#include "hyperint/options.hpp"

namespace hyperint {

struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HyperexpRep {
  int n = 0;
  RFunc F0;
  int q = 1;
  RFunc A = RFunc(1);
  FieldPtr field;  // field of the lambda_i and of the coefficients of F_i
  std::vector<std::pair<AlgNumber, RFunc>> logs;
};

// dF0 + dA/(q A) + sum lambda_i dF_i/F_i
OneForm log_derivative(const HyperexpRep& h);

// Z-basis of the group generated by the lambdas: lambda_i = sum_j M[i][j] * basis[j].
struct ResidueLattice {
  std::vector<AlgNumber> basis;
  std::vector<std::vector<Integer>> M;
};
ResidueLattice residue_lattice_basis(const std::vector<AlgNumber>& lambdas, const FieldPtr& L);

// Working form after each pass, outermost variable first.
struct IntegrationTrace {
  std::vector<OneForm> after_pass;
};

HyperexpRep rational_integrate(const OneForm& w, const Options& opt = {}, IntegrationTrace* trace = nullptr);

std::string to_string(const HyperexpRep& h);

}  // namespace hyperint
