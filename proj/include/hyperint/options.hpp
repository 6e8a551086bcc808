#pragma once

#include <stdexcept>

namespace hyperint {

// Search bounds shared by the algorithms.
struct Options {
  int max_num_degree = 40;  // numerator degree scan in ansatz solvers and express_in_F
  int max_den_power = 6;    // denominator exponents in ansatz solvers
  int field_cap = 24;       // maximal degree of constructed number fields
  int homography_bound = 10;
  int max_unknowns = 2500;  // size of a single ansatz system
};

// An ansatz or scan would need more than the configured bounds allow.
struct DegreeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyperint
