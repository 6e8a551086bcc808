#pragma once

// Worked inputs shared by the test binaries.

#include <string>

#include "hyperint/forms.hpp"
#include "hyperint/parse.hpp"

namespace fixtures {

inline hyperint::OneForm form(const std::string& text, int n) {
  hyperint::ParseContext ctx(n);
  auto items = hyperint::parse_form_items(text, ctx);
  items.resize(static_cast<std::size_t>(n));
  return hyperint::OneForm(items);
}

inline const char* kExample1 =
    "form((2*x1^3-12*x1^2*x2-3*x1^2+6*x2^2)/(3*x1^2*(x1^2-2*x2^2)), "
    "4*(3*x1-x2)/(3*(x1^2-2*x2^2)), 1/x3)";

inline std::string example2(int a) {
  return "form(2*(7*x1-2)/(x1^2-2), -4*" + std::to_string(a) + "/(x2^2-2))";
}

// -dH/(2H) for the polynomial vector field of the third example.
inline const char* kExample3Half =
    "form((3*x1^5+6*x1^3*x2^2+3*x1*x2^4-x1^3-3*x1^2*x2-x1*x2^2+x2^3)/(x1^2+x2^2)^3, "
    "(3*x1^4*x2+6*x1^2*x2^3+3*x2^5+x1^3-x1^2*x2-3*x1*x2^2-x2^3)/(x1^2+x2^2)^3)";

inline const char* kExample3X1 =
    "-3*x1^6*x2^2-9*x1^4*x2^4-9*x1^2*x2^6-3*x2^8+2*x1^6-2*x1^5*x2-6*x1^4*x2^2-2*x1^2*x2^4"
    "-6*x1*x2^5-2*x2^6-2*x1^4+4*x1^3*x2+4*x1*x2^3+2*x2^4";
inline const char* kExample3X2 =
    "3*x1^8+9*x1^6*x2^2+9*x1^4*x2^4+3*x1^2*x2^6+2*x1^6+6*x1^5*x2+2*x1^4*x2^2+6*x1^2*x2^4"
    "+2*x1*x2^5-2*x2^6-2*x1^4-4*x1^3*x2-4*x1*x2^3+2*x2^4";

// dH/(2H) of the fourth example.
inline const char* kExample4Half =
    "form((x1+x2)*(x1^2+2*x1*x2-x2^2)/(x1^2+x2^2)^3, -(x1+x2)*(x1^2-2*x1*x2-x2^2)/(x1^2+x2^2)^3)";

}  // namespace fixtures
