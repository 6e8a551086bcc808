#pragma once

// Rational differential 1-forms in x1..xn.

#include <stdexcept>
#include <vector>

#include "hyperint/rfunc.hpp"

namespace hyperint {

struct EtaNotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConstantF : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(int n) : c_(static_cast<std::size_t>(n)) {}
  explicit OneForm(std::vector<RFunc> coeffs) : c_(std::move(coeffs)) {}

  int n() const { return static_cast<int>(c_.size()); }
  const RFunc& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  RFunc& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<RFunc>& coeffs() const { return c_; }
  bool is_zero() const;
  FieldPtr field() const;

  friend OneForm operator+(const OneForm& a, const OneForm& b);
  friend OneForm operator-(const OneForm& a, const OneForm& b);
  friend OneForm operator*(const RFunc& f, const OneForm& a);
  OneForm& operator+=(const OneForm& o) { return *this = *this + o; }
  OneForm& operator-=(const OneForm& o) { return *this = *this - o; }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

  // Common denominator of the coefficients (monic).
  MPoly common_denominator() const;
  std::string str() const;

 private:
  std::vector<RFunc> c_;
};

// df in n variables.
OneForm d(const RFunc& f, int n);
// df/f
OneForm dlog(const RFunc& f, int n);

bool is_closed(const OneForm& w);
// Closedness of H*w where eta = dH/H; throws EtaNotClosed.
bool is_closed_twisted(const OneForm& eta, const OneForm& w);

// w -> dF/dx_k * dw/dx_i - dF/dx_i * dw/dx_k, with x_k the eliminated variable.
struct TangentialDerivation {
  int i = 0;  // variable slot
  int k = 0;  // eliminated variable slot
  RFunc Fi, Fk;  // partial derivatives of F
  RFunc apply(const RFunc& w) const { return Fk * w.derivative(i) - Fi * w.derivative(k); }
};

// The n-1 derivations tangent to the level sets of F; the eliminated
// variable is the largest-index variable occurring in F. Throws ConstantF.
std::vector<TangentialDerivation> tangential_derivations(const RFunc& F, int n);
// Largest-index variable slot occurring in F (or -1).
int eliminated_variable(const RFunc& F, int n);

}  // namespace hyperint
