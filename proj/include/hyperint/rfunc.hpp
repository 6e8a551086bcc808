#pragma once

// Normalized rational functions num/den: gcd(num, den) = 1 and den has
// leading coefficient 1 in graded lex order. A univariate rational function
// in z is simply an RFunc that only uses kVarZ.

#include <string>

#include "hyperint/mpoly.hpp"

namespace hyperint {

struct ComposePoleCollision : std::domain_error {
  using std::domain_error::domain_error;
};

class RFunc {
 public:
  RFunc() : den_(1) {}
  RFunc(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RFunc(const Rational& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RFunc(const AlgNumber& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RFunc(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RFunc(const MPoly& num, const MPoly& den);

  static RFunc var(int v) { return RFunc(MPoly::var(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  AlgNumber constant_value() const { return num_.constant_value(); }
  bool uses(int v) const { return num_.uses(v) || den_.uses(v); }
  unsigned vars() const { return num_.vars() | den_.vars(); }
  FieldPtr field() const { return common_field(num_.field(), den_.field()); }
  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
  // max(deg num, deg den) in v
  int degree(int v) const { return std::max(num_.degree(v), den_.degree(v)); }

  RFunc operator-() const;
  friend RFunc operator+(const RFunc& a, const RFunc& b);
  friend RFunc operator-(const RFunc& a, const RFunc& b);
  friend RFunc operator*(const RFunc& a, const RFunc& b);
  friend RFunc operator/(const RFunc& a, const RFunc& b);
  RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
  RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
  RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
  RFunc& operator/=(const RFunc& o) { return *this = *this / o; }
  friend bool operator==(const RFunc& a, const RFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RFunc& a, const RFunc& b) { return !(a == b); }
  friend bool operator<(const RFunc& a, const RFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RFunc derivative(int v) const;
  // Substitutes v := value; throws ComposePoleCollision when the denominator vanishes.
  RFunc substitute(int v, const RFunc& value) const;
  RFunc evaluate(int v, const AlgNumber& value) const;
  RFunc permute(const std::array<int, kMaxVars>& perm) const { return RFunc(num_.permute(perm), den_.permute(perm)); }
  RFunc map_coeffs(const std::function<AlgNumber(const AlgNumber&)>& f) const {
    return RFunc(num_.map_coeffs(f), den_.map_coeffs(f));
  }
  RFunc inverse() const;

  std::string str() const;

 private:
  struct Raw {};
  RFunc(Raw, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_, den_;
};

inline bool is_zero(const RFunc& r) { return r.is_zero(); }
RFunc pow(const RFunc& r, long e);

// u(F): substitutes z := F.
RFunc compose(const RFunc& u, const RFunc& F);

std::string to_string(const RFunc& r);

}  // namespace hyperint
