#pragma once

// Algebraic number fields L = Q[t]/(m(t)) and their elements.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperint/upoly.hpp"

namespace hyperint {

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotGalois : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using QPoly = UPoly<Rational>;

class NumberField;
// A null FieldPtr stands for Q itself.
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  // minpoly must be monic and irreducible over Q of degree >= 2.
  static std::shared_ptr<NumberField> make(QPoly minpoly, std::string name = "alpha");

  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const std::string& name() const { return name_; }

  // Images of the generator under the field automorphisms (identity first),
  // as coordinate vectors. Complete (size == degree) when the field is Galois.
  const std::vector<std::vector<Rational>>& automorphisms() const { return automorphisms_; }
  bool is_galois() const { return static_cast<int>(automorphisms_.size()) == degree(); }
  void set_automorphisms(std::vector<std::vector<Rational>> images) { automorphisms_ = std::move(images); }

  // Coordinates of t^k for degree <= k < 2*degree - 1.
  const std::vector<Rational>& power_reduction(int k) const { return reductions_[static_cast<std::size_t>(k - degree())]; }

 private:
  NumberField() = default;
  QPoly minpoly_;
  std::string name_;
  std::vector<std::vector<Rational>> automorphisms_;
  std::vector<std::vector<Rational>> reductions_;
};

int degree_of(const FieldPtr& f);
bool same_field(const FieldPtr& a, const FieldPtr& b);

class AlgNumber {
 public:
  AlgNumber() = default;
  AlgNumber(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  AlgNumber(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  AlgNumber(const Rational& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  AlgNumber(FieldPtr field, std::vector<Rational> coords);

  static AlgNumber generator(const FieldPtr& field);

  // Null for rational values (whatever field they were computed in).
  const FieldPtr& field() const { return field_; }
  bool is_rational() const { return !field_; }
  const Rational& rational() const;
  // Power-basis coordinates in `in` (or in the own field when null).
  std::vector<Rational> coords(const FieldPtr& in = nullptr) const;
  AlgNumber promote(const FieldPtr& to) const;

  friend AlgNumber operator+(const AlgNumber& a, const AlgNumber& b);
  friend AlgNumber operator-(const AlgNumber& a, const AlgNumber& b);
  friend AlgNumber operator*(const AlgNumber& a, const AlgNumber& b);
  friend AlgNumber operator/(const AlgNumber& a, const AlgNumber& b);
  AlgNumber operator-() const;
  AlgNumber& operator+=(const AlgNumber& o) { return *this = *this + o; }
  AlgNumber& operator-=(const AlgNumber& o) { return *this = *this - o; }
  AlgNumber& operator*=(const AlgNumber& o) { return *this = *this * o; }
  AlgNumber& operator/=(const AlgNumber& o) { return *this = *this / o; }
  AlgNumber inverse() const;

  friend bool operator==(const AlgNumber& a, const AlgNumber& b);
  friend bool operator!=(const AlgNumber& a, const AlgNumber& b) { return !(a == b); }
  // Canonical total order: rationals first, then by coordinate vector.
  friend bool operator<(const AlgNumber& a, const AlgNumber& b);

  bool zero() const { return !field_ && sgn(q_) == 0; }
  bool one() const { return !field_ && q_ == 1; }

 private:
  void normalize();
  FieldPtr field_;
  Rational q_;
  std::vector<Rational> c_;
};

inline bool is_zero(const AlgNumber& a) { return a.zero(); }
AlgNumber pow(const AlgNumber& a, long e);

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// Monic minimal polynomial over Q.
QPoly minimal_polynomial(const AlgNumber& a);
// Minus the second-leading coefficient of the monic minimal polynomial.
Rational trace(const AlgNumber& a);
// Tr_{L/Q}, the sum of all embeddings.
Rational field_trace(const AlgNumber& a, const FieldPtr& in = nullptr);
// sigma(a) for the automorphism with the given generator image.
AlgNumber apply_automorphism(const AlgNumber& a, const FieldPtr& field, const std::vector<Rational>& image);
// sigma(a) for every automorphism of the (Galois) field.
std::vector<AlgNumber> galois_conjugates(const AlgNumber& a, const FieldPtr& field = nullptr);

// Evaluates a rational polynomial at an algebraic number.
AlgNumber evaluate(const QPoly& p, const AlgNumber& a);

std::string to_string(const AlgNumber& a);
std::string to_string(const QPoly& p, const std::string& var = "t");

}  // namespace hyperint
