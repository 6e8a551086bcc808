#pragma once

// Sparse multivariate polynomials over Q or a number field.
//
// Variables live in fixed slots: 0..8 are x1..x9, then z, t, h, lambda and a
// few auxiliary symbols. Terms are kept sorted in decreasing graded
// lexicographic order (x1 > x2 > ...).

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperint/numfield.hpp"

namespace hyperint {

constexpr int kMaxVars = 16;
constexpr int kVarZ = 9;
constexpr int kVarT = 10;
constexpr int kVarH = 11;
constexpr int kVarLambda = 12;
constexpr int kVarAux = 13;

inline int xvar(int i) { return i - 1; }  // x_i -> slot
std::string var_name(int v);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  int operator[](int v) const { return e[static_cast<std::size_t>(v)]; }
  void set(int v, int k) {
    deg = deg - e[static_cast<std::size_t>(v)] + static_cast<std::uint32_t>(k);
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
    m.deg = a.deg + b.deg;
    return m;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  // o / this, assuming divides(o)
  Monomial quotient_of(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(o.e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)]);
    m.deg = o.deg - deg;
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lex: true when a > b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)]) return a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)];
  return false;
}

struct Term {
  Monomial m;
  AlgNumber c;
};

class MPoly {
 public:
  MPoly() = default;
  MPoly(int v) : MPoly(AlgNumber(v)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& v) : MPoly(AlgNumber(v)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const AlgNumber& c);  // NOLINT(google-explicit-constructor)
  // Terms in any order; merged and sorted.
  explicit MPoly(std::vector<Term> terms);

  static MPoly var(int v, int power = 1);
  static MPoly monomial(const Monomial& m, const AlgNumber& c);
  static MPoly from_univariate(const QPoly& p, int v);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  AlgNumber constant_value() const;  // requires is_constant()
  AlgNumber constant_term() const;
  const AlgNumber& lc() const { return t_.front().c; }
  const Monomial& lm() const { return t_.front().m; }

  int degree(int v) const;
  int total_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.front().m.deg); }
  int low_degree(int v) const;
  bool uses(int v) const;
  // Bitmask of variables occurring.
  unsigned vars() const;
  // Common field of all coefficients (null for Q).
  FieldPtr field() const;
  bool is_rational() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const AlgNumber& s, const MPoly& a);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  // Structural total order (for canonical sorting).
  friend bool operator<(const MPoly& a, const MPoly& b);

  MPoly mul_monomial(const Monomial& m, const AlgNumber& c) const;
  // Scaled so that the leading coefficient is 1.
  MPoly monic() const;

  // Coefficients with respect to v: result[k] is the coefficient of v^k.
  std::vector<MPoly> coefficients(int v) const;
  static MPoly from_coefficients(const std::vector<MPoly>& c, int v);
  MPoly lcoeff(int v) const;

  MPoly derivative(int v) const;
  MPoly substitute(int v, const MPoly& value) const;
  MPoly evaluate(int v, const AlgNumber& value) const;
  // Renames variable slots: out slot perm[v] receives v.
  MPoly permute(const std::array<int, kMaxVars>& perm) const;
  MPoly map_coeffs(const std::function<AlgNumber(const AlgNumber&)>& f) const;
  // Univariate image as a rational polynomial (requires only v and Q coefficients).
  QPoly to_univariate(int v) const;

  std::string str() const;

 private:
  void canonicalize();
  std::vector<Term> t_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
MPoly pow(const MPoly& p, unsigned e);

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact quotient a / b; throws NotDivisible.
MPoly divexact(const MPoly& a, const MPoly& b);
// Returns true and sets q when b divides a.
bool divides(const MPoly& b, const MPoly& a, MPoly* q = nullptr);
// lc_v(b)^(deg_v a - deg_v b + 1) * a mod b in v.
MPoly prem(const MPoly& a, const MPoly& b, int v);
// Content with respect to v (gcd of coefficients), monic.
MPoly content(const MPoly& p, int v);
MPoly primitive_part(const MPoly& p, int v);
// Monic gcd (leading coefficient 1 in graded lex).
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);
// Sylvester resultant in v.
MPoly resultant(const MPoly& a, const MPoly& b, int v);
MPoly discriminant(const MPoly& a, int v);
// Squarefree decomposition with respect to v; factors independent of v are
// gathered into a leading content entry of multiplicity 0 when nonconstant.
std::vector<std::pair<MPoly, int>> squarefree_factor(const MPoly& p, int v);
// Squarefree decomposition over all variables: p = c * prod f_k^k.
std::vector<std::pair<MPoly, int>> squarefree_full(const MPoly& p);
// Product of distinct irreducible factors (up to unit).
MPoly squarefree_part(const MPoly& p);
// Primitive integer-coefficient associate for Q polynomials (positive grlex lc).
MPoly integer_primitive(const MPoly& p);
// Value at a rational point indexed by variable slot (rational coefficients only).
Rational evaluate_at(const MPoly& p, const std::vector<Rational>& point);
// gcd of the coefficients of p seen as polynomials in v over the other variables.
QPoly univariate_content(const MPoly& p, int v);

std::string to_string(const MPoly& p);

}  // namespace hyperint
