#pragma once

// Dense univariate polynomials over an exact field T.
//
// T must be default constructible to zero, constructible from int, support
// the field operators, and provide an ADL-visible `is_zero(const T&)`.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hyperint {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const T& v) { return UPoly(std::vector<T>{v}); }
  static UPoly monomial(const T& v, std::size_t d) {
    std::vector<T> c(d + 1, T(0));
    c[d] = v;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lc() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1, T(0));
    c_[i] = v;
    trim();
  }

  UPoly operator-() const {
    std::vector<T> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UPoly(std::move(c));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (hyperint_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const T& s, const UPoly& a) {
    if (hyperint_is_zero(s)) return UPoly();
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
    return UPoly(std::move(c));
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<T> r = a.c_;
    std::vector<T> q(a.c_.size() - b.c_.size() + 1, T(0));
    const T inv = T(1) / b.lc();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      const T& top = r[static_cast<std::size_t>(i) + b.c_.size() - 1];
      if (hyperint_is_zero(top)) continue;
      T f = top * inv;
      q[static_cast<std::size_t>(i)] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(i) + j] = r[static_cast<std::size_t>(i) + j] - f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (T(1) / lc()) * *this;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<T> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(static_cast<int>(i)) * c_[i];
    return UPoly(std::move(c));
  }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  // p(q(x))
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(std::declval<T>()));
    std::vector<R> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(f(v));
    return UPoly<R>(std::move(c));
  }

 private:
  static bool hyperint_is_zero(const T& v) {
    using hyperint::is_zero;
    return is_zero(v);
  }
  void trim() {
    while (!c_.empty() && hyperint_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
  return p.is_zero();
}

template <class T>
UPoly<T> pow(const UPoly<T>& p, unsigned e) {
  UPoly<T> r = UPoly<T>::constant(T(1));
  UPoly<T> b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> ext_gcd(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r0 = a, r1 = b;
  UPoly<T> s0 = UPoly<T>::constant(T(1)), s1;
  UPoly<T> t0, t1 = UPoly<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly<T>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

// Inverse of a modulo m (a, m coprime).
template <class T>
UPoly<T> inverse_mod(const UPoly<T>& a, const UPoly<T>& m) {
  UPoly<T> r0 = a % m, r1 = m;
  UPoly<T> s0 = UPoly<T>::constant(T(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = UPoly<T>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  return ((T(1) / r0.lc()) * s0) % m;
}

// Resultant over a field via the Euclidean remainder sequence.
template <class T>
T resultant(UPoly<T> a, UPoly<T> b) {
  if (a.is_zero() || b.is_zero()) return T(0);
  T acc(1);
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      T r = acc;
      for (int i = 0; i < da; ++i) r = r * b.lc();
      return r;
    }
    auto r = a % b;
    if (r.is_zero()) return T(0);
    int dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc = acc * b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

// Yun squarefree decomposition: returns (f_k, k) with a = lc * prod f_k^k.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree(const UPoly<T>& a) {
  std::vector<std::pair<UPoly<T>, int>> out;
  if (a.degree() <= 0) return out;
  auto f = a.monic();
  auto d = f.derivative();
  auto g = gcd(f, d);
  auto b = f / g;
  auto c = d / g;
  auto dd = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    auto h = gcd(b, dd);
    if (h.degree() > 0) out.emplace_back(h, k);
    b = b / h;
    c = dd / h;
    dd = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace hyperint
