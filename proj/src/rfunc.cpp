#include "hyperint/rfunc.hpp"

namespace hyperint {

RFunc::RFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("RFunc: zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = divexact(num, g);
    den_ = divexact(den, g);
  }
  if (!den_.lc().one()) {
    AlgNumber inv = den_.lc().inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RFunc RFunc::operator-() const { return RFunc(Raw{}, -num_, den_); }

RFunc operator+(const RFunc& a, const RFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) return RFunc(RFunc::Raw{}, a.num_ + b.num_, MPoly(1));
  if (a.is_polynomial()) return RFunc(RFunc::Raw{}, a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_polynomial()) return RFunc(RFunc::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
  MPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) return RFunc(RFunc::Raw{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  MPoly ad = divexact(a.den_, g), bd = divexact(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RFunc();
  MPoly g2 = gcd(num, g);
  MPoly den = ad * b.den_;
  if (!g2.is_constant()) {
    num = divexact(num, g2);
    den = divexact(den, g2);
  }
  return RFunc(RFunc::Raw{}, std::move(num), std::move(den));
}

RFunc operator-(const RFunc& a, const RFunc& b) { return a + (-b); }

RFunc operator*(const RFunc& a, const RFunc& b) {
  if (a.is_zero() || b.is_zero()) return RFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RFunc(RFunc::Raw{}, a.num_ * b.num_, MPoly(1));
  MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  MPoly an = g1.is_constant() ? a.num_ : divexact(a.num_, g1);
  MPoly bd = g1.is_constant() ? b.den_ : divexact(b.den_, g1);
  MPoly bn = g2.is_constant() ? b.num_ : divexact(b.num_, g2);
  MPoly ad = g2.is_constant() ? a.den_ : divexact(a.den_, g2);
  MPoly den = ad * bd;
  MPoly num = an * bn;
  if (!den.lc().one()) {
    AlgNumber inv = den.lc().inverse();
    num = inv * num;
    den = inv * den;
  }
  return RFunc(RFunc::Raw{}, std::move(num), std::move(den));
}

RFunc RFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RFunc: division by zero");
  MPoly n = den_, d = num_;
  AlgNumber inv = d.lc().inverse();
  return RFunc(Raw{}, inv * n, inv * d);
}

RFunc operator/(const RFunc& a, const RFunc& b) { return a * b.inverse(); }

RFunc pow(const RFunc& r, long e) {
  if (e < 0) return pow(r.inverse(), -e);
  // coprimality is preserved by powers
  return RFunc(pow(r.num(), static_cast<unsigned>(e)), pow(r.den(), static_cast<unsigned>(e)));
}

RFunc RFunc::derivative(int v) const {
  if (!uses(v)) return RFunc();
  if (is_polynomial()) return RFunc(Raw{}, num_.derivative(v), den_);
  // (n/d)' = (n'd - nd')/d^2; divide through by gcd(d, d')
  MPoly dd = den_.derivative(v);
  MPoly g = gcd(den_, dd);
  MPoly dg = divexact(den_, g);
  MPoly num = num_.derivative(v) * dg - num_ * divexact(dd, g);
  return RFunc(num, dg * den_);
}

RFunc RFunc::substitute(int v, const RFunc& value) const {
  if (!uses(v)) return *this;
  if (value.is_polynomial()) {
    MPoly d = den_.substitute(v, value.num());
    if (d.is_zero()) throw ComposePoleCollision("substitution hits a pole");
    return RFunc(num_.substitute(v, value.num()), d);
  }
  const int d = degree(v);
  auto homog = [&](const MPoly& p) {
    auto c = p.coefficients(v);
    MPoly acc;
    MPoly qpow(1);
    std::vector<MPoly> qp(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
      qp[static_cast<std::size_t>(k)] = qpow;
      qpow *= value.den();
    }
    MPoly ppow(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) acc += c[k] * ppow * qp[static_cast<std::size_t>(d) - k];
      ppow *= value.num();
    }
    return acc;
  };
  MPoly n = homog(num_), dn = homog(den_);
  if (dn.is_zero()) throw ComposePoleCollision("substitution hits a pole");
  return RFunc(n, dn);
}

RFunc RFunc::evaluate(int v, const AlgNumber& value) const {
  MPoly d = den_.evaluate(v, value);
  if (d.is_zero()) throw ComposePoleCollision("evaluation at a pole");
  return RFunc(num_.evaluate(v, value), d);
}

RFunc compose(const RFunc& u, const RFunc& F) { return u.substitute(kVarZ, F); }

std::string RFunc::str() const {
  if (is_polynomial()) return (AlgNumber(1) / den_.constant_value() * num_).str();
  std::string n = num_.str(), d = den_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || !den_.lc().one() || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_string(const RFunc& r) { return r.str(); }

}  // namespace hyperint
