#include "hyperint/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "hyperint/linalg.hpp"

namespace hyperint {

std::shared_ptr<NumberField> NumberField::make(QPoly minpoly, std::string name) {
  if (minpoly.degree() < 2) throw std::invalid_argument("NumberField: minpoly must have degree >= 2");
  if (minpoly.lc() != 1) throw std::invalid_argument("NumberField: minpoly must be monic");
  std::shared_ptr<NumberField> f(new NumberField());
  f->minpoly_ = std::move(minpoly);
  f->name_ = std::move(name);
  const int d = f->degree();
  // t^d = -sum m_i t^i; higher powers by shifting
  std::vector<Rational> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -f->minpoly_[static_cast<std::size_t>(i)];
  f->reductions_.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rational> next(static_cast<std::size_t>(d));
    Rational top = cur[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    next[0] = 0;
    if (sgn(top) != 0)
      for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += top * f->reductions_[0][static_cast<std::size_t>(i)];
    f->reductions_.push_back(next);
    cur = std::move(next);
  }
  std::vector<Rational> id(static_cast<std::size_t>(d), Rational(0));
  id[1] = 1;
  f->automorphisms_.push_back(std::move(id));
  return f;
}

int degree_of(const FieldPtr& f) { return f ? f->degree() : 1; }

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly() == b->minpoly();
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!same_field(a, b)) throw FieldMismatch("elements of different number fields");
  // prefer the instance that carries more automorphism data
  return a->automorphisms().size() >= b->automorphisms().size() ? a : b;
}

AlgNumber::AlgNumber(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) {
    q_ = coords.empty() ? Rational(0) : coords[0];
    return;
  }
  coords.resize(static_cast<std::size_t>(field_->degree()), Rational(0));
  for (auto& v : coords) v.canonicalize();
  c_ = std::move(coords);
  normalize();
}

AlgNumber AlgNumber::generator(const FieldPtr& field) {
  if (!field) throw std::invalid_argument("generator of Q");
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
  c[1] = 1;
  return AlgNumber(field, std::move(c));
}

void AlgNumber::normalize() {
  if (!field_) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  q_ = c_[0];
  c_.clear();
  field_.reset();
}

const Rational& AlgNumber::rational() const {
  if (field_) throw std::domain_error("AlgNumber is irrational");
  return q_;
}

std::vector<Rational> AlgNumber::coords(const FieldPtr& in) const {
  if (field_) {
    if (in && !same_field(in, field_)) throw FieldMismatch("coords: wrong field");
    return c_;
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree_of(in)), Rational(0));
  c[0] = q_;
  return c;
}

AlgNumber AlgNumber::promote(const FieldPtr& to) const {
  if (field_ && to && !same_field(field_, to)) throw FieldMismatch("promote: wrong field");
  return *this;
}

AlgNumber operator+(const AlgNumber& a, const AlgNumber& b) {
  if (!a.field_ && !b.field_) return AlgNumber(a.q_ + b.q_);
  FieldPtr f = common_field(a.field_, b.field_);
  auto ca = a.coords(f), cb = b.coords(f);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return AlgNumber(f, std::move(ca));
}

AlgNumber AlgNumber::operator-() const {
  if (!field_) return AlgNumber(Rational(-q_));
  auto c = c_;
  for (auto& v : c) v = -v;
  return AlgNumber(field_, std::move(c));
}

AlgNumber operator-(const AlgNumber& a, const AlgNumber& b) { return a + (-b); }

AlgNumber operator*(const AlgNumber& a, const AlgNumber& b) {
  if (!a.field_ && !b.field_) return AlgNumber(Rational(a.q_ * b.q_));
  if (!a.field_ || !b.field_) {
    const AlgNumber& s = a.field_ ? b : a;
    const AlgNumber& v = a.field_ ? a : b;
    if (sgn(s.q_) == 0) return AlgNumber();
    auto c = v.c_;
    for (auto& x : c) x *= s.q_;
    return AlgNumber(v.field_, std::move(c));
  }
  FieldPtr f = common_field(a.field_, b.field_);
  const int d = f->degree();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(a.c_[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + d);
  for (int k = d; k <= 2 * d - 2; ++k) {
    const Rational& v = prod[static_cast<std::size_t>(k)];
    if (sgn(v) == 0) continue;
    const auto& red = f->power_reduction(k);
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] += v * red[static_cast<std::size_t>(i)];
  }
  return AlgNumber(f, std::move(c));
}

AlgNumber AlgNumber::inverse() const {
  if (!field_) {
    if (sgn(q_) == 0) throw std::domain_error("AlgNumber: division by zero");
    return AlgNumber(Rational(1 / q_));
  }
  QPoly a(c_);
  QPoly inv = inverse_mod(a, field_->minpoly());
  return AlgNumber(field_, inv.coeffs());
}

AlgNumber operator/(const AlgNumber& a, const AlgNumber& b) {
  if (!a.field_ && !b.field_) {
    if (sgn(b.q_) == 0) throw std::domain_error("AlgNumber: division by zero");
    return AlgNumber(Rational(a.q_ / b.q_));
  }
  return a * b.inverse();
}

bool operator==(const AlgNumber& a, const AlgNumber& b) {
  if (!a.field_ || !b.field_) {
    if (a.field_ || b.field_) return false;
    return a.q_ == b.q_;
  }
  if (!same_field(a.field_, b.field_)) throw FieldMismatch("comparing elements of different fields");
  return a.c_ == b.c_;
}

bool operator<(const AlgNumber& a, const AlgNumber& b) {
  if (!a.field_ && !b.field_) return a.q_ < b.q_;
  if (!a.field_) return true;
  if (!b.field_) return false;
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

AlgNumber pow(const AlgNumber& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  AlgNumber r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

QPoly minimal_polynomial(const AlgNumber& a) {
  if (a.is_rational()) return QPoly({Rational(-a.rational()), Rational(1)});
  const FieldPtr& f = a.field();
  const int d = f->degree();
  // columns: coordinates of a^0..a^k; find the first dependency
  std::vector<std::vector<Rational>> powers;
  AlgNumber p(1);
  for (int k = 0; k <= d; ++k) {
    powers.push_back(p.coords(f));
    QMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(powers.size()));
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][j] = powers[j][static_cast<std::size_t>(i)];
    auto ker = kernel(m);
    if (!ker.empty()) {
      QPoly mp(ker[0]);
      return mp.monic();
    }
    p *= a;
  }
  throw std::logic_error("minimal_polynomial: no dependency found");
}

Rational trace(const AlgNumber& a) {
  QPoly m = minimal_polynomial(a);
  return -m.coeff(static_cast<std::size_t>(m.degree() - 1));
}

Rational field_trace(const AlgNumber& a, const FieldPtr& in) {
  FieldPtr f = common_field(a.field(), in);
  if (!f) return a.is_rational() ? a.rational() : Rational(0);
  // trace of the multiplication matrix
  const int d = f->degree();
  Rational tr = 0;
  AlgNumber basis(1);
  AlgNumber gen = AlgNumber::generator(f);
  for (int i = 0; i < d; ++i) {
    tr += (a * basis).coords(f)[static_cast<std::size_t>(i)];
    basis *= gen;
  }
  return tr;
}

AlgNumber evaluate(const QPoly& p, const AlgNumber& a) {
  AlgNumber acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * a + AlgNumber(p[i]);
  return acc;
}

AlgNumber apply_automorphism(const AlgNumber& a, const FieldPtr& field, const std::vector<Rational>& image) {
  if (a.is_rational()) return a;
  AlgNumber g(field, image);
  return evaluate(QPoly(a.coords(field)), g);
}

std::vector<AlgNumber> galois_conjugates(const AlgNumber& a, const FieldPtr& field) {
  FieldPtr f = common_field(a.field(), field);
  if (!f) return {a};
  if (!f->is_galois()) throw NotGalois("field automorphisms unavailable");
  std::vector<AlgNumber> out;
  for (const auto& img : f->automorphisms()) out.push_back(apply_automorphism(a, f, img));
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    Rational c = p[i];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string to_string(const AlgNumber& a) {
  if (a.is_rational()) return a.rational().get_str();
  return "alg(" + to_string(a.field()->minpoly(), "t") + "; " + to_string(QPoly(a.coords()), "t") + ")";
}

}  // namespace hyperint
