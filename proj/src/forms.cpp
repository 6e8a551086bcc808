#include "hyperint/forms.hpp"

namespace hyperint {

bool OneForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

FieldPtr OneForm::field() const {
  FieldPtr f;
  for (const auto& c : c_) f = common_field(f, c.field());
  return f;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("OneForm: dimension mismatch");
  OneForm r(a.n());
  for (int i = 0; i < a.n(); ++i) r[i] = a[i] + b[i];
  return r;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("OneForm: dimension mismatch");
  OneForm r(a.n());
  for (int i = 0; i < a.n(); ++i) r[i] = a[i] - b[i];
  return r;
}

OneForm operator*(const RFunc& f, const OneForm& a) {
  OneForm r(a.n());
  for (int i = 0; i < a.n(); ++i) r[i] = f * a[i];
  return r;
}

MPoly OneForm::common_denominator() const {
  MPoly d(1);
  for (const auto& c : c_) d = lcm(d, c.den());
  return d;
}

std::string OneForm::str() const {
  std::string s = "form(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ", ";
    s += c_[static_cast<std::size_t>(i)].str();
  }
  return s + ")";
}

OneForm d(const RFunc& f, int n) {
  OneForm r(n);
  for (int i = 0; i < n; ++i) r[i] = f.derivative(xvar(i + 1));
  return r;
}

OneForm dlog(const RFunc& f, int n) {
  OneForm r(n);
  // d(N/D)/(N/D) = dN/N - dD/D
  for (int i = 0; i < n; ++i) {
    const int v = xvar(i + 1);
    RFunc t;
    if (f.num().uses(v)) t += RFunc(f.num().derivative(v), f.num());
    if (f.den().uses(v)) t -= RFunc(f.den().derivative(v), f.den());
    r[i] = t;
  }
  return r;
}

bool is_closed(const OneForm& w) {
  for (int i = 0; i < w.n(); ++i)
    for (int j = i + 1; j < w.n(); ++j)
      if (w[j].derivative(xvar(i + 1)) != w[i].derivative(xvar(j + 1))) return false;
  return true;
}

bool is_closed_twisted(const OneForm& eta, const OneForm& w) {
  if (eta.n() != w.n()) throw std::invalid_argument("is_closed_twisted: dimension mismatch");
  if (!is_closed(eta)) throw EtaNotClosed("eta is not closed");
  for (int i = 0; i < w.n(); ++i)
    for (int j = i + 1; j < w.n(); ++j) {
      RFunc lhs = w[j].derivative(xvar(i + 1)) + eta[i] * w[j];
      RFunc rhs = w[i].derivative(xvar(j + 1)) + eta[j] * w[i];
      if (lhs != rhs) return false;
    }
  return true;
}

int eliminated_variable(const RFunc& F, int n) {
  for (int i = n; i >= 1; --i)
    if (F.uses(xvar(i))) return xvar(i);
  return -1;
}

std::vector<TangentialDerivation> tangential_derivations(const RFunc& F, int n) {
  const int k = eliminated_variable(F, n);
  if (k < 0) throw ConstantF("F is constant");
  RFunc Fk = F.derivative(k);
  std::vector<TangentialDerivation> out;
  for (int i = 1; i <= n; ++i) {
    const int v = xvar(i);
    if (v == k) continue;
    out.push_back(TangentialDerivation{v, k, F.derivative(v), Fk});
  }
  return out;
}

}  // namespace hyperint
