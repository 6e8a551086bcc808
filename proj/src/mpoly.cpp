#include "hyperint/mpoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace hyperint {

namespace {

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = m.deg;
    for (auto v : m.e) h = h * 1000003u ^ v;
    return h;
  }
};

bool term_greater(const Term& a, const Term& b) { return grlex_greater(a.m, b.m); }

// Merge two sorted term lists: a + s*b.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].m, b[j].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].m, a[i].m)) {
      out.push_back(negate_b ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      AlgNumber c = negate_b ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.zero()) out.push_back(Term{a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string var_name(int v) {
  if (v >= 0 && v < 9) return "x" + std::to_string(v + 1);
  switch (v) {
    case kVarZ: return "z";
    case kVarT: return "t";
    case kVarH: return "h";
    case kVarLambda: return "lambda";
    default: return "s" + std::to_string(v - kVarAux);
  }
}

MPoly::MPoly(const AlgNumber& c) {
  if (!c.zero()) t_.push_back(Term{Monomial{}, c});
}

MPoly::MPoly(std::vector<Term> terms) : t_(std::move(terms)) { canonicalize(); }

void MPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.zero()) out.pop_back();
    } else if (!t.c.zero()) {
      out.push_back(std::move(t));
    }
  }
  t_ = std::move(out);
}

MPoly MPoly::var(int v, int power) {
  Monomial m;
  m.set(v, power);
  return monomial(m, AlgNumber(1));
}

MPoly MPoly::monomial(const Monomial& m, const AlgNumber& c) {
  MPoly p;
  if (!c.zero()) p.t_.push_back(Term{m, c});
  return p;
}

MPoly MPoly::from_univariate(const QPoly& p, int v) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    Monomial m;
    m.set(v, static_cast<int>(i));
    t.push_back(Term{m, AlgNumber(p[i])});
  }
  return MPoly(std::move(t));
}

AlgNumber MPoly::constant_value() const {
  if (t_.empty()) return AlgNumber();
  if (!is_constant()) throw std::domain_error("MPoly: not constant");
  return t_[0].c;
}

AlgNumber MPoly::constant_term() const {
  if (!t_.empty() && t_.back().m.deg == 0) return t_.back().c;
  return AlgNumber();
}

int MPoly::degree(int v) const {
  if (t_.empty()) return -1;
  int d = 0;
  for (const auto& t : t_) d = std::max(d, t.m[v]);
  return d;
}

int MPoly::low_degree(int v) const {
  if (t_.empty()) return -1;
  int d = t_[0].m[v];
  for (const auto& t : t_) d = std::min(d, t.m[v]);
  return d;
}

bool MPoly::uses(int v) const {
  for (const auto& t : t_)
    if (t.m[v]) return true;
  return false;
}

unsigned MPoly::vars() const {
  unsigned mask = 0;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.m[i]) mask |= 1u << i;
  return mask;
}

FieldPtr MPoly::field() const {
  FieldPtr f;
  for (const auto& t : t_) f = common_field(f, t.c.field());
  return f;
}

bool MPoly::is_rational() const {
  for (const auto& t : t_)
    if (!t.c.is_rational()) return false;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.t_ = merge_add(a.t_, b.t_, false);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.t_ = merge_add(a.t_, b.t_, true);
  return r;
}

MPoly MPoly::mul_monomial(const Monomial& m, const AlgNumber& c) const {
  if (c.zero()) return MPoly();
  MPoly r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    AlgNumber v = t.c * c;
    if (!v.zero()) r.t_.push_back(Term{t.m * m, std::move(v)});
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.size() == 1) return b.mul_monomial(a.t_[0].m, a.t_[0].c);
  if (b.size() == 1) return a.mul_monomial(b.t_[0].m, b.t_[0].c);
  const MPoly& s = a.size() <= b.size() ? a : b;
  const MPoly& l = a.size() <= b.size() ? b : a;
  MPoly r;
  if (s.is_rational() && l.is_rational()) {
    std::unordered_map<Monomial, Rational, MonoHash> acc;
    acc.reserve(s.size() * l.size());
    Rational tmp;
    for (const auto& ts : s.t_) {
      const Rational& cs = ts.c.rational();
      for (const auto& tl : l.t_) {
        tmp = cs * tl.c.rational();
        acc[ts.m * tl.m] += tmp;
      }
    }
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (sgn(c) != 0) r.t_.push_back(Term{m, AlgNumber(c)});
  } else {
    std::unordered_map<Monomial, AlgNumber, MonoHash> acc;
    acc.reserve(s.size() * l.size());
    for (const auto& ts : s.t_)
      for (const auto& tl : l.t_) {
        auto& slot = acc[ts.m * tl.m];
        slot = slot + ts.c * tl.c;
      }
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.zero()) r.t_.push_back(Term{m, c});
  }
  std::sort(r.t_.begin(), r.t_.end(), term_greater);
  return r;
}

MPoly operator*(const AlgNumber& s, const MPoly& a) { return a.mul_monomial(Monomial{}, s); }

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i) {
    if (a.t_[i].m != b.t_[i].m) return false;
    const AlgNumber &x = a.t_[i].c, &y = b.t_[i].c;
    if (x.is_rational() != y.is_rational()) return false;
    if (!(x == y)) return false;
  }
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.t_[i].m != b.t_[i].m) return grlex_greater(b.t_[i].m, a.t_[i].m);
    if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c;
  }
  return a.t_.size() < b.t_.size();
}

MPoly MPoly::monic() const {
  if (t_.empty() || lc().one()) return *this;
  return lc().inverse() * *this;
}

std::vector<MPoly> MPoly::coefficients(int v) const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(std::max(degree(v), 0) + 1));
  for (const auto& t : t_) {
    Monomial m = t.m;
    const int k = m[v];
    m.set(v, 0);
    parts[static_cast<std::size_t>(k)].push_back(Term{m, t.c});
  }
  std::vector<MPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    MPoly q;
    q.t_ = std::move(p);  // dropping one variable keeps the order within a slice
    out.push_back(std::move(q));
  }
  if (t_.empty()) out.clear();
  return out;
}

MPoly MPoly::from_coefficients(const std::vector<MPoly>& c, int v) {
  std::vector<Term> t;
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& term : c[k].t_) {
      Monomial m = term.m;
      m.set(v, m[v] + static_cast<int>(k));
      t.push_back(Term{m, term.c});
    }
  return MPoly(std::move(t));
}

MPoly MPoly::lcoeff(int v) const {
  const int d = degree(v);
  std::vector<Term> t;
  for (const auto& term : t_)
    if (term.m[v] == d) {
      Monomial m = term.m;
      m.set(v, 0);
      t.push_back(Term{m, term.c});
    }
  return MPoly(std::move(t));
}

MPoly MPoly::derivative(int v) const {
  std::vector<Term> t;
  for (const auto& term : t_) {
    const int k = term.m[v];
    if (k == 0) continue;
    Monomial m = term.m;
    m.set(v, k - 1);
    t.push_back(Term{m, term.c * AlgNumber(k)});
  }
  return MPoly(std::move(t));
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
  if (!uses(v)) return *this;
  auto c = coefficients(v);
  MPoly acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * value + c[k];
  return acc;
}

MPoly MPoly::evaluate(int v, const AlgNumber& value) const {
  if (!uses(v)) return *this;
  auto c = coefficients(v);
  MPoly acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = value * acc + c[k];
  return acc;
}

MPoly MPoly::permute(const std::array<int, kMaxVars>& perm) const {
  std::vector<Term> t;
  t.reserve(t_.size());
  for (const auto& term : t_) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i)
      if (term.m[i]) m.set(perm[static_cast<std::size_t>(i)], m[perm[static_cast<std::size_t>(i)]] + term.m[i]);
    t.push_back(Term{m, term.c});
  }
  return MPoly(std::move(t));
}

MPoly MPoly::map_coeffs(const std::function<AlgNumber(const AlgNumber&)>& f) const {
  std::vector<Term> t;
  t.reserve(t_.size());
  for (const auto& term : t_) t.push_back(Term{term.m, f(term.c)});
  return MPoly(std::move(t));
}

QPoly MPoly::to_univariate(int v) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(v), 0) + 1), Rational(0));
  for (const auto& term : t_) {
    if (term.m.deg != static_cast<std::uint32_t>(term.m[v])) throw std::domain_error("to_univariate: other variables present");
    c[static_cast<std::size_t>(term.m[v])] = term.c.rational();
  }
  return QPoly(std::move(c));
}

namespace {

std::string coeff_str(const AlgNumber& a) {
  if (a.is_rational()) return a.rational().get_str();
  return to_string(a);
}

}  // namespace

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : t_) {
    AlgNumber c = term.c;
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      const int k = term.m[i];
      if (!k) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      os << coeff_str(c);
    } else {
      if (!c.one()) os << coeff_str(c) << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string to_string(const MPoly& p) { return p.str(); }

MPoly pow(const MPoly& p, unsigned e) {
  MPoly r(1), b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return b.constant_value().inverse() * a;
  if (b.size() == 1) {
    std::vector<Term> t;
    t.reserve(a.size());
    AlgNumber inv = b.lc().inverse();
    for (const auto& term : a.terms()) {
      if (!b.lm().divides(term.m)) throw NotDivisible("divexact: monomial does not divide");
      t.push_back(Term{b.lm().quotient_of(term.m), term.c * inv});
    }
    MPoly q(std::move(t));
    return q;
  }
  for (int v = 0; v < kMaxVars; ++v)
    if (b.degree(v) > a.degree(v)) throw NotDivisible("divexact: degree");
  AlgNumber inv = b.lc().inverse();
  std::vector<Term> q;
  std::map<Monomial, AlgNumber, decltype(&grlex_greater)> r(&grlex_greater);
  for (const auto& t : a.terms()) r.emplace(t.m, t.c);
  const auto& bt = b.terms();
  while (!r.empty()) {
    auto it = r.begin();
    if (!b.lm().divides(it->first)) throw NotDivisible("divexact: not divisible");
    Monomial qm = b.lm().quotient_of(it->first);
    AlgNumber qc = it->second * inv;
    r.erase(it);
    for (std::size_t k = 1; k < bt.size(); ++k) {
      Monomial m = bt[k].m * qm;
      auto [pos, fresh] = r.try_emplace(m);
      pos->second -= bt[k].c * qc;
      if (pos->second.zero()) r.erase(pos);
    }
    q.push_back(Term{qm, std::move(qc)});
  }
  return MPoly(std::move(q));
}

bool divides(const MPoly& b, const MPoly& a, MPoly* q) {
  try {
    MPoly r = divexact(a, b);
    if (q) *q = std::move(r);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

MPoly prem(const MPoly& a, const MPoly& b, int v) {
  const int db = b.degree(v);
  if (db < 0) throw std::domain_error("prem: zero divisor");
  int da = a.degree(v);
  if (da < db) return a;
  auto B = b.coefficients(v);
  const MPoly& lb = B.back();
  auto R = a.coefficients(v);
  int e = da - db + 1;
  while (!R.empty() && static_cast<int>(R.size()) - 1 >= db) {
    const int dr = static_cast<int>(R.size()) - 1;
    MPoly lr = R.back();
    for (auto& c : R) c = c * lb;
    for (int k = 0; k <= db; ++k) R[static_cast<std::size_t>(dr - db + k)] -= lr * B[static_cast<std::size_t>(k)];
    while (!R.empty() && R.back().is_zero()) R.pop_back();
    --e;
  }
  MPoly r = MPoly::from_coefficients(R, v);
  if (e > 0) r = pow(lb, static_cast<unsigned>(e)) * r;
  return r;
}

MPoly content(const MPoly& p, int v) {
  if (p.is_zero()) return MPoly();
  if (!p.uses(v)) return p.monic();
  auto c = p.coefficients(v);
  // smallest coefficients first
  std::vector<const MPoly*> nz;
  for (const auto& x : c)
    if (!x.is_zero()) nz.push_back(&x);
  std::sort(nz.begin(), nz.end(), [](const MPoly* a, const MPoly* b) { return a->size() < b->size(); });
  MPoly g;
  for (const MPoly* x : nz) {
    g = gcd(g, *x);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly primitive_part(const MPoly& p, int v) {
  if (p.is_zero()) return p;
  return divexact(p, content(p, v));
}

namespace {

using APoly = UPoly<AlgNumber>;

APoly to_apoly(const MPoly& p, int v) {
  std::vector<AlgNumber> c(static_cast<std::size_t>(std::max(p.degree(v), 0) + 1));
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.m[v])] = t.c;
  return APoly(std::move(c));
}

MPoly from_apoly(const APoly& p, int v) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].zero()) continue;
    Monomial m;
    m.set(v, static_cast<int>(i));
    t.push_back(Term{m, p[i]});
  }
  return MPoly(std::move(t));
}

int single_var(unsigned mask) {
  if (mask == 0 || (mask & (mask - 1))) return -1;
  int v = 0;
  while (!(mask & 1u)) {
    mask >>= 1;
    ++v;
  }
  return v;
}

}  // namespace

namespace {

Integer max_norm(const MPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer c = abs(t.c.rational().get_num());
    if (c > m) m = c;
  }
  return m;
}

Integer integer_content(const MPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.rational().get_num_mpz_t());
  return g;
}

MPoly scale_down(const MPoly& p, const Integer& c) {
  return p.map_coeffs([&](const AlgNumber& x) { return AlgNumber(Rational(x.rational().get_num() / c)); });
}

// p = sum_i g_i * xi^i with symmetric coefficient images, read back in v.
MPoly interpolate_adic(MPoly e, const Integer& xi, int v) {
  const Integer half = xi / 2;
  MPoly out;
  int i = 0;
  while (!e.is_zero()) {
    MPoly g = e.map_coeffs([&](const AlgNumber& x) {
      Integer r = x.rational().get_num() % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      return AlgNumber(Rational(r));
    });
    e = (e - g).map_coeffs([&](const AlgNumber& x) { return AlgNumber(Rational(x.rational().get_num() / xi)); });
    out += g * MPoly::var(v, i);
    ++i;
  }
  return out;
}

// Heuristic gcd of integer polynomials; nullopt when it gives up.
std::optional<MPoly> heugcd(MPoly a, MPoly b) {
  const Integer ca = integer_content(a), cb = integer_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MPoly(Rational(c));
  a = scale_down(a, ca);
  b = scale_down(b, cb);
  const unsigned mask = a.vars() | b.vars();
  int v = 0;
  while (!(mask & (1u << v))) ++v;
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const int deg = std::max(a.degree(v), b.degree(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (static_cast<long>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * deg > 2000000) return std::nullopt;
    const AlgNumber x{Rational(xi)};
    auto g = heugcd(a.evaluate(v, x), b.evaluate(v, x));
    if (g) {
      MPoly G = interpolate_adic(*g, xi, v);
      if (!G.is_zero()) {
        G = scale_down(G, integer_content(G));
        if (divides(G, a) && divides(G, b)) return AlgNumber(Rational(c)) * G;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  const unsigned ma = a.vars(), mb = b.vars();
  if ((ma & mb) == 0) return MPoly(1);
  if (a == b) return a.monic();
  const int sv = single_var(ma | mb);
  if (sv >= 0) {
    if (a.is_rational() && b.is_rational()) {
      if (auto h = heugcd(integer_primitive(a), integer_primitive(b))) return h->monic();
      return MPoly::from_univariate(gcd(a.to_univariate(sv), b.to_univariate(sv)), sv);
    }
    return from_apoly(gcd(to_apoly(a, sv), to_apoly(b, sv)), sv);
  }
  // a variable present in only one argument lets us reduce to contents
  for (int v = 0; v < kMaxVars; ++v) {
    const unsigned bit = 1u << v;
    if ((ma & bit) && !(mb & bit)) return gcd(content(a, v), b);
    if ((mb & bit) && !(ma & bit)) return gcd(a, content(b, v));
  }
  if (a.is_rational() && b.is_rational()) {
    if (auto h = heugcd(integer_primitive(a), integer_primitive(b))) return h->monic();
  }
  int v = -1, best = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!((ma & mb) & (1u << i))) continue;
    const int d = std::max(a.degree(i), b.degree(i));
    if (v < 0 || d < best) {
      v = i;
      best = d;
    }
  }
  MPoly ca = content(a, v), cb = content(b, v);
  MPoly c = gcd(ca, cb);
  MPoly pa = divexact(a, ca), pb = divexact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  // cheap exits
  MPoly q;
  if (divides(pb, pa, &q)) return (c * pb).monic();
  MPoly g;
  for (;;) {
    MPoly r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = MPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
    pb = pb.is_rational() ? integer_primitive(pb) : pb.monic();
  }
  return (c * primitive_part(g, v)).monic();
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return (divexact(a, gcd(a, b)) * b).monic();
}

MPoly resultant(const MPoly& a0, const MPoly& b0, int v) {
  if (a0.is_zero() || b0.is_zero()) return MPoly();
  MPoly a = a0, b = b0;
  int s = 1;
  if (a.degree(v) < b.degree(v)) {
    if ((a.degree(v) * b.degree(v)) % 2) s = -1;
    std::swap(a, b);
  }
  if (b.degree(v) == 0) return pow(b, static_cast<unsigned>(a.degree(v)));
  MPoly ca = content(a, v), cb = content(b, v);
  a = divexact(a, ca);
  b = divexact(b, cb);
  MPoly t = pow(ca, static_cast<unsigned>(b.degree(v))) * pow(cb, static_cast<unsigned>(a.degree(v)));
  MPoly g(1), h(1);
  for (;;) {
    const int da = a.degree(v), db = b.degree(v);
    const int delta = da - db;
    if (da % 2 && db % 2) s = -s;
    MPoly r = prem(a, b, v);
    a = std::move(b);
    b = divexact(r, g * pow(h, static_cast<unsigned>(delta)));
    g = a.lcoeff(v);
    if (delta >= 1) h = divexact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (b.is_zero()) return MPoly();
    if (b.degree(v) == 0) {
      const int d = a.degree(v);
      MPoly res = divexact(pow(b, static_cast<unsigned>(d)), pow(h, static_cast<unsigned>(d - 1)));
      return AlgNumber(s) * t * res;
    }
  }
}

MPoly discriminant(const MPoly& a, int v) { return resultant(a, a.derivative(v), v); }

namespace {

void merge_factor(std::vector<std::pair<MPoly, int>>& out, const MPoly& f, int k) {
  if (f.is_constant()) return;
  for (auto& [g, m] : out)
    if (m == k) {
      g = (g * f).monic();
      return;
    }
  out.emplace_back(f.monic(), k);
}

}  // namespace

std::vector<std::pair<MPoly, int>> squarefree_factor(const MPoly& p, int v) {
  if (p.is_zero()) throw std::domain_error("squarefree_factor: zero");
  std::vector<std::pair<MPoly, int>> out;
  if (p.is_constant()) return out;
  if (!p.uses(v)) {
    for (int w = 0; w < kMaxVars; ++w)
      if (p.uses(w)) return squarefree_factor(p, w);
  }
  MPoly c = content(p, v);
  MPoly f = divexact(p, c);
  MPoly df = f.derivative(v);
  MPoly g = gcd(f, df);
  MPoly b = divexact(f, g);
  MPoly d = divexact(df, g) - b.derivative(v);
  int i = 1;
  while (b.degree(v) > 0) {
    MPoly ai = gcd(b, d);
    b = divexact(b, ai);
    d = divexact(d, ai) - b.derivative(v);
    if (!ai.is_constant()) out.emplace_back(ai.monic(), i);
    ++i;
  }
  if (!c.is_constant())
    for (const auto& [h, k] : squarefree_factor(c, v)) merge_factor(out, h, k);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

std::vector<std::pair<MPoly, int>> squarefree_full(const MPoly& p) {
  for (int w = 0; w < kMaxVars; ++w)
    if (p.uses(w)) return squarefree_factor(p, w);
  return {};
}

MPoly squarefree_part(const MPoly& p) {
  MPoly r(1);
  for (const auto& [f, k] : squarefree_full(p)) r *= f;
  return r;
}

MPoly integer_primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    const Rational& c = t.c.rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& t : p.terms()) {
    Rational c = t.c.rational() * den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.lc().rational()) < 0) scale = -scale;
  return AlgNumber(scale) * p;
}

Rational evaluate_at(const MPoly& p, const std::vector<Rational>& point) {
  Rational acc = 0;
  for (const auto& t : p.terms()) {
    Rational m = t.c.rational();
    for (int v = 0; v < kMaxVars; ++v) {
      const int k = t.m[v];
      if (k == 0) continue;
      mpz_class a, b;
      mpz_pow_ui(a.get_mpz_t(), point[static_cast<std::size_t>(v)].get_num_mpz_t(), static_cast<unsigned long>(k));
      mpz_pow_ui(b.get_mpz_t(), point[static_cast<std::size_t>(v)].get_den_mpz_t(), static_cast<unsigned long>(k));
      m *= Rational(a, b);
    }
    acc += m;
  }
  acc.canonicalize();
  return acc;
}

QPoly univariate_content(const MPoly& p, int v) {
  std::map<Monomial, std::vector<Rational>, decltype(&grlex_greater)> groups(&grlex_greater);
  for (const auto& t : p.terms()) {
    Monomial key = t.m;
    const int k = key[v];
    key.set(v, 0);
    auto& c = groups[key];
    if (c.size() <= static_cast<std::size_t>(k)) c.resize(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = t.c.rational();
  }
  QPoly g;
  for (auto& [m, c] : groups) g = gcd(g, QPoly(c));
  return g.monic();
}

}  // namespace hyperint
