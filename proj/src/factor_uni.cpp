#include "hyperint/factor_uni.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

namespace hyperint {

namespace {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // low to high, trimmed

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  void trim(ZpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j]));
    }
    trim(c);
    return c;
  }
  // quotient and remainder
  std::pair<ZpPoly, ZpPoly> divmod(ZpPoly a, const ZpPoly& b) const {
    if (b.empty()) throw std::domain_error("Zp division by zero");
    if (a.size() < b.size()) return {{}, a};
    ZpPoly q(a.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    for (std::size_t i = q.size(); i-- > 0;) {
      u64 top = a[i + b.size() - 1];
      if (!top) continue;
      u64 f = mul(top, il);
      q[i] = f;
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = sub(a[i + j], mul(f, b[j]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const { return divmod(a, b).second; }
  ZpPoly monic(ZpPoly a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& v : a) v = mul(v, il);
    return a;
  }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      auto r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZpPoly deriv(const ZpPoly& a) const {
    if (a.size() <= 1) return {};
    ZpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }
  ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& m) const {
    ZpPoly r{1};
    base = mod(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
  // s with s*a = 1 mod m
  ZpPoly invmod(const ZpPoly& a, const ZpPoly& m) const {
    ZpPoly r0 = m, r1 = mod(a, m), s0{}, s1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      auto s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::domain_error("Zp invmod: not coprime");
    u64 il = inv(r0[0]);
    for (auto& v : s0) v = mul(v, il);
    return mod(s0, m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ZpPoly reduce(const std::vector<Integer>& f, u64 p) {
  ZpPoly out(f.size());
  Integer r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<ZpPoly> equal_degree_split(const Zp& F, const ZpPoly& h, int d, std::mt19937_64& rng) {
  if (static_cast<int>(h.size()) - 1 == d) return {h};
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ZpPoly a(h.size() - 1);
    for (auto& v : a) v = rng() % F.p;
    F.trim(a);
    if (a.size() < 2) continue;
    ZpPoly b = F.powmod(a, e, h);
    b = F.sub(b, ZpPoly{1});
    ZpPoly g = F.gcd(b, h);
    if (g.size() > 1 && g.size() < h.size()) {
      auto left = equal_degree_split(F, g, d, rng);
      auto right = equal_degree_split(F, F.monic(F.divmod(h, g).first), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

// Monic irreducible factors of a squarefree monic f modulo p.
std::vector<ZpPoly> factor_mod_p(const Zp& F, ZpPoly f) {
  std::vector<ZpPoly> out;
  std::mt19937_64 rng(12345);
  ZpPoly x{0, 1};
  ZpPoly g = x;
  int d = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * d) {
    g = F.powmod(g, Integer(static_cast<unsigned long>(F.p)), f);
    ZpPoly h = F.gcd(F.sub(g, x), f);
    if (h.size() > 1) {
      auto parts = equal_degree_split(F, h, d, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = F.monic(F.divmod(f, h).first);
      g = F.mod(g, f);
    }
    ++d;
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

Integer mod_sym(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

using ZPoly = std::vector<Integer>;

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return c;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly to_zpoly(const QPoly& q) {
  ZPoly z;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw std::logic_error("to_zpoly: non-integral");
    z.push_back(q[i].get_num());
  }
  return z;
}

// exact integer division test, returns quotient
bool try_divide(const QPoly& f, const QPoly& g, QPoly& quot) {
  auto [q, r] = QPoly::divmod(f, g);
  if (!r.is_zero()) return false;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i].get_den() != 1) return false;
  quot = q;
  return true;
}

std::vector<QPoly> zassenhaus(const QPoly& fq) {
  const int n = fq.degree();
  if (n <= 1) return {fq};
  ZPoly f = to_zpoly(fq);
  const Integer lc = f.back();

  // choose a prime with the fewest modular factors among a few candidates
  u64 best_p = 0;
  std::vector<ZpPoly> best;
  int tried = 0;
  for (u64 p = 1009; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), lc.get_mpz_t(), p);
    if (r == 0) continue;
    Zp F{p};
    ZpPoly fp = reduce(f, p);
    if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
    auto facs = factor_mod_p(F, F.monic(fp));
    ++tried;
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {fq};
  const u64 p = best_p;
  Zp F{p};

  // coefficient bound for factors of lc*f
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * abs(lc) * (n + 1);
  bound <<= static_cast<unsigned long>(n);
  bound *= 2;
  Integer P = p;
  int k = 1;
  while (P <= bound) {
    P *= p;
    ++k;
  }

  // Hensel lifting of monic modular factors
  const std::size_t r = best.size();
  std::vector<ZpPoly> s(r);
  {
    ZpPoly whole{1};
    for (const auto& g : best) whole = F.mul(whole, g);
    for (std::size_t i = 0; i < r; ++i) {
      ZpPoly cof = F.divmod(whole, best[i]).first;
      s[i] = F.invmod(cof, best[i]);
    }
  }
  std::vector<ZPoly> g(r);
  for (std::size_t i = 0; i < r; ++i)
    for (u64 v : best[i]) g[i].emplace_back(static_cast<unsigned long>(v));
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    Integer pj1 = pj * p;
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pj1.get_mpz_t());
    ZPoly fm(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      fm[i] = f[i] * lcinv;
      mpz_fdiv_r(fm[i].get_mpz_t(), fm[i].get_mpz_t(), pj1.get_mpz_t());
    }
    ZPoly prod{Integer(1)};
    for (const auto& gi : g) prod = zmul_mod(prod, gi, pj1);
    ZPoly e(fm.size(), Integer(0));
    for (std::size_t i = 0; i < fm.size(); ++i) {
      Integer v = fm[i] - (i < prod.size() ? prod[i] : Integer(0));
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pj1.get_mpz_t());
      if (mpz_divisible_p(v.get_mpz_t(), pj.get_mpz_t()) == 0) throw std::logic_error("Hensel: error not divisible");
      e[i] = v / pj;
    }
    ZpPoly ep = reduce(e, p);
    for (std::size_t i = 0; i < r; ++i) {
      ZpPoly gp = reduce(g[i], p);
      ZpPoly delta = F.mod(F.mul(ep, s[i]), gp);
      for (std::size_t t = 0; t < delta.size(); ++t) {
        g[i][t] += pj * Integer(static_cast<unsigned long>(delta[t]));
      }
    }
    pj = pj1;
  }

  // recombination
  std::vector<QPoly> result;
  QPoly rest = fq;
  std::vector<std::size_t> alive(r);
  for (std::size_t i = 0; i < r; ++i) alive[i] = i;
  std::size_t subset = 1;
  while (2 * subset <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    while (true) {
      Integer lcr = rest.lc().get_num();
      ZPoly cand{lcr};
      for (auto i : idx) cand = zmul_mod(cand, g[alive[i]], P);
      for (auto& v : cand) v = mod_sym(v, P);
      QPoly cq = primitive_integer(to_qpoly(cand));
      QPoly quot;
      if (cq.degree() > 0 && try_divide(rest, cq, quot)) {
        result.push_back(cq);
        rest = quot;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(alive[i]);
        alive = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = subset;
      while (pos > 0 && idx[pos - 1] == alive.size() - subset + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < subset; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (rest.degree() > 0) result.push_back(primitive_integer(rest));
  return result;
}

Rational pow_ui_rational(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].get_den_mpz_t());
  }
  std::vector<Rational> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    c[i] = p[i] * den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c[i].get_num_mpz_t());
  }
  if (sgn(p.lc()) < 0) num = -num;
  for (auto& v : c) v /= num;
  return QPoly(std::move(c));
}

std::vector<QPoly> factor_squarefree_integer(const QPoly& f0) {
  QPoly f = primitive_integer(f0);
  std::vector<QPoly> out;
  if (f.degree() <= 0) return out;
  if (sgn(f[0]) == 0) {
    out.push_back(QPoly({Rational(0), Rational(1)}));
    f = QPoly::divmod(f, out.back()).first;
    if (f.degree() <= 0) return out;
  }
  auto parts = zassenhaus(f);
  out.insert(out.end(), parts.begin(), parts.end());
  return out;
}

QFactorization factor_rational(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_rational: zero polynomial");
  QFactorization res;
  Rational unit = p.lc();
  QPoly rest = p;
  for (const auto& [sqf, mult] : squarefree(p)) {
    for (auto& fac : factor_squarefree_integer(sqf)) {
      // unit absorbs the ratio between monic and primitive normalization
      unit /= pow_ui_rational(fac.lc(), mult);
      res.factors.emplace_back(std::move(fac), mult);
    }
  }
  (void)rest;
  res.unit = unit;
  std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return std::lexicographical_compare(a.first.coeffs().begin(), a.first.coeffs().end(), b.first.coeffs().begin(),
                                        b.first.coeffs().end());
  });
  return res;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  for (const auto& [f, m] : factor_rational(p).factors) {
    (void)m;
    if (f.degree() == 1) out.push_back(-f[0] / f[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperint
