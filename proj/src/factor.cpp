#include "hyperint/factor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "hyperint/factor_uni.hpp"

namespace hyperint {

namespace {

constexpr int kGenVar = kMaxVars - 1;

using APoly = UPoly<AlgNumber>;

int ydeg(const Monomial& m, int x) { return static_cast<int>(m.deg) - m[x]; }

MPoly truncate(const MPoly& p, int x, int k) {
  std::vector<Term> t;
  for (const auto& term : p.terms())
    if (ydeg(term.m, x) <= k) t.push_back(term);
  return MPoly(std::move(t));
}

std::vector<int> used_vars(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

int choose_main_var(const MPoly& f) {
  int best = -1, bd = 0;
  std::size_t bl = 0;
  for (int v : used_vars(f.vars())) {
    const int d = f.degree(v);
    const std::size_t l = f.lcoeff(v).size();
    if (best < 0 || d < bd || (d == bd && l < bl)) {
      best = v;
      bd = d;
      bl = l;
    }
  }
  return best;
}

MPoly evaluate_all(MPoly p, const std::vector<int>& vars, const std::vector<long>& a) {
  for (std::size_t j = 0; j < vars.size(); ++j) p = p.evaluate(vars[j], AlgNumber(a[j]));
  return p;
}

std::vector<MPoly> factor_sqf_rational(const MPoly& f, const FactorOptions& opt);

// Monic factors of a squarefree polynomial primitive in x, of degree >= 2 in x.
std::vector<MPoly> hensel_factor(const MPoly& pp, int x, const FactorOptions& opt) {
  const int d = pp.degree(x);
  auto C = pp.coefficients(x);
  const MPoly l = C[static_cast<std::size_t>(d)];
  // ftil = l^(d-1) pp(x/l), monic in x
  std::vector<MPoly> Ct(static_cast<std::size_t>(d) + 1);
  Ct[static_cast<std::size_t>(d)] = MPoly(1);
  MPoly lp(1);
  for (int k = d - 1; k >= 0; --k) {
    Ct[static_cast<std::size_t>(k)] = C[static_cast<std::size_t>(k)] * lp;
    lp *= l;
  }
  const MPoly ftil = MPoly::from_coefficients(Ct, x);
  std::vector<int> others;
  for (int v : used_vars(pp.vars()))
    if (v != x) others.push_back(v);

  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(d));
  struct Candidate {
    std::vector<long> a;
    std::vector<QPoly> u;
  };
  std::vector<Candidate> good;
  for (int attempt = 0; attempt < 40 && good.size() < 3; ++attempt) {
    std::vector<long> a(others.size(), 0);
    if (attempt > 0) {
      std::uniform_int_distribution<long> dist(-(2 + attempt), 2 + attempt);
      for (auto& v : a) v = dist(rng);
    }
    QPoly f0 = evaluate_all(ftil, others, a).to_univariate(x);
    if (gcd(f0, f0.derivative()).degree() > 0) continue;
    auto fac = factor_rational(f0);
    Candidate c{a, {}};
    for (const auto& [g, m] : fac.factors) c.u.push_back(g.monic());
    if (c.u.size() == 1) return {pp.monic()};
    good.push_back(std::move(c));
  }
  if (good.empty()) throw std::runtime_error("factor: no good evaluation point");
  const Candidate& best = *std::min_element(good.begin(), good.end(), [](const Candidate& p, const Candidate& q) { return p.u.size() < q.u.size(); });

  MPoly F = ftil;
  for (std::size_t j = 0; j < others.size(); ++j)
    if (best.a[j] != 0) F = F.substitute(others[j], MPoly::var(others[j]) + MPoly(static_cast<int>(best.a[j])));
  int B = 0;
  for (const auto& t : F.terms()) B = std::max(B, ydeg(t.m, x));
  if (B > opt.max_total_degree * 4) throw DegreeCapExceeded("factor: lifting bound too large");

  const std::size_t r = best.u.size();
  std::vector<QPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly Pi = QPoly::constant(Rational(1));
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) Pi *= best.u[j];
    s[i] = inverse_mod(Pi % best.u[i], best.u[i]);
  }
  std::vector<MPoly> g(r);
  for (std::size_t i = 0; i < r; ++i) g[i] = MPoly::from_univariate(best.u[i], x);

  for (int k = 1; k <= B; ++k) {
    MPoly prod = g[0];
    for (std::size_t i = 1; i < r; ++i) prod = truncate(prod * g[i], x, k);
    MPoly e = F - prod;
    // group the degree-k part by y-monomial
    std::map<std::vector<int>, std::pair<Monomial, std::vector<Rational>>> parts;
    for (const auto& t : e.terms()) {
      if (ydeg(t.m, x) != k) continue;
      Monomial mu = t.m;
      const int ex = mu[x];
      mu.set(x, 0);
      std::vector<int> key(mu.e.begin(), mu.e.end());
      auto& slot = parts[key];
      slot.first = mu;
      if (static_cast<int>(slot.second.size()) <= ex) slot.second.resize(static_cast<std::size_t>(ex) + 1, Rational(0));
      slot.second[static_cast<std::size_t>(ex)] = t.c.rational();
    }
    if (parts.empty()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Term> delta;
      for (const auto& [key, part] : parts) {
        QPoly c = (QPoly(part.second) * s[i]) % best.u[i];
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (sgn(c[j]) == 0) continue;
          Monomial m = part.first;
          m.set(x, static_cast<int>(j));
          delta.push_back(Term{m, AlgNumber(c[j])});
        }
      }
      g[i] += MPoly(std::move(delta));
    }
  }

  // recombination
  std::vector<MPoly> found;
  std::vector<std::size_t> rem(r);
  for (std::size_t i = 0; i < r; ++i) rem[i] = i;
  MPoly Fcur = F;
  for (std::size_t sz = 1; 2 * sz <= rem.size();) {
    bool hit = false;
    std::vector<std::size_t> idx(sz);
    for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
    while (true) {
      MPoly cand(1);
      for (auto i : idx) cand = truncate(cand * g[rem[i]], x, B);
      MPoly q;
      if (divides(cand, Fcur, &q)) {
        found.push_back(cand);
        Fcur = q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < rem.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(rem[i]);
        rem = next;
        hit = true;
        break;
      }
      // next combination
      std::size_t p = sz;
      while (p > 0 && idx[p - 1] == rem.size() - sz + p - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t i = p; i < sz; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++sz;
  }
  if (!Fcur.is_constant()) found.push_back(Fcur);

  std::vector<MPoly> out;
  for (MPoly H : found) {
    for (std::size_t j = 0; j < others.size(); ++j)
      if (best.a[j] != 0) H = H.substitute(others[j], MPoly::var(others[j]) - MPoly(static_cast<int>(best.a[j])));
    H = H.substitute(x, l * MPoly::var(x));
    out.push_back(primitive_part(H, x).monic());
  }
  return out;
}

std::vector<MPoly> factor_sqf_rational(const MPoly& f, const FactorOptions& opt) {
  if (f.is_constant()) return {};
  const auto vars = used_vars(f.vars());
  if (vars.size() == 1) {
    std::vector<MPoly> out;
    for (const auto& [g, m] : factor_rational(f.to_univariate(vars[0])).factors) out.push_back(MPoly::from_univariate(g, vars[0]).monic());
    return out;
  }
  if (f.total_degree() > opt.max_total_degree) throw DegreeCapExceeded("factor: total degree above cap");
  const int x = choose_main_var(f);
  MPoly c = content(f, x);
  std::vector<MPoly> out = factor_sqf_rational(c, opt);
  MPoly pp = c.is_constant() ? f : divexact(f, c);
  if (pp.degree(x) == 1) {
    out.push_back(pp.monic());
  } else if (pp.vars() == (1u << x)) {
    for (const auto& [g, m] : factor_rational(pp.to_univariate(x)).factors) out.push_back(MPoly::from_univariate(g, x).monic());
  } else {
    auto hs = hensel_factor(pp, x, opt);
    out.insert(out.end(), hs.begin(), hs.end());
  }
  return out;
}

// Coefficients in L written as polynomials in the generator slot.
MPoly lift_generator(const MPoly& p, const FieldPtr& L) {
  std::vector<Term> t;
  for (const auto& term : p.terms()) {
    auto c = term.c.coords(L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) == 0) continue;
      Monomial m = term.m;
      m.set(kGenVar, static_cast<int>(i));
      t.push_back(Term{m, AlgNumber(c[i])});
    }
  }
  return MPoly(std::move(t));
}

bool squarefree_in(const MPoly& N, int x) {
  std::vector<int> others;
  for (int v : used_vars(N.vars()))
    if (v != x) others.push_back(v);
  const int d = N.degree(x);
  std::mt19937_64 rng(97);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<long> a(others.size());
    std::uniform_int_distribution<long> dist(-20, 20);
    for (auto& v : a) v = dist(rng);
    QPoly n0 = evaluate_all(N, others, a).to_univariate(x);
    if (n0.degree() != d) continue;
    if (gcd(n0, n0.derivative()).degree() == 0) return true;
  }
  return gcd(N, N.derivative(x)).degree(x) == 0;
}

std::vector<MPoly> factor_sqf_field(const MPoly& f, const FieldPtr& L, const FactorOptions& opt) {
  if (f.is_constant()) return {};
  const int x = choose_main_var(f);
  MPoly c = content(f, x);
  std::vector<MPoly> out = factor_sqf_field(c, L, opt);
  MPoly pp = c.is_constant() ? f : divexact(f, c);
  if (pp.degree(x) == 1) {
    out.push_back(pp.monic());
    return out;
  }
  const MPoly m = MPoly::from_univariate(L->minpoly(), kGenVar);
  const MPoly fhat = lift_generator(pp, L);
  const AlgNumber alpha = AlgNumber::generator(L);
  for (int step = 0; step < 40; ++step) {
    const int k = (step % 2 ? 1 : -1) * ((step + 1) / 2);
    MPoly g = k == 0 ? fhat : fhat.substitute(x, MPoly::var(x) - MPoly(k) * MPoly::var(kGenVar));
    MPoly N = resultant(m, g, kGenVar);
    if (!squarefree_in(N, x)) continue;
    auto qf = factor_sqf_rational(N, opt);
    if (qf.size() == 1) {
      out.push_back(pp.monic());
      return out;
    }
    MPoly shifted = k == 0 ? pp : pp.substitute(x, MPoly::var(x) - MPoly(AlgNumber(k) * alpha));
    for (const auto& Ni : qf) {
      MPoly h = gcd(shifted, Ni);
      if (k != 0) h = h.substitute(x, MPoly::var(x) + MPoly(AlgNumber(k) * alpha));
      if (!h.is_constant()) out.push_back(h.monic());
    }
    return out;
  }
  throw std::runtime_error("factor: no squarefree norm found");
}

void sort_factors(std::vector<std::pair<MPoly, int>>& f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
}

}  // namespace

std::vector<MPoly> irreducible_factors(const MPoly& f, const FieldPtr& over, const FactorOptions& opt) {
  FieldPtr L = common_field(f.field(), over);
  auto out = L ? factor_sqf_field(f, L, opt) : factor_sqf_rational(f, opt);
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });
  return out;
}

MFactorization factor_irreducible(const MPoly& p, const FieldPtr& over, const FactorOptions& opt) {
  if (p.is_zero()) throw std::domain_error("factor_irreducible: zero polynomial");
  MFactorization out;
  MPoly prod(1);
  for (const auto& [f, k] : squarefree_full(p))
    for (const auto& g : irreducible_factors(f, over, opt)) {
      out.factors.emplace_back(g, k);
      prod *= pow(g, static_cast<unsigned>(k));
    }
  out.unit = p.lc() / prod.lc();
  sort_factors(out.factors);
  return out;
}

AlgNumber embed(const AlgNumber& a, const AlgNumber& generator_image) {
  if (a.is_rational()) return a;
  return evaluate(QPoly(a.coords()), generator_image);
}

std::vector<AlgNumber> roots_in(const QPoly& p, const FieldPtr& L) {
  std::vector<AlgNumber> out;
  if (p.degree() <= 0) return out;
  if (!L) {
    for (const auto& r : rational_roots(p)) out.emplace_back(r);
  } else {
    QPoly sq = QPoly::constant(Rational(1));
    for (const auto& [g, m] : factor_rational(p).factors) sq *= g;
    for (const auto& h : irreducible_factors(MPoly::from_univariate(sq, kVarZ), L)) {
      if (h.degree(kVarZ) != 1) continue;
      out.push_back(-h.constant_term() / h.lcoeff(kVarZ).constant_value());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgNumber> roots_in(const APoly& p, const FieldPtr& L) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Monomial m;
    m.set(kVarZ, static_cast<int>(i));
    t.push_back(Term{m, p[i]});
  }
  MPoly mp(std::move(t));
  std::vector<AlgNumber> out;
  if (mp.degree(kVarZ) <= 0) return out;
  for (const auto& [h, k] : squarefree_full(mp))
    for (const auto& g : irreducible_factors(h, L)) {
      if (g.degree(kVarZ) != 1) continue;
      out.push_back(-g.constant_term() / g.lcoeff(kVarZ).constant_value());
    }
  std::sort(out.begin(), out.end());
  return out;
}

FieldExtension extend_to_split(const FieldPtr& base, const QPoly& p, int cap) {
  QPoly q = QPoly::constant(Rational(1));
  if (p.degree() > 0)
    for (const auto& [g, m] : factor_rational(p).factors) q *= g;

  FieldPtr L = base;
  AlgNumber old_gen = base ? AlgNumber::generator(base) : AlgNumber(0);
  Integer base_coef = base ? 1 : 0;
  std::vector<AlgNumber> betas;
  std::vector<Integer> coefs;
  while (q.degree() > 1) {
    // pick the smallest nonlinear irreducible factor over L
    MPoly pick;
    if (!L) {
      for (const auto& [g, m] : factor_rational(q).factors)
        if (g.degree() >= 2 && (pick.is_zero() || g.degree() < pick.degree(kVarZ))) pick = MPoly::from_univariate(g.monic(), kVarZ);
    } else {
      for (const auto& g : irreducible_factors(MPoly::from_univariate(q, kVarZ), L))
        if (g.degree(kVarZ) >= 2 && (pick.is_zero() || g.degree(kVarZ) < pick.degree(kVarZ))) pick = g;
    }
    if (pick.is_zero()) break;
    if (!L) {
      if (pick.degree(kVarZ) > cap) throw DegreeCapExceeded("splitting field degree above cap");
      auto M = NumberField::make(pick.to_univariate(kVarZ));
      L = M;
      betas = {AlgNumber::generator(L)};
      coefs = {Integer(1)};
      continue;
    }
    const MPoly mL = MPoly::from_univariate(L->minpoly(), kGenVar);
    const MPoly ghat = lift_generator(pick, L);
    bool done = false;
    for (int step = 0; step < 40 && !done; ++step) {
      const int k = (step % 2 ? 1 : -1) * ((step + 1) / 2);
      MPoly gk = k == 0 ? ghat : ghat.substitute(kVarZ, MPoly::var(kVarZ) - MPoly(k) * MPoly::var(kGenVar));
      QPoly N = resultant(mL, gk, kGenVar).to_univariate(kVarZ);
      if (N.degree() > cap) throw DegreeCapExceeded("splitting field degree above cap");
      if (gcd(N, N.derivative()).degree() > 0) continue;
      auto M = NumberField::make(N.monic());
      FieldPtr Mp = M;
      AlgNumber gamma = AlgNumber::generator(Mp);
      // alpha_L inside M: the common root of m_L(t) and g(gamma - k t, t)
      MPoly gt = ghat.substitute(kVarZ, MPoly(gamma) - MPoly(k) * MPoly::var(kGenVar));
      std::vector<AlgNumber> gc(static_cast<std::size_t>(std::max(gt.degree(kGenVar), 0) + 1));
      for (const auto& t : gt.terms()) gc[static_cast<std::size_t>(t.m[kGenVar])] += t.c;
      APoly A = L->minpoly().map([](const Rational& r) { return AlgNumber(r); });
      APoly h = gcd(A, APoly(gc));
      if (h.degree() != 1) continue;
      AlgNumber alphaM = -h[0] / h[1];
      for (auto& b : betas) b = embed(b, alphaM);
      old_gen = embed(old_gen, alphaM);
      betas.push_back(gamma - AlgNumber(k) * alphaM);
      base_coef *= k;
      for (auto& c : coefs) c *= k;
      coefs.push_back(Integer(1));
      L = Mp;
      done = true;
    }
    if (!done) throw std::runtime_error("splitting field: no primitive element found");
  }

  FieldExtension out;
  out.field = L;
  out.old_generator = old_gen;
  out.roots = roots_in(q, L);
  if (L && L != base && !L->is_galois()) {
    // generator images: same integer combination of permuted roots
    std::vector<AlgNumber> base_imgs;
    if (base) {
      if (base->is_galois())
        for (const auto& img : base->automorphisms()) base_imgs.push_back(embed(AlgNumber(base, img), old_gen));
      else
        base_imgs = roots_in(base->minpoly(), L);
    } else {
      base_imgs = {AlgNumber(0)};
    }
    std::vector<std::vector<Rational>> images{AlgNumber::generator(L).coords(L)};
    const std::size_t nr = out.roots.size(), nb = betas.size();
    std::vector<std::size_t> choice(nb, 0);
    for (const auto& b0 : base_imgs) {
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        AlgNumber v = AlgNumber(Rational(base_coef)) * b0;
        for (std::size_t j = 0; j < nb; ++j) v += AlgNumber(Rational(coefs[j])) * out.roots[choice[j]];
        if (evaluate(L->minpoly(), v).zero()) {
          auto c = v.coords(L);
          if (std::find(images.begin(), images.end(), c) == images.end()) images.push_back(c);
        }
        if (static_cast<int>(images.size()) == L->degree()) break;
        std::size_t j = 0;
        while (j < nb && ++choice[j] == nr) choice[j++] = 0;
        if (j == nb) break;
      }
      if (static_cast<int>(images.size()) == L->degree()) break;
    }
    std::const_pointer_cast<NumberField>(L)->set_automorphisms(std::move(images));
  }
  return out;
}

SplittingField splitting_field(const QPoly& p, int cap) {
  auto ext = extend_to_split(nullptr, p, cap);
  return SplittingField{ext.field, ext.roots};
}

}  // namespace hyperint
