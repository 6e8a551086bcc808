#include "hyperint/cohomology.hpp"

#include <algorithm>
#include <map>

#include "hyperint/connection.hpp"
#include "hyperint/factor.hpp"
#include "hyperint/factor_uni.hpp"
#include "hyperint/linalg.hpp"
#include "hyperint/liouville.hpp"

namespace hyperint {

namespace {

RFunc zp(const QPoly& p) { return RFunc(MPoly::from_univariate(p, kVarZ)); }

void require_univariate(const RFunc& f, const char* who) {
  if (!f.is_rational()) throw std::invalid_argument(std::string(who) + ": rational coefficients expected");
  if ((f.vars() & ~(1u << kVarZ)) != 0) throw std::invalid_argument(std::string(who) + ": function of z expected");
}

QPoly unum(const RFunc& f) { return f.num().to_univariate(kVarZ); }
QPoly uden(const RFunc& f) { return f.den().to_univariate(kVarZ); }

int zdegree(const RFunc& f) { return f.is_zero() ? -1000000 : f.num().degree(kVarZ) - f.den().degree(kVarZ); }

int multiplicity(const QPoly& p, QPoly f) {
  int e = 0;
  while (f.degree() >= p.degree() && (f % p).is_zero()) {
    f = f / p;
    ++e;
  }
  return e;
}

// Simple poles of g grouped by irreducible factor p of the denominator, with
// the residue as a polynomial reduced modulo p.
struct SimplePole {
  QPoly p, residue;
};
std::vector<SimplePole> simple_poles(const RFunc& g) {
  std::vector<SimplePole> out;
  const QPoly N = unum(g), D = uden(g);
  if (D.degree() <= 0) return out;
  const QPoly dD = D.derivative();
  for (const auto& [p, e] : factor_rational(D).factors) {
    if (e != 1) continue;
    const QPoly pm = p.monic();
    out.push_back({pm, (N * inverse_mod(dD % pm, pm)) % pm});
  }
  return out;
}

int nvars_of(const std::vector<const MPoly*>& ps) {
  int n = 0;
  for (const MPoly* p : ps)
    for (int v = 0; v < kVarZ; ++v)
      if (p->uses(v)) n = std::max(n, v + 1);
  return n;
}

std::vector<MPoly> prime_factors(const MPoly& p) {
  std::vector<MPoly> out;
  if (p.is_constant()) return out;
  for (const auto& [f, e] : factor_irreducible(p).factors) out.push_back(f);
  return out;
}

bool supported_by(const MPoly& p, const std::vector<MPoly>& primes) {
  for (const auto& f : prime_factors(p))
    if (std::find(primes.begin(), primes.end(), f) == primes.end()) return false;
  return true;
}

void add_unique(std::vector<QPoly>& v, const QPoly& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

OneForm galois_sum(const OneForm& w) {
  const FieldPtr L = w.field();
  if (!L) return w;
  if (!L->is_galois()) throw NotGalois("coefficient field is not Galois");
  OneForm s(w.n());
  for (const auto& img : L->automorphisms()) {
    OneForm c(w.n());
    for (int i = 0; i < w.n(); ++i)
      c[i] = w[i].map_coeffs([&](const AlgNumber& a) { return apply_automorphism(a, L, img); });
    s += c;
  }
  return s;
}

// Indices of a maximal linearly independent subfamily over Q.
std::vector<std::size_t> independent_subset(const std::vector<OneForm>& ws) {
  if (ws.empty()) return {};
  MPoly W(1);
  for (const auto& w : ws) W = lcm(W, w.common_denominator());
  std::vector<std::pair<int, Monomial>> keys;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j)
    for (int i = 0; i < ws[j].n(); ++i)
      for (const auto& t : (ws[j][i] * RFunc(W)).num().terms()) {
        std::pair<int, Monomial> key{i, t.m};
        auto it = std::find(keys.begin(), keys.end(), key);
        std::size_t row = static_cast<std::size_t>(it - keys.begin());
        if (it == keys.end()) keys.push_back(key);
        cols[j].emplace_back(row, t.c.rational());
      }
  QMatrix M(keys.size(), std::vector<Rational>(ws.size()));
  for (std::size_t j = 0; j < ws.size(); ++j)
    for (const auto& [r, c] : cols[j]) M[r][j] = c;
  return rref(M);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Q: return "Q";
    case Family::G2: return "g2";
    case Family::Combined: return "combined";
  }
  return "";
}

KernelShell kernel_shell(const RFunc& g) {
  require_univariate(g, "kernel_shell");
  KernelShell ks{g, RFunc(1)};
  for (const auto& sp : simple_poles(g)) {
    if (sp.residue.degree() > 0 || sp.residue.is_zero()) continue;
    const Rational k = sp.residue.coeff(0);
    if (k.get_den() != 1) continue;
    ks.K -= RFunc(k) * zp(sp.p.derivative()) / zp(sp.p);
    ks.s *= pow(zp(sp.p), k.get_num().get_si());
  }
  return ks;
}

std::vector<RFunc> prop3_basis(const RFunc& g, const QPoly& Q) {
  require_univariate(g, "prop3_basis");
  if (g.is_zero()) throw PreconditionViolated("prop3_basis: g = 0");
  if (kernel_shell(g).K != g) throw PreconditionViolated("prop3_basis: g is not differentially reduced");
  if (zdegree(g) > -2) throw PreconditionViolated("prop3_basis: deg g > -2");
  if (Q.is_zero()) throw PreconditionViolated("prop3_basis: Q = 0");
  const QPoly g2 = uden(g);
  if (gcd(Q, Q.derivative()).degree() > 0) throw PreconditionViolated("prop3_basis: Q is not squarefree");
  if (gcd(Q, g2).degree() > 0) throw PreconditionViolated("prop3_basis: Q and the denominator of g share a root");
  const int d1 = unum(g).degree(), d2 = g2.degree();
  std::vector<RFunc> out;
  const RFunc z = RFunc::var(kVarZ);
  for (int i = 0; i < Q.degree(); ++i) out.push_back(pow(z, i) / zp(Q));
  for (int i = 0; i < d2; ++i)
    if (i != d1) out.push_back(pow(z, i) / zp(g2));
  return out;
}

UnivariateReduction univariate_reduce(const RFunc& f, const RFunc& g, const QPoly& Q) {
  require_univariate(f, "univariate_reduce");
  const auto basis = prop3_basis(g, Q);
  const QPoly g2 = uden(g);
  const QPoly fd = uden(f);

  // pole orders of r
  QPoly W = QPoly::constant(1);
  bool outside = false;
  if (fd.degree() > 0)
    for (const auto& [p0, e] : factor_rational(fd).factors) {
      const QPoly p = p0.monic();
      const int mu = multiplicity(p, g2);
      if (mu == 0 && !(Q % p).is_zero()) outside = true;
      const int k = mu >= 2 ? std::max(e - mu, 0) : e - 1;
      for (int i = 0; i < k; ++i) W *= p;
    }
  const int degN = W.degree() + std::max(zdegree(f) + 1, 0);

  const RFunc z = RFunc::var(kVarZ);
  std::vector<RFunc> parts;
  for (int j = 0; j <= degN; ++j) {
    const RFunc r = pow(z, j) / zp(W);
    parts.push_back(r.derivative(kVarZ) + r * g);
  }
  for (const auto& b : basis) parts.push_back(b);
  MPoly M = f.den();
  for (const auto& p : parts) M = lcm(M, p.den());
  const RFunc Mr(M);

  const std::size_t K = parts.size();
  std::map<int, std::vector<Rational>> rows;
  auto put = [&](const RFunc& e, std::size_t col) {
    const QPoly c = unum(e * Mr);
    for (int i = 0; i <= c.degree(); ++i) {
      auto& row = rows[i];
      if (row.empty()) row.assign(K + 1, Rational(0));
      row[col] += c.coeff(static_cast<std::size_t>(i));
    }
  };
  for (std::size_t j = 0; j < K; ++j) put(parts[j], j);
  put(f, K);
  SparseSystem sys(K);
  for (const auto& [i, row] : rows) {
    SparseRow sr;
    for (std::size_t j = 0; j < K; ++j)
      if (row[j] != 0) sr.emplace_back(j, row[j]);
    sys.add_equation(std::move(sr), row[K]);
  }
  const auto sol = sys.solve();
  if (!sol) {
    if (outside) throw PoleOutsideSupport("univariate_reduce: f has poles outside the support of the basis");
    throw std::logic_error("univariate_reduce: reduction failed");
  }
  UnivariateReduction out;
  QPoly N;
  for (int j = 0; j <= degN; ++j) N.set_coeff(static_cast<std::size_t>(j), (*sol)[static_cast<std::size_t>(j)]);
  out.r = zp(N) / zp(W);
  for (std::size_t k = static_cast<std::size_t>(degN) + 1; k < K; ++k) out.coords.push_back((*sol)[k]);
  return out;
}

Homography normalize_homography(const RFunc& g, const RFunc& F, const MPoly& SD, const Options& opt) {
  const std::vector<MPoly> primes = prime_factors(SD);
  const RFunc z = RFunc::var(kVarZ);
  auto try_h = [&](const RFunc& h, const RFunc& Fp) -> std::optional<Homography> {
    RFunc gp;
    try {
      gp = compose(g, h) * h.derivative(kVarZ);
    } catch (const ComposePoleCollision&) {
      return std::nullopt;
    }
    if (!gp.is_zero() && zdegree(gp) > -2) return std::nullopt;
    if (Fp.den().is_constant() || supported_by(Fp.den(), primes)) return std::nullopt;
    return Homography{gp, Fp, h};
  };
  if (auto r = try_h(z, F)) return *r;
  for (int k = 0; k <= 2 * opt.homography_bound; ++k) {
    const int c = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
    if (auto r = try_h(RFunc(c) + RFunc(1) / z, RFunc(1) / (F - RFunc(c)))) return *r;
  }
  throw NoHomographyFound("no admissible homography within the search bound");
}

std::vector<QPoly> sigma_minimal_polynomials(const RFunc& F, const MPoly& SD) {
  std::vector<QPoly> out;
  const std::vector<MPoly> primes = prime_factors(SD);
  const int n = nvars_of({&F.num(), &F.den(), &SD});
  const auto ds = tangential_poly_derivations(F, n);
  const MPoly t = MPoly::var(kVarT);
  const MPoly pencil = F.num() - t * F.den();
  for (const auto& p : primes) {
    if (divides(p, F.den())) continue;
    bool vertical = true;
    for (const auto& D : ds)
      if (!divides(p, D.apply(p))) vertical = false;
    if (!vertical) continue;
    int v = -1;
    for (int s = 0; s < kVarZ && v < 0; ++s)
      if (p.uses(s)) v = s;
    const QPoly S = univariate_content(resultant(p, pencil, v), kVarT);
    if (S.degree() <= 0) continue;
    for (const auto& [m, e] : factor_rational(S).factors) {
      const MPoly N = resultant(MPoly::from_univariate(m, kVarT), pencil, kVarT);
      if (supported_by(N, primes)) add_unique(out, m.monic());
    }
  }
  // members of the pencil that are constants
  const MPoly a = F.num() - MPoly(F.num().constant_term());
  const MPoly b = F.den() - MPoly(F.den().constant_term());
  if (!b.is_zero() && (a.is_zero() || a.monic() == b.monic())) {
    const AlgNumber c = a.is_zero() ? AlgNumber(0) : a.lc() / b.lc();
    if (!(F.num() - c * F.den()).is_zero()) add_unique(out, QPoly{-c.rational(), Rational(1)});
  }
  std::sort(out.begin(), out.end(), [](const QPoly& x, const QPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.coeffs() < y.coeffs();
  });
  return out;
}

std::vector<AlgNumber> sigma_set(const RFunc& F, const MPoly& S, const MPoly& D, const Options& opt) {
  const auto ms = sigma_minimal_polynomials(F, S * D);
  QPoly prod = QPoly::constant(1);
  for (const auto& m : ms) prod *= m;
  if (prod.degree() <= 0) return {};
  return splitting_field(prod, opt.field_cap).roots;
}

CohomBasis cohomology_basis(const OneForm& eta, const MPoly& S, const Options& opt) {
  const int n = eta.n();
  CohomBasis out;
  const MPoly D = eta.common_denominator();
  if (!S.is_constant() && squarefree_part(S).total_degree() != S.total_degree())
    throw PreconditionViolated("cohomology_basis: S is not squarefree");
  if (!gcd(S, D).is_constant()) throw PreconditionViolated("cohomology_basis: S and the poles of eta share a factor");
  const auto pd = hyperexp_decompose(eta, opt);
  if (!pd) return out;
  const MPoly SD = S * D;

  Homography hm = normalize_homography(pd->g, pd->F, SD, opt);
  RFunc F = hm.F, g = hm.g, T = pd->T;

  const KernelShell ks = kernel_shell(g);
  g = ks.K;
  T *= compose(ks.s, F);

  for (const auto& sp : simple_poles(g)) {
    if (sp.residue.degree() != 0) continue;
    const Rational rho = sp.residue.coeff(0);
    if (rho > 0) continue;
    Integer m = Integer(Rational(-rho).get_num() / Rational(-rho).get_den()) + 1;
    g += RFunc(Rational(m)) * zp(sp.p.derivative()) / zp(sp.p);
    T /= pow(compose(zp(sp.p), F), m.get_si());
  }

  if (zdegree(g) == -1) {
    const Rational m = unum(g).lc() / uden(g).lc();
    const QPoly g2 = uden(g);
    AlgNumber alpha;
    bool found = false;
    // a rational root of multiplicity >= 2 first
    std::vector<std::pair<QPoly, int>> facs = factor_rational(g2).factors;
    for (const auto& [p, e] : facs)
      if (!found && e >= 2 && p.degree() == 1) {
        alpha = AlgNumber(-p.coeff(0) / p.coeff(1));
        found = true;
      }
    if (!found) {
      const auto sps = simple_poles(g);
      for (const auto& [p, e] : facs) {
        if (found || p.degree() < 2) continue;
        bool ok = e >= 2;
        for (const auto& sp : sps)
          if (sp.p == p.monic() && sp.residue.degree() > 0) ok = true;
        if (!ok) continue;
        alpha = splitting_field(p, opt.field_cap).roots.front();
        found = true;
      }
    }
    if (!found) throw NoShiftPoleAvailable("residue at infinity is nonzero and no pole can absorb it");
    const RFunc zma = RFunc::var(kVarZ) - RFunc(alpha);
    g -= RFunc(m) / zma;
    T *= pow(compose(zma, F), m.get_num().get_si());
  }

  QPoly Q = QPoly::constant(1);
  const QPoly g2 = uden(g);
  for (const auto& m : sigma_minimal_polynomials(F, SD))
    if (!(g2 % m).is_zero()) Q *= m;
  const int d1 = g.num().degree(kVarZ), d2 = g2.degree(), dQ = Q.degree();

  out.F = F;
  out.T = T;
  out.g = g;
  out.Q = Q;
  out.decomposed = true;

  const OneForm dF = d(F, n);
  const RFunc QF = compose(zp(Q), F), g2F = compose(zp(g2), F);
  std::vector<OneForm> cand;
  std::vector<std::pair<int, Family>> prov;
  for (int i = 0; i + 2 <= dQ; ++i) {
    cand.push_back(galois_sum((pow(F, i) / (T * QF)) * dF));
    prov.emplace_back(i, Family::Q);
  }
  for (int i = 0; i + 2 <= d2; ++i) {
    if (i == d1) continue;
    cand.push_back(galois_sum((pow(F, i) / (T * g2F)) * dF));
    prov.emplace_back(i, Family::G2);
  }
  if (dQ >= 1) {
    const RFunc c = pow(F, dQ - 1) / (T * QF) - RFunc(g2.lc()) * pow(F, d2 - 1) / (T * g2F);
    cand.push_back(galois_sum(c * dF));
    prov.emplace_back(dQ - 1, Family::Combined);
  }
  for (std::size_t j : independent_subset(cand)) {
    out.forms.push_back(cand[j]);
    out.provenance.push_back(prov[j]);
  }
  return out;
}

std::vector<Rational> cohomology_coordinates(const CohomBasis& basis, const OneForm& eta, const OneForm& omega, const Options& opt) {
  if (!basis.decomposed) return {};
  if (!basis.T.is_rational() || !basis.g.is_rational())
    throw std::invalid_argument("cohomology_coordinates: decomposition with algebraic coefficients");
  const LiouvilleDecomp L = liouville_along(eta, omega, PullbackDecomp{basis.F, basis.T, basis.g}, opt);
  const UnivariateReduction red = univariate_reduce(L.f, basis.g, basis.Q);
  // prop3 coordinates: Q family (deg Q entries), then the g2 family
  const QPoly g2 = uden(basis.g);
  const int dQ = basis.Q.degree(), d1 = basis.g.num().degree(kVarZ), d2 = g2.degree();
  std::vector<Rational> out;
  for (const auto& [i, fam] : basis.provenance) {
    if (fam == Family::Q || fam == Family::Combined) {
      out.push_back(red.coords[static_cast<std::size_t>(i)]);
    } else {
      int pos = dQ;
      for (int k = 0; k < i; ++k)
        if (k != d1) ++pos;
      out.push_back(red.coords[static_cast<std::size_t>(pos)]);
    }
  }
  (void)d2;
  return out;
}

}  // namespace hyperint
