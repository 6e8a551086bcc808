#include "hyperint/hermite.hpp"

#include "hyperint/factor.hpp"

namespace hyperint {

namespace {

using RPoly = UPoly<RFunc>;

RPoly to_rpoly(const MPoly& p, int v) {
  std::vector<RFunc> c;
  for (auto& k : p.coefficients(v)) c.emplace_back(k);
  return RPoly(std::move(c));
}

RFunc from_rpoly(const RPoly& p, int v) {
  RFunc acc;
  const RFunc x = RFunc::var(v);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RFunc integrate_poly(const RPoly& p, int v) {
  std::vector<RFunc> c(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) c[i + 1] = p[i] / RFunc(static_cast<int>(i + 1));
  return from_rpoly(RPoly(std::move(c)), v);
}

// a mod V via a fraction-free pseudo-remainder on MPoly.
RPoly rem_by(const RPoly& a, const MPoly& Vm, int v) {
  MPoly den(1);
  for (const auto& c : a.coeffs()) den = lcm(den, c.den());
  MPoly num;
  for (std::size_t k = 0; k < a.size(); ++k) num += (a[k] * RFunc(den)).num() * MPoly::var(v, static_cast<int>(k));
  const int da = num.degree(v), db = Vm.degree(v);
  MPoly r = prem(num, Vm, v);
  MPoly scale = den;
  if (da >= db) scale *= pow(Vm.lcoeff(v), static_cast<unsigned>(da - db + 1));
  return (RFunc(1) / RFunc(scale)) * to_rpoly(r, v);
}

}  // namespace

// The squarefree decomposition in v is computed on MPoly; only the Bezout
// steps against a repeated factor work in K(y)[v].
HermiteResult hermite_reduce(const RFunc& r, int v) {
  HermiteResult out;
  out.Q = MPoly(1);
  if (r.is_zero()) return out;
  const MPoly c = content(r.den(), v);
  const MPoly Dt = divexact(r.den(), c);
  RPoly N = to_rpoly(r.num(), v), D = to_rpoly(Dt, v);
  N = (RFunc(1) / RFunc(c)) * N;
  auto [q, A] = RPoly::divmod(N, D);
  out.R = integrate_poly(q, v);
  if (A.is_zero()) return out;

  auto sqf = squarefree_factor(Dt, v);
  MPoly Dcur(1);
  for (const auto& [f, k] : sqf) Dcur *= pow(f, static_cast<unsigned>(k));
  // Dt = kappa * Dcur with kappa constant
  const AlgNumber kappa = Dt.lc() / Dcur.lc();
  A = RFunc(AlgNumber(1) / kappa) * A;

  for (const auto& [Vm, i] : sqf) {
    if (i < 2) continue;
    const RPoly V = to_rpoly(Vm, v);
    const MPoly Um = divexact(Dcur, pow(Vm, static_cast<unsigned>(i)));
    const RPoly U = to_rpoly(Um, v);
    const RPoly UVp = to_rpoly(Um * Vm.derivative(v), v);
    const RPoly sinv = inverse_mod(rem_by(UVp, Vm, v), V);
    for (int j = i - 1; j >= 1; --j) {
      RPoly rhs = RFunc(Rational(-1, j)) * A;
      RPoly B = (sinv * rem_by(rhs, Vm, v)) % V;
      RPoly C = (rhs - B * UVp) / V;
      out.R += from_rpoly(B, v) / RFunc(pow(Vm, static_cast<unsigned>(j)));
      A = RFunc(-j) * C - U * B.derivative();
    }
    Dcur = Um * Vm;
  }
  RFunc rest = from_rpoly(A, v) / RFunc(Dcur);
  out.P = rest.num();
  out.Q = rest.den();
  return out;
}

QPoly residue_polynomial(const MPoly& P, const MPoly& Q, const MPoly& Qj, int v) {
  const MPoly lam = MPoly::var(kVarLambda);
  MPoly res = resultant(Qj, P - lam * Q.derivative(v), v);
  if (res.is_zero()) throw std::logic_error("residue_polynomial: vanishing resultant");
  if (!res.is_rational()) throw std::invalid_argument("residue_polynomial: rational input expected");
  const QPoly S = univariate_content(res, kVarLambda);
  if (S.degree() < res.degree(kVarLambda)) throw NonConstantResidue("residue of " + Qj.str() + " depends on the remaining variables");
  return S;
}

MPoly residue_gcd(const MPoly& P, const MPoly& Q, const MPoly& Qj, int v, const AlgNumber& lambda) {
  MPoly g = gcd(Qj, P - lambda * Q.derivative(v));
  return g.monic();
}

ResidueData extract_residues(const MPoly& P, const MPoly& Q, int v, int field_cap) {
  ResidueData out;
  if (!Q.uses(v)) return out;
  QPoly all(std::vector<Rational>{Rational(1)});
  for (const MPoly& Qj : irreducible_factors(squarefree_part(Q))) {
    if (!Qj.uses(v)) continue;
    ResidueFactor f;
    f.Qj = Qj;
    f.S = residue_polynomial(P, Q, Qj, v);
    const int d = f.S.degree();
    f.shift = -f.S[static_cast<std::size_t>(d - 1)] / d;
    QPoly sf = f.S / gcd(f.S, f.S.derivative());
    all = all * sf / gcd(all, sf);
    out.factors.push_back(std::move(f));
  }
  if (all.degree() > 1) out.field = splitting_field(all, field_cap).field;
  for (auto& f : out.factors) {
    QPoly sf = f.S / gcd(f.S, f.S.derivative());
    for (const AlgNumber& lam : roots_in(sf, out.field)) f.entries.emplace_back(lam, residue_gcd(P, Q, f.Qj, v, lam));
  }
  return out;
}

}  // namespace hyperint
