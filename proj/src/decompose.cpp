#include "hyperint/decompose.hpp"

#include <algorithm>
#include <random>

#include "hyperint/connection.hpp"
#include "hyperint/factor.hpp"
#include "hyperint/linalg.hpp"
#include "hyperint/rational_integration.hpp"

namespace hyperint {

int rational_degree(const RFunc& f) { return std::max(f.num().total_degree(), f.den().total_degree()); }

int max_partial_degree(const RFunc& f) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d = std::max(d, f.degree(v));
  return d;
}

namespace {

std::vector<int> slots_of(const RFunc& f) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVars; ++v)
    if (f.uses(v)) out.push_back(v);
  return out;
}

struct PointSampler {
  std::mt19937 rng{7919};
  std::vector<Rational> next(const std::vector<int>& slots, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> p(kMaxVars, Rational(0));
    for (int v : slots) p[static_cast<std::size_t>(v)] = dist(rng);
    return p;
  }
};

MPoly factor_through(const MPoly& P, const std::vector<Rational>& pt) {
  for (const auto& [f, k] : factor_irreducible(P).factors)
    if (evaluate_at(f, pt) == 0) return f;
  return MPoly();
}

// A representative of the pencil spanned by two of its members.
RFunc pencil_function(const MPoly& A, const MPoly& B) {
  const MPoly a = A - MPoly(A.constant_term());
  const MPoly b = B - MPoly(B.constant_term());
  if (a.monic() == b.monic()) return RFunc(integer_primitive(a));
  std::vector<Monomial> mons;
  for (const auto& t : A.terms()) mons.push_back(t.m);
  for (const auto& t : B.terms()) mons.push_back(t.m);
  std::sort(mons.begin(), mons.end(), grlex_greater);
  mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
  QMatrix m(2, std::vector<Rational>(mons.size()));
  for (int r = 0; r < 2; ++r)
    for (const auto& t : (r == 0 ? A : B).terms()) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(mons.begin(), mons.end(), t.m, grlex_greater) - mons.begin());
      m[static_cast<std::size_t>(r)][pos] = t.c.rational();
    }
  rref(m);
  MPoly r0, r1;
  for (std::size_t j = 0; j < mons.size(); ++j) {
    if (m[0][j] != 0) r0 += MPoly::monomial(mons[j], AlgNumber(m[0][j]));
    if (m[1][j] != 0) r1 += MPoly::monomial(mons[j], AlgNumber(m[1][j]));
  }
  return RFunc(integer_primitive(r0), integer_primitive(r1));
}

RFunc upoly_z(const std::vector<Rational>& c) {
  MPoly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p += AlgNumber(c[i]) * MPoly::var(kVarZ, static_cast<int>(i));
  return RFunc(p);
}

}  // namespace

RFunc express_in_F(const RFunc& phi, const RFunc& F, const Options& opt) {
  if (F.is_constant()) throw ConstantF("express_in_F: constant F");
  if (phi.is_constant()) return phi;
  if (!phi.is_rational() || !F.is_rational()) throw std::invalid_argument("express_in_F: rational coefficients expected");
  std::vector<int> slots = slots_of(phi);
  for (int v : slots_of(F))
    if (std::find(slots.begin(), slots.end(), v) == slots.end()) slots.push_back(v);
  std::sort(slots.begin(), slots.end());
  // phi is a function of F only if dphi and dF are proportional
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      const int a = slots[i], b = slots[j];
      if (phi.derivative(a) * F.derivative(b) != phi.derivative(b) * F.derivative(a))
        throw NotAFunctionOfF(phi.str() + " is not a function of " + F.str());
    }

  PointSampler ps;
  for (int D = 1; D <= opt.max_num_degree; ++D) {
    const std::size_t unknowns = 2 * static_cast<std::size_t>(D) + 2;
    QMatrix M;
    int guard = 0;
    while (M.size() < unknowns + 3 && guard++ < 1000) {
      const auto pt = ps.next(slots, 6 + D);
      const Rational q = evaluate_at(F.den(), pt), dp = evaluate_at(phi.den(), pt);
      if (q == 0 || dp == 0) continue;
      const Rational p = evaluate_at(F.num(), pt), np = evaluate_at(phi.num(), pt);
      // np * sum b_j p^j q^(D-j) - dp * sum a_i p^i q^(D-i) = 0
      std::vector<Rational> pw(static_cast<std::size_t>(D) + 1);
      for (int i = 0; i <= D; ++i) {
        Rational x = 1;
        for (int k = 0; k < i; ++k) x *= p;
        for (int k = i; k < D; ++k) x *= q;
        pw[static_cast<std::size_t>(i)] = x;
      }
      std::vector<Rational> row(unknowns);
      for (int i = 0; i <= D; ++i) {
        row[static_cast<std::size_t>(i)] = -dp * pw[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(D + 1 + i)] = np * pw[static_cast<std::size_t>(i)];
      }
      M.push_back(std::move(row));
    }
    auto ker = kernel(M);
    if (ker.empty()) continue;
    const auto& v = ker.front();
    std::vector<Rational> a(v.begin(), v.begin() + D + 1), b(v.begin() + D + 1, v.end());
    if (std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; })) continue;
    const RFunc f = upoly_z(a) / upoly_z(b);
    try {
      if (compose(f, F) == phi) return f;
    } catch (const ComposePoleCollision&) {
    }
  }
  throw NotAFunctionOfF(phi.str() + " is not a rational function of " + F.str() + " within the degree bound");
}

RationalDecomposition decompose_rational(const RFunc& G, const Options& opt) {
  if (G.is_constant()) throw ConstantF("decompose_rational: constant input");
  if (!G.is_rational()) throw std::invalid_argument("decompose_rational: rational coefficients expected");
  const RationalDecomposition trivial{RFunc::var(kVarZ), G};
  if (rational_degree(G) <= 1) return trivial;
  const auto slots = slots_of(G);
  PointSampler ps;
  auto sample = [&](int bound) {
    for (;;) {
      auto p = ps.next(slots, bound);
      if (evaluate_at(G.den(), p) != 0) return p;
    }
  };
  // The fibre of G through a generic point p contains the fibre of the
  // innermost component F through p as an irreducible factor.
  for (int attempt = 0; attempt < 6; ++attempt) {
    const int bound = 6 + 6 * attempt;
    const auto p1 = sample(bound);
    const Rational c1 = evaluate_at(G.num(), p1) / evaluate_at(G.den(), p1);
    const MPoly level1 = G.num() - AlgNumber(c1) * G.den();
    // special fibre: part of it went to infinity
    if (level1.total_degree() < rational_degree(G)) continue;
    const MPoly A = factor_through(level1, p1);
    if (A.is_zero()) continue;
    if (A.total_degree() >= level1.total_degree()) return trivial;
    MPoly B;
    for (int k = 0; k < 8 && B.is_zero(); ++k) {
      const auto p2 = sample(bound);
      const Rational c2 = evaluate_at(G.num(), p2) / evaluate_at(G.den(), p2);
      const MPoly level2 = G.num() - AlgNumber(c2) * G.den();
      if (c2 == c1 || level2.total_degree() < rational_degree(G)) continue;
      MPoly b = factor_through(level2, p2);
      if (!b.is_zero() && b.monic() != A.monic()) B = b;
    }
    if (B.is_zero()) continue;
    const RFunc F = pencil_function(A, B);
    if (F.is_constant()) continue;
    try {
      RFunc u = express_in_F(G, F, opt);
      if (rational_degree(u) <= 1) return trivial;
      return {u, F};
    } catch (const NotAFunctionOfF&) {
    }
  }
  return trivial;
}

std::optional<RFunc> ratio_to_dF(const OneForm& w, const RFunc& F) {
  const int n = w.n();
  const int k = eliminated_variable(F, n);
  if (k < 0) throw ConstantF("ratio_to_dF: constant F");
  RFunc rho = w[k] / F.derivative(k);
  if (rho * d(F, n) != w) return std::nullopt;
  return rho;
}

bool certify(const OneForm& eta, const PullbackDecomp& p) {
  const int n = eta.n();
  return dlog(p.T, n) + compose(p.g, p.F) * d(p.F, n) == eta;
}

namespace {

RFunc galois_power_sum(const RFunc& Fi, const FieldPtr& L, int m) {
  const RFunc p = pow(Fi, m);
  if (!L) return p;
  if (!L->is_galois()) throw NotGalois("residue field is not Galois");
  RFunc s;
  for (const auto& img : L->automorphisms())
    s += p.map_coeffs([&](const AlgNumber& a) { return apply_automorphism(a, L, img); });
  return s;
}

}  // namespace

std::optional<PullbackDecomp> hyperexp_decompose(const OneForm& eta, const Options& opt) {
  const int n = eta.n();
  const HyperexpRep rep = rational_integrate(eta, opt);
  if (rep.F0.is_constant() && rep.logs.empty()) throw AlgebraicH("H is algebraic");

  RFunc G;
  if (!rep.F0.is_constant()) {
    G = rep.F0;
  } else {
    const int deg = std::max(1, degree_of(rep.field));
    for (const auto& [lam, Fi] : rep.logs) {
      for (int m = 1; m <= deg && G.is_zero(); ++m) {
        RFunc s = galois_power_sum(Fi, rep.field, m);
        if (!s.is_rational()) throw std::logic_error("Galois power sum outside Q(x)");
        if (!s.is_constant()) G = s;
      }
      if (!G.is_zero()) break;
    }
    if (G.is_zero()) return std::nullopt;
  }
  PullbackDecomp out;
  out.F = decompose_rational(G, opt).F;

  const auto T = solve_tangential(tangential_system(out.F, eta, OneForm(n)), opt);
  if (!T) return std::nullopt;
  out.T = *T;
  const auto rho = ratio_to_dF(eta - dlog(out.T, n), out.F);
  if (!rho) return std::nullopt;
  try {
    out.g = express_in_F(*rho, out.F, opt);
  } catch (const NotAFunctionOfF&) {
    return std::nullopt;
  }
  if (!certify(eta, out)) throw std::logic_error("hyperexp_decompose: certification failed");
  return out;
}

}  // namespace hyperint
