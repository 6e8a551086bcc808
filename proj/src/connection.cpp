#include "hyperint/connection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyperint/factor.hpp"
#include "hyperint/factor_uni.hpp"
#include "hyperint/hermite.hpp"
#include "hyperint/linalg.hpp"

namespace hyperint {

MPoly PolyDerivation::apply(const MPoly& p) const {
  MPoly r;
  for (const auto& [v, c] : terms) r += c * p.derivative(v);
  return r;
}

RFunc PolyDerivation::apply(const RFunc& f) const {
  RFunc r;
  for (const auto& [v, c] : terms) r += RFunc(c) * f.derivative(v);
  return r;
}

RFunc PolyDerivation::apply(const OneForm& w) const {
  RFunc r;
  for (const auto& [v, c] : terms) r += RFunc(c) * w[v];
  return r;
}

std::vector<PolyDerivation> tangential_poly_derivations(const RFunc& F, int n) {
  std::vector<PolyDerivation> out;
  for (const auto& D : tangential_derivations(F, n)) {
    // (Fk d_i - Fi d_k) times den(F)^2, made primitive
    const MPoly& p = F.num();
    const MPoly& q = F.den();
    MPoly ck = p.derivative(D.k) * q - p * q.derivative(D.k);
    MPoly ci = p.derivative(D.i) * q - p * q.derivative(D.i);
    const MPoly g = gcd(ck, ci);
    ck = divexact(ck, g);
    ci = divexact(ci, g);
    PolyDerivation pd;
    pd.terms.emplace_back(D.i, ck);
    pd.terms.emplace_back(D.k, -ci);
    out.push_back(std::move(pd));
  }
  return out;
}

bool LinearPDESystem::satisfied_by(const RFunc& y) const {
  for (std::size_t i = 0; i < derivations.size(); ++i)
    if (derivations[i].apply(y) != a[i] * y + b[i]) return false;
  return true;
}

LinearPDESystem tangential_system(const RFunc& F, const OneForm& eta, const OneForm& theta) {
  LinearPDESystem sys;
  sys.n = eta.n();
  sys.F = F;
  sys.derivations = tangential_poly_derivations(F, sys.n);
  sys.poles = eta.common_denominator() * theta.common_denominator();
  for (const auto& D : sys.derivations) {
    sys.a.push_back(D.apply(eta));
    sys.b.push_back(D.apply(theta));
  }
  return sys;
}

namespace {

std::vector<MPoly> prime_factors(const MPoly& p) {
  if (p.is_constant()) return {};
  return irreducible_factors(squarefree_part(p));
}

int order_in(const MPoly& P, MPoly f) {
  int k = 0;
  MPoly q;
  while (!f.is_zero() && divides(P, f, &q)) {
    f = std::move(q);
    ++k;
  }
  return k;
}

void add_unique(std::vector<MPoly>& v, const MPoly& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

bool is_vertical(const MPoly& P, const std::vector<PolyDerivation>& ds) {
  for (const auto& D : ds)
    if (!divides(P, D.apply(P))) return false;
  return true;
}

// Irreducible components of the level sets of F that meet {P = 0}, for P on
// which F is constant. Empty when P lies in the polar set of F.
std::vector<MPoly> level_mates(const MPoly& P, const RFunc& F) {
  std::vector<MPoly> out;
  int v = -1;
  for (int s = 0; s < kMaxVars && v < 0; ++s)
    if (P.uses(s)) v = s;
  const MPoly t = MPoly::var(kVarT);
  const MPoly pencil = F.num() - t * F.den();
  const QPoly S = univariate_content(resultant(P, pencil, v), kVarT);
  if (S.degree() <= 0) return out;
  for (const auto& [m, e] : factor_rational(S).factors) {
    const MPoly N = resultant(MPoly::from_univariate(m, kVarT), pencil, kVarT);
    for (const auto& f : prime_factors(N)) add_unique(out, f);
  }
  return out;
}

std::vector<Integer> integer_row(const std::vector<Rational>& r) {
  Integer den = 1;
  for (const auto& x : r) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> out;
  for (const auto& x : r) out.push_back(Rational(x * Rational(den)).get_num());
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m.set(v, k);
      rec(v + 1, left - k);
    }
    m.set(v, 0);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), grlex_greater);
  return out;
}

// sum_v A_v * d(N)/dx_v + B * N = C
struct AnsatzEquation {
  std::vector<std::pair<int, MPoly>> A;
  MPoly B, C;
};

// Polynomial N of total degree <= d solving every equation, free
// coefficients set to zero; nullopt when inconsistent.
std::optional<MPoly> solve_polynomial_ansatz(const std::vector<AnsatzEquation>& eqs, int nvars, int d, const Options& opt) {
  const auto mons = monomials_up_to(nvars, d);
  if (static_cast<int>(mons.size()) > opt.max_unknowns)
    throw DegreeBoundExceeded("ansatz with " + std::to_string(mons.size()) + " unknowns");
  SparseSystem sys(mons.size());
  for (const auto& eq : eqs) {
    std::map<Monomial, SparseRow, decltype(&grlex_greater)> rows(&grlex_greater);
    for (std::size_t a = 0; a < mons.size(); ++a) {
      const MPoly m = MPoly::monomial(mons[a], AlgNumber(1));
      MPoly E = eq.B * m;
      for (const auto& [v, c] : eq.A)
        if (mons[a][v] > 0) E += c * m.derivative(v);
      for (const auto& t : E.terms()) rows[t.m].emplace_back(a, t.c.rational());
    }
    std::map<Monomial, Rational, decltype(&grlex_greater)> rhs(&grlex_greater);
    for (const auto& t : eq.C.terms()) rhs[t.m] = t.c.rational();
    for (auto& [mu, row] : rows) {
      auto it = rhs.find(mu);
      Rational r = it == rhs.end() ? Rational(0) : it->second;
      if (it != rhs.end()) rhs.erase(it);
      sys.add_equation(std::move(row), r);
      if (!sys.consistent()) return std::nullopt;
    }
    for (const auto& [mu, r] : rhs)
      if (r != 0) return std::nullopt;
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  MPoly N;
  for (std::size_t a = 0; a < mons.size(); ++a)
    if ((*sol)[a] != 0) N += MPoly::monomial(mons[a], AlgNumber((*sol)[a]));
  return N;
}

int form_degree(const RFunc& f) { return f.num().total_degree() - f.den().total_degree(); }

MPoly top_part(const MPoly& p) {
  std::vector<Term> t;
  for (const auto& x : p.terms())
    if (static_cast<int>(x.m.deg) == p.total_degree()) t.push_back(x);
  return MPoly(std::move(t));
}

}  // namespace

std::optional<RFunc> solve_tangential(const LinearPDESystem& sys, const Options& opt) {
  (void)opt;
  for (const auto& b : sys.b)
    if (!b.is_zero()) throw std::invalid_argument("solve_tangential: inhomogeneous system");
  if (sys.derivations.empty()) return RFunc(1);

  std::vector<MPoly> cand;
  for (const auto& a : sys.a)
    for (const auto& f : prime_factors(a.den())) add_unique(cand, f);
  for (const auto& f : prime_factors(sys.poles)) add_unique(cand, f);
  for (const auto& f : prime_factors(sys.F.num())) add_unique(cand, f);
  for (const auto& f : prime_factors(sys.F.den())) add_unique(cand, f);
  const std::size_t base = cand.size();
  for (std::size_t j = 0; j < base; ++j)
    if (is_vertical(cand[j], sys.derivations) && !divides(cand[j], sys.F.den()))
      for (const auto& m : level_mates(cand[j], sys.F)) add_unique(cand, m);
  std::sort(cand.begin(), cand.end());

  // unknowns: t (coefficient of the right-hand side) then the exponents
  const std::size_t K = cand.size();
  QMatrix M;
  for (std::size_t i = 0; i < sys.derivations.size(); ++i) {
    const auto& D = sys.derivations[i];
    std::vector<RFunc> terms;
    for (const auto& P : cand) terms.push_back(RFunc(D.apply(P), P));
    terms.push_back(-sys.a[i]);
    MPoly W(1);
    for (const auto& t : terms) W = lcm(W, t.den());
    std::map<Monomial, std::vector<Rational>, decltype(&grlex_greater)> rows(&grlex_greater);
    for (std::size_t j = 0; j <= K; ++j) {
      const MPoly e = (terms[j] * RFunc(W)).num();
      const std::size_t col = j == K ? 0 : j + 1;
      for (const auto& t : e.terms()) {
        auto& row = rows[t.m];
        if (row.empty()) row.assign(K + 1, Rational(0));
        row[col] = t.c.rational();
      }
    }
    for (auto& [mu, row] : rows) M.push_back(std::move(row));
  }
  rref(M);
  while (!M.empty() && std::all_of(M.back().begin(), M.back().end(), [](const Rational& x) { return x == 0; })) M.pop_back();

  // integer kernel of M through the Hermite form of [M^T | I]
  const std::size_t r = M.size();
  std::vector<std::vector<Integer>> B(K + 1);
  std::vector<std::vector<Integer>> Mi;
  for (const auto& row : M) Mi.push_back(integer_row(row));
  for (std::size_t u = 0; u <= K; ++u) {
    B[u].assign(r + K + 1, Integer(0));
    for (std::size_t e = 0; e < r; ++e) B[u][e] = Mi[e][u];
    B[u][r + u] = 1;
  }
  std::vector<Integer> sol;
  std::vector<std::vector<Integer>> kern;
  for (const auto& row : hermite_normal_form(B)) {
    bool in_kernel = true;
    for (std::size_t e = 0; e < r; ++e)
      if (row[e] != 0) in_kernel = false;
    if (!in_kernel) continue;
    std::vector<Integer> k(row.begin() + static_cast<long>(r) + 1, row.end());
    if (row[r] == 0) {
      kern.push_back(std::move(k));
    } else if (sol.empty()) {
      if (abs(row[r]) != 1) return std::nullopt;
      if (row[r] < 0)
        for (auto& x : k) x = -x;
      sol = std::move(k);
    }
  }
  if (sol.empty()) return std::nullopt;
  // among the solutions differing by functions of F, keep one of least degree
  auto cost = [&](const std::vector<Integer>& k) {
    Integer c = 0;
    for (std::size_t j = 0; j < K; ++j) c += abs(k[j]) * cand[j].total_degree();
    return c;
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& v : kern)
      for (int sgn_ : {1, -1}) {
        std::vector<Integer> k = sol;
        for (std::size_t j = 0; j < K; ++j) k[j] += sgn_ * v[j];
        if (cost(k) < cost(sol)) {
          sol = std::move(k);
          improved = true;
        }
      }
  }
  RFunc T(1);
  for (std::size_t j = 0; j < K; ++j)
    if (sol[j] != 0) T *= pow(RFunc(cand[j]), sol[j].get_si());
  if (!sys.satisfied_by(T)) throw std::logic_error("solve_tangential: certification failed");
  return T;
}

std::optional<RFunc> solve_tangential_inhom(const LinearPDESystem& sys, const Options& opt) {
  bool homogeneous = true;
  for (const auto& b : sys.b)
    if (!b.is_zero()) homogeneous = false;
  if (homogeneous) return RFunc(0);
  bool no_a = true;
  for (const auto& a : sys.a)
    if (!a.is_zero()) no_a = false;

  std::vector<MPoly> cand;
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    for (const auto& f : prime_factors(sys.a[i].den())) add_unique(cand, f);
    for (const auto& f : prime_factors(sys.b[i].den())) add_unique(cand, f);
  }
  for (const auto& f : prime_factors(sys.poles)) add_unique(cand, f);
  for (const auto& f : prime_factors(sys.F.num())) add_unique(cand, f);
  for (const auto& f : prime_factors(sys.F.den())) add_unique(cand, f);
  const std::size_t base = cand.size();
  std::vector<bool> vertical;
  for (std::size_t j = 0; j < base; ++j) {
    const bool vert = is_vertical(cand[j], sys.derivations);
    if (vert && !divides(cand[j], sys.F.den()))
      for (const auto& m : level_mates(cand[j], sys.F)) add_unique(cand, m);
  }
  std::sort(cand.begin(), cand.end());
  for (const auto& P : cand) vertical.push_back(!no_a || is_vertical(P, sys.derivations));

  // pole orders of the right-hand sides
  std::vector<int> w(cand.size(), 0);
  for (std::size_t j = 0; j < cand.size(); ++j)
    for (const auto& b : sys.b) w[j] = std::max(w[j], order_in(cand[j], b.den()));

  int start = 0;
  for (std::size_t i = 0; i < sys.b.size(); ++i) {
    int dc = 0;
    for (const auto& [v, c] : sys.derivations[i].terms) dc = std::max(dc, c.total_degree());
    if (!sys.b[i].is_zero()) start = std::max(start, form_degree(sys.b[i]) - dc + 1);
  }

  for (int extra = 0; extra <= opt.max_den_power; ++extra) {
    MPoly Q(1);
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const int e = vertical[j] ? w[j] + extra : std::max(w[j] - 1, 0);
      Q *= pow(cand[j], static_cast<unsigned>(e));
    }
    std::vector<AnsatzEquation> eqs;
    for (std::size_t i = 0; i < sys.derivations.size(); ++i) {
      const auto& D = sys.derivations[i];
      // D(N) Q - N D(Q) - a N Q = b Q^2, cleared
      const MPoly L = lcm(sys.a[i].den(), sys.b[i].den());
      AnsatzEquation eq;
      for (const auto& [v, c] : D.terms) eq.A.emplace_back(v, L * c * Q);
      eq.B = -(L * D.apply(Q)) - (sys.a[i] * RFunc(L)).num() * Q;
      eq.C = (sys.b[i] * RFunc(L)).num() * Q * Q;
      eqs.push_back(std::move(eq));
    }
    std::vector<int> degrees;
    for (int d = start, step = 1; d < opt.max_num_degree; d += step, step *= 2) degrees.push_back(d);
    degrees.push_back(opt.max_num_degree);
    for (int dR : degrees) {
      const int d = dR + Q.total_degree();
      if (d < 0) continue;
      auto N = solve_polynomial_ansatz(eqs, sys.n, d, opt);
      if (!N) continue;
      RFunc y(*N, Q);
      if (!sys.satisfied_by(y)) throw std::logic_error("solve_tangential_inhom: certification failed");
      return y;
    }
  }
  return std::nullopt;
}

std::optional<RFunc> solve_exactness(const OneForm& eta, const OneForm& omega, const Options& opt) {
  const int n = eta.n();
  if (omega.is_zero()) return RFunc(0);
  std::vector<MPoly> cand;
  for (int i = 0; i < n; ++i) {
    for (const auto& f : prime_factors(eta[i].den())) add_unique(cand, f);
    for (const auto& f : prime_factors(omega[i].den())) add_unique(cand, f);
  }
  std::sort(cand.begin(), cand.end());

  MPoly Q(1);
  for (const auto& P : cand) {
    int w = 0, s = 0;
    for (int i = 0; i < n; ++i) {
      w = std::max(w, order_in(P, omega[i].den()));
      s = std::max(s, order_in(P, eta[i].den()));
    }
    int e = s >= 2 ? w - s : w - 1;
    if (s == 1) {
      // a positive integer residue of eta along P allows a pole of that order
      for (int i = 0; i < n; ++i) {
        const int v = xvar(i + 1);
        if (!P.uses(v) || order_in(P, eta[i].den()) != 1) continue;
        try {
          for (const auto& rho : rational_roots(residue_polynomial(eta[i].num(), eta[i].den(), P, v)))
            if (rho.get_den() == 1 && rho > 0) e = std::max(e, static_cast<int>(rho.get_num().get_si()));
        } catch (const std::exception&) {
        }
        break;
      }
    }
    if (e > 0) Q *= pow(P, static_cast<unsigned>(e));
  }

  // degree of R at infinity
  int dw = -1000000, delta = -1000000;
  for (int i = 0; i < n; ++i) {
    if (!omega[i].is_zero()) dw = std::max(dw, form_degree(omega[i]));
    if (!eta[i].is_zero()) delta = std::max(delta, form_degree(eta[i]));
  }
  int dR = delta >= 0 ? dw - delta : dw + 1;
  if (delta == -1) {
    // cancellation of the top parts needs eta_top(Euler field) = -deg R
    RFunc c;
    for (int i = 0; i < n; ++i)
      if (!eta[i].is_zero() && form_degree(eta[i]) == -1)
        c += RFunc::var(xvar(i + 1)) * RFunc(top_part(eta[i].num()), top_part(eta[i].den()));
    if (c.is_constant() && c.constant_value().is_rational()) {
      const Rational k = -c.constant_value().rational();
      if (k.get_den() == 1 && k > 0) dR = std::max(dR, static_cast<int>(k.get_num().get_si()));
    }
  }
  // a constant top part of R is invisible in dR
  dR = std::max(dR, 0);
  if (dR > opt.max_num_degree) throw DegreeBoundExceeded("solve_exactness: degree bound " + std::to_string(dR));
  const int deg = dR + Q.total_degree();
  if (deg < 0) return std::nullopt;

  std::vector<AnsatzEquation> eqs;
  for (int i = 0; i < n; ++i) {
    const int v = xvar(i + 1);
    // dN/dx_i Q - N dQ/dx_i + N Q eta_i = omega_i Q^2, cleared
    const MPoly L = lcm(eta[i].den(), omega[i].den());
    AnsatzEquation eq;
    eq.A.emplace_back(v, L * Q);
    eq.B = (eta[i] * RFunc(L)).num() * Q - L * Q.derivative(v);
    eq.C = (omega[i] * RFunc(L)).num() * Q * Q;
    eqs.push_back(std::move(eq));
  }
  auto N = solve_polynomial_ansatz(eqs, n, deg, opt);
  if (!N) return std::nullopt;
  RFunc R(*N, Q);
  if (d(R, n) + R * eta != omega) throw std::logic_error("solve_exactness: certification failed");
  return R;
}

}  // namespace hyperint
