#include "hyperint/rational_integration.hpp"

#include <algorithm>
#include <numeric>

#include "hyperint/factor.hpp"
#include "hyperint/hermite.hpp"
#include "hyperint/linalg.hpp"

namespace hyperint {

OneForm log_derivative(const HyperexpRep& h) {
  OneForm w = d(h.F0, h.n);
  if (!h.A.is_constant()) w += RFunc(Rational(1, h.q)) * dlog(h.A, h.n);
  for (const auto& [lam, F] : h.logs) w += RFunc(lam) * dlog(F, h.n);
  return w;
}

ResidueLattice residue_lattice_basis(const std::vector<AlgNumber>& lambdas, const FieldPtr& L) {
  ResidueLattice out;
  if (lambdas.empty()) return out;
  const std::size_t D = static_cast<std::size_t>(std::max(1, degree_of(L)));
  std::vector<std::vector<Rational>> coords;
  Integer delta = 1;
  for (const auto& l : lambdas) {
    coords.push_back(l.coords(L));
    coords.back().resize(D);
    for (const auto& c : coords.back()) delta = lcm(delta, Integer(c.get_den()));
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& c : coords) {
    std::vector<Integer> r(D);
    for (std::size_t k = 0; k < D; ++k) {
      Rational s = c[k] * Rational(delta);
      r[k] = s.get_num();
    }
    rows.push_back(std::move(r));
  }
  auto hnf = hermite_normal_form(rows);
  std::vector<std::size_t> piv;
  for (const auto& b : hnf) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    piv.push_back(p);
    std::vector<Rational> c(D);
    for (std::size_t k = 0; k < D; ++k) c[k] = Rational(b[k], delta);
    for (auto& x : c) x.canonicalize();
    out.basis.emplace_back(D == 1 ? AlgNumber(c[0]) : AlgNumber(L, c));
  }
  for (auto r : rows) {
    std::vector<Integer> m(hnf.size());
    for (std::size_t j = 0; j < hnf.size(); ++j) {
      const Integer& p = hnf[j][piv[j]];
      if (r[piv[j]] % p != 0) throw std::logic_error("residue_lattice_basis: vector outside the lattice");
      m[j] = r[piv[j]] / p;
      for (std::size_t k = 0; k < D; ++k) r[k] -= m[j] * hnf[j][k];
    }
    for (const auto& x : r)
      if (x != 0) throw std::logic_error("residue_lattice_basis: vector outside the lattice");
    out.M.push_back(std::move(m));
  }
  return out;
}

namespace {

struct ResidueProblem {
  MPoly P, Q, Qj;
  int v;
  QPoly S;
  Rational shift;
};

RFunc strip_constant(const RFunc& f) { return RFunc(f.num().monic(), f.den()); }

}  // namespace

HyperexpRep rational_integrate(const OneForm& w0, const Options& opt, IntegrationTrace* trace) {
  for (const auto& c : w0.coeffs())
    if (!c.is_rational()) throw std::invalid_argument("rational_integrate: coefficients must be rational");
  if (!is_closed(w0)) throw NotClosed("the form is not closed");
  const int n = w0.n();
  HyperexpRep out;
  out.n = n;
  OneForm w = w0;
  std::vector<std::pair<MPoly, Rational>> apow;
  std::vector<ResidueProblem> problems;

  for (int i = n; i >= 1; --i) {
    const int v = xvar(i);
    if (!w[i - 1].is_zero()) {
      HermiteResult h = hermite_reduce(w[i - 1], v);
      if (!h.R.is_zero()) {
        out.F0 += h.R;
        w -= d(h.R, n);
      }
      ResidueData rd = extract_residues(h.P, h.Q, v, opt.field_cap);
      for (const auto& f : rd.factors) {
        if (f.shift != 0) {
          apow.emplace_back(f.Qj, f.shift);
          w -= RFunc(f.shift) * dlog(RFunc(f.Qj), n);
        }
        OneForm acc(n);
        bool any = false;
        for (const auto& [lam, G] : f.entries) {
          AlgNumber c = lam - AlgNumber(f.shift);
          if (c.zero()) continue;
          acc += RFunc(c) * dlog(RFunc(G), n);
          any = true;
        }
        if (any) {
          w -= acc;
          problems.push_back({h.P, h.Q, f.Qj, v, f.S, f.shift});
        }
      }
      if (!w[i - 1].is_zero()) throw std::logic_error("rational_integrate: pass left a nonzero coefficient");
    }
    if (trace) trace->after_pass.push_back(w);
  }
  if (!w.is_zero()) throw std::logic_error("rational_integrate: nonzero remainder");

  Integer q = 1;
  for (const auto& [Q, e] : apow) q = lcm(q, Integer(e.get_den()));
  out.q = static_cast<int>(q.get_si());
  RFunc A(1);
  for (const auto& [Q, e] : apow) {
    Rational k = e * Rational(q);
    A *= pow(RFunc(Q), k.get_num().get_si());
  }
  out.A = strip_constant(A);

  if (problems.empty()) return out;
  QPoly all(std::vector<Rational>{Rational(1)});
  for (const auto& p : problems) {
    QPoly sf = p.S / gcd(p.S, p.S.derivative());
    all = all * sf / gcd(all, sf);
  }
  FieldPtr L = splitting_field(all, opt.field_cap).field;
  out.field = L;
  std::vector<AlgNumber> lams;
  std::vector<MPoly> gs;
  for (const auto& p : problems) {
    QPoly sf = p.S / gcd(p.S, p.S.derivative());
    for (const AlgNumber& lam : roots_in(sf, L)) {
      AlgNumber c = lam - AlgNumber(p.shift);
      if (c.zero()) continue;
      lams.push_back(c);
      gs.push_back(residue_gcd(p.P, p.Q, p.Qj, p.v, lam));
    }
  }
  ResidueLattice lat = residue_lattice_basis(lams, L);
  for (std::size_t j = 0; j < lat.basis.size(); ++j) {
    RFunc F(1);
    for (std::size_t i = 0; i < lams.size(); ++i) {
      const long e = lat.M[i][j].get_si();
      if (e != 0) F *= pow(RFunc(gs[i]), e);
    }
    if (F.is_constant()) continue;
    out.logs.emplace_back(lat.basis[j], strip_constant(F));
  }
  std::sort(out.logs.begin(), out.logs.end());
  return out;
}

std::string to_string(const HyperexpRep& h) {
  std::string s = "F0 = " + h.F0.str() + "\n";
  s += "q = " + std::to_string(h.q) + "\n";
  s += "A = " + h.A.str() + "\n";
  for (const auto& [lam, F] : h.logs) s += "log: [" + to_string(lam) + ", " + F.str() + "]\n";
  return s;
}

}  // namespace hyperint
