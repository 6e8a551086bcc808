#include "hyperint/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperint {

namespace {

// row += f * other, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, f * other[j].second);
      ++j;
    } else {
      Rational v = row[i].second + f * other[j].second;
      if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseSystem::add_equation(SparseRow row, Rational rhs) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates, drop zeros
  SparseRow clean;
  for (auto& e : row) {
    if (e.first >= n_) throw std::out_of_range("SparseSystem: unknown index");
    if (!clean.empty() && clean.back().first == e.first) {
      clean.back().second += e.second;
      if (sgn(clean.back().second) == 0) clean.pop_back();
    } else if (sgn(e.second) != 0) {
      clean.push_back(std::move(e));
    }
  }
  row = std::move(clean);
  // reduce the leading entry repeatedly
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational f = -row.front().second;
    rhs += f * it->second.rhs;
    row = axpy(row, f, it->second.row);
  }
  if (row.empty()) {
    if (sgn(rhs) != 0) consistent_ = false;
    return;
  }
  Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  rhs *= inv;
  const std::size_t key = row.front().first;
  pivots_.emplace(key, Reduced{std::move(row), std::move(rhs)});
}

std::vector<Rational> SparseSystem::back_substitute(const std::vector<Rational>& free_values) const {
  std::vector<Rational> u = free_values;
  // pivots in decreasing column order: every non-leading entry refers to a larger column
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const auto& red = it->second;
    Rational v = red.rhs;
    for (std::size_t k = 1; k < red.row.size(); ++k) v -= red.row[k].second * u[red.row[k].first];
    u[it->first] = v;
  }
  return u;
}

std::optional<std::vector<Rational>> SparseSystem::solve() const {
  if (!consistent_) return std::nullopt;
  return back_substitute(std::vector<Rational>(n_, Rational(0)));
}

std::vector<std::vector<Rational>> SparseSystem::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  // homogeneous version: rhs treated as zero
  for (std::size_t f = 0; f < n_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Rational> u(n_, Rational(0));
    u[f] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const auto& red = it->second;
      Rational v = 0;
      for (std::size_t k = 1; k < red.row.size(); ++k) v -= red.row[k].second * u[red.row[k].first];
      u[it->first] = v;
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel(const QMatrix& m) {
  std::vector<std::vector<Rational>> out;
  if (m.empty()) return out;
  QMatrix a = m;
  const std::size_t cols = a[0].size();
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // gcd-combine all rows below r into row r on column c
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      while (sgn(rows[i][c]) != 0) {
        if (sgn(rows[r][c]) == 0) {
          std::swap(rows[r], rows[i]);
          continue;
        }
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0) std::swap(rows[r], rows[i]);
      }
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace hyperint
