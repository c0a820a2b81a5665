#include "polycone/linalg.hpp"

#include <string>

#include "polycone/errors.hpp"

namespace polycone {

Echelon rref(const RatMat& m, std::size_t cols) {
  RatMat a = m;
  for (const auto& row : a) check_dim(row, cols, "rref");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMat& m, std::size_t cols) { return rref(m, cols).rows.size(); }

std::size_t rank(const RatMat& m) { return m.empty() ? 0 : rank(m, m[0].size()); }

RatMat nullspace(const RatMat& m, std::size_t cols) {
  Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat span_basis(const RatMat& gens, std::size_t cols) { return rref(gens, cols).rows; }

bool in_span(const RatMat& gens, const RatVec& v) {
  if (is_zero(v)) return true;
  if (gens.empty()) return false;
  RatMat ext = gens;
  ext.push_back(v);
  return rank(ext, v.size()) == rank(gens, v.size());
}

std::optional<LinearSolution> solve_linear(const RatMat& m, const RatVec& rhs, std::size_t cols) {
  check_dim(rhs, m.size(), "solve_linear rhs");
  RatMat aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_dim(m[i], cols, "solve_linear row");
    RatVec row = m[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  Echelon e = rref(aug, cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  LinearSolution sol;
  sol.particular = zeros(cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) sol.particular[e.pivots[r]] = e.rows[r][cols];
  sol.nullspace = nullspace(m, cols);
  return sol;
}

std::optional<LinearSolution> solve_linear(const RatMat& m, const RatVec& rhs) {
  if (m.empty()) throw DimensionMismatch("solve_linear: column count unknown for an empty matrix");
  return solve_linear(m, rhs, m[0].size());
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  check_dim(b, n, "solve_square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        if (sgn(a[c][j]) != 0) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat s = b[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(a[i][j]) != 0) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

RatVec project_affine(const RatVec& p, const RatMat& eqs, const RatVec& rhs) {
  const std::size_t n = p.size();
  if (!solve_linear(eqs, rhs, n))
    throw InconsistentSystem("project_affine: equation system has no solution");
  if (eqs.empty()) return p;
  // x = p - A^T mu with A A^T mu = A p - rhs (any solution mu works).
  const std::size_t m = eqs.size();
  RatMat gram(m, RatVec(m));
  RatVec r(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) gram[i][j] = gram[j][i] = dot(eqs[i], eqs[j]);
    r[i] = dot(eqs[i], p) - rhs[i];
  }
  auto mu = solve_linear(gram, r, m);
  if (!mu) throw InconsistentSystem("project_affine: normal equations inconsistent");
  RatVec x = p;
  for (std::size_t i = 0; i < m; ++i) axpy(-mu->particular[i], eqs[i], x);
  return x;
}

}  // namespace polycone
