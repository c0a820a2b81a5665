#include <algorithm>

#include "polycone/errors.hpp"
#include "polycone/linalg.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

namespace {

// Calls visit(subset) for subsets of {0..n-1} by (cardinality, lex) until it
// returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t max_size, F&& visit) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (visit(idx)) return true;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

Projection project_polyhedron(const RatVec& p, const HPolyhedron& poly) {
  const std::size_t n = poly.dim;
  check_dim(p, n, "project_polyhedron");
  if (poly.has_strict()) throw PolyconeError("project_polyhedron: strict rows are not allowed");
  if (!feasible(poly)) throw EmptyPolyhedron("project_polyhedron: polyhedron is empty");
  if (poly.contains(p)) return {p, Rat(0), 0};

  // Independent equality rows (the system is consistent: poly is nonempty).
  RatMat eq_rows;
  RatVec eq_rhs;
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < poly.relations.size(); ++i) {
    const auto& r = poly.relations[i];
    if (r.degeneracy() != LinRel::Degeneracy::Proper) continue;
    if (r.kind == RelKind::EQ) {
      RatMat trial = eq_rows;
      trial.push_back(r.normal);
      if (rank(trial, n) == trial.size()) {
        eq_rows = std::move(trial);
        eq_rhs.push_back(r.rhs);
      }
    } else {
      ineq.push_back(i);
    }
  }

  // KKT: p - x = sum mu_i a_i over E and W, mu_W >= 0, x feasible. A minimal
  // multiplier support is independent, so independent W suffice.
  std::optional<Projection> found;
  const std::size_t room = n - eq_rows.size();
  for_each_subset(ineq.size(), room, [&](const std::vector<std::size_t>& w) {
    RatMat rows = eq_rows;
    RatVec rhs = eq_rhs;
    for (auto j : w) {
      rows.push_back(poly.relations[ineq[j]].normal);
      rhs.push_back(poly.relations[ineq[j]].rhs);
    }
    const std::size_t m = rows.size();
    RatMat gram(m, RatVec(m));
    RatVec r(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) gram[i][j] = gram[j][i] = dot(rows[i], rows[j]);
      r[i] = dot(rows[i], p) - rhs[i];
    }
    auto mu = solve_square(gram, r);
    if (!mu) return false;  // dependent rows
    for (std::size_t t = eq_rows.size(); t < m; ++t)
      if (sgn((*mu)[t]) < 0) return false;
    RatVec x = p;
    for (std::size_t i = 0; i < m; ++i) axpy(-(*mu)[i], rows[i], x);
    if (!poly.contains(x)) return false;
    found = Projection{x, norm2sq(sub(p, x)), 0};
    return true;
  });
  if (!found) throw InternalInconsistency("project_polyhedron: no KKT point found");
  return *found;
}

std::vector<Projection> project_union(const RatVec& p, const std::vector<HPolyhedron>& polys) {
  std::vector<Projection> best;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (!feasible(polys[k])) continue;
    Projection pr = project_polyhedron(p, polys[k]);
    pr.piece = k;
    if (best.empty() || pr.dist2 < best.front().dist2) {
      best.assign(1, std::move(pr));
    } else if (pr.dist2 == best.front().dist2) {
      bool dup = std::any_of(best.begin(), best.end(),
                             [&](const Projection& b) { return b.point == pr.point; });
      if (!dup) best.push_back(std::move(pr));
    }
  }
  if (best.empty()) throw EmptyPolyhedron("project_union: every piece is empty");
  std::sort(best.begin(), best.end(),
            [](const Projection& a, const Projection& b) { return a.point < b.point; });
  return best;
}

}  // namespace polycone
