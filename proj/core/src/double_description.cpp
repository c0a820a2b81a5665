#include <string>

#include "polycone/config.hpp"
#include "polycone/errors.hpp"
#include "polycone/linalg.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

namespace {

struct Ray {
  RatVec y;
  std::vector<bool> tight;  // indexed by row of M; valid for processed rows
};

void check_cap(std::size_t n) {
  if (n > dim_cap())
    throw DimensionCapExceeded("double description: dimension " + std::to_string(n) +
                               " exceeds cap " + std::to_string(dim_cap()));
}

// Extreme rays of the pointed cone {y : M y <= 0}, rank(M) = k.
std::vector<RatVec> pointed_rays(const RatMat& M, std::size_t k) {
  const std::size_t m = M.size();
  std::vector<std::size_t> init;
  RatMat basis_rows;
  for (std::size_t i = 0; i < m && init.size() < k; ++i) {
    basis_rows.push_back(M[i]);
    if (rank(basis_rows, k) == basis_rows.size()) {
      init.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (init.size() != k) throw InternalInconsistency("double description: cone is not pointed");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < k; ++j) {
    auto y = solve_square(basis_rows, neg(unit(k, j)));
    if (!y) throw InternalInconsistency("double description: singular initial basis");
    Ray r{primitive(*y), std::vector<bool>(m, false)};
    for (std::size_t t = 0; t < k; ++t) r.tight[init[t]] = (t != j);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  std::vector<std::size_t> done = init;
  for (auto i : init) processed[i] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    std::vector<int> s(rays.size());
    std::vector<Rat> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(M[h], rays[r].y);
      s[r] = sgn(val[r]);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (s[r] <= 0) {
        Ray keep = rays[r];
        keep.tight[h] = (s[r] == 0);
        next.push_back(std::move(keep));
      }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        RatMat common;
        std::vector<bool> tight(m, false);
        for (auto d : done)
          if (rays[p].tight[d] && rays[q].tight[d]) {
            common.push_back(M[d]);
            tight[d] = true;
          }
        if (k >= 2 && common.size() + 2 < k) continue;
        if (rank(common, k) + 2 != k) continue;
        RatVec y = scale(val[p], rays[q].y);
        axpy(-val[q], rays[p].y, y);
        tight[h] = true;
        next.push_back({primitive(y), std::move(tight)});
      }
    }
    rays = std::move(next);
    processed[h] = true;
    done.push_back(h);
  }
  std::vector<RatVec> out;
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace

VCone hcone_to_vcone(const HCone& c) {
  const std::size_t n = c.dim;
  check_cap(n);
  RatMat all = c.le;
  all.insert(all.end(), c.eq.begin(), c.eq.end());
  for (const auto& a : all) check_dim(a, n, "hcone_to_vcone");

  VCone out(n);
  RatMat lineality = nullspace(all, n);
  out.spans = span_basis(lineality, n);

  RatMat sub_eqs = c.eq;
  sub_eqs.insert(sub_eqs.end(), lineality.begin(), lineality.end());
  RatMat B = nullspace(sub_eqs, n);  // basis of the pointed slice
  const std::size_t k = B.size();
  if (k == 0) return out;

  RatMat M;
  for (const auto& a : c.le) {
    RatVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, B[j]);
    if (!is_zero(row)) M.push_back(std::move(row));
  }
  for (const auto& y : pointed_rays(M, k)) {
    RatVec x = zeros(n);
    for (std::size_t j = 0; j < k; ++j) axpy(y[j], B[j], x);
    out.rays.push_back(primitive(x));
  }
  sort_unique(out.rays);
  return out;
}

HCone vcone_to_hcone(const VCone& c) {
  check_cap(c.dim);
  VCone dual = hcone_to_vcone(polar(c));
  HCone h(c.dim);
  h.le = std::move(dual.rays);
  h.eq = std::move(dual.spans);
  return h;
}

}  // namespace polycone
