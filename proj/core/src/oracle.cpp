#include "polycone/oracle.hpp"

#include <random>

#include "polycone/errors.hpp"
#include "polycone/lp.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

ConvexFrechet frechet_convex_oracle(const ProblemInstance& inst, const RatVec& xbar) {
  const HCone tangent = tangent_cone(inst, xbar, TangentOf::ThetaCapC);
  const HCone normal = polar(hcone_to_vcone(tangent));
  ConvexFrechet out;
  out.h = intersect(normal, tangent_cone(inst, xbar, TangentOf::C));
  out.v = hcone_to_vcone(out.h);
  return out;
}

std::vector<HPolyhedron> GraphDecomposition::polyhedra() const {
  std::vector<HPolyhedron> out;
  for (const auto& f : faces) out.push_back(f.poly);
  return out;
}

GraphDecomposition graph_decomposition(const ProblemInstance& inst) {
  const std::size_t n = inst.dim();
  auto lift_x = [n](const RatVec& a) {
    RatVec r = a;
    r.resize(2 * n, Rat(0));
    return r;
  };
  auto lift_y = [n](const RatVec& a) {
    RatVec r = zeros(n);
    r.insert(r.end(), a.begin(), a.end());
    return r;
  };
  const auto q1s = subsets_of(inst.i1());
  auto faces = parallel_map<std::optional<GraphFace>>(q1s.size(), [&](std::size_t k) {
    const IndexSet& q1 = q1s[k];
    HPolyhedron p(2 * n);
    for (auto i : inst.i1())
      p.add(lift_x(inst.a(i)), contains_index(q1, i) ? RelKind::EQ : RelKind::LE, inst.b(i));
    for (auto i : inst.i2()) p.add(lift_x(inst.a(i)), RelKind::LE, inst.b(i));
    const HCone k_h = vcone_to_hcone(generated_cone(inst, q1));
    for (const auto& l : k_h.le) p.add(lift_y(l), RelKind::LE, Rat(0));
    for (const auto& e : k_h.eq) p.add(lift_y(e), RelKind::EQ, Rat(0));
    if (!feasible(p)) return std::optional<GraphFace>{};
    return std::optional<GraphFace>{GraphFace{q1, std::move(p)}};
  });
  GraphDecomposition gd;
  gd.dim = n;
  for (auto& f : faces)
    if (f) gd.faces.push_back(std::move(*f));
  return gd;
}

namespace {

// min ||x - c||_inf over the polyhedron (closed rows only).
std::optional<Rat> linf_distance(const HPolyhedron& p, const RatVec& c) {
  const std::size_t m = p.dim;
  LinearProgram lp(m + 1);
  lp.set_nonneg(m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVec up = zeros(m + 1), down = zeros(m + 1);
    up[i] = 1;
    up[m] = -1;
    down[i] = -1;
    down[m] = -1;
    lp.add(std::move(up), Sense::LE, c[i]);
    lp.add(std::move(down), Sense::LE, -c[i]);
  }
  for (const auto& r : p.relations) {
    RatVec a = r.normal;
    a.push_back(0);
    lp.add(std::move(a), r.kind == RelKind::EQ ? Sense::EQ : Sense::LE, r.rhs);
  }
  RatVec cost = zeros(m + 1);
  cost[m] = 1;
  const LpSolution sol = lp.minimize(cost);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  return sol.objective;
}

}  // namespace

std::optional<Rat> local_sampling_radius(const GraphDecomposition& gd, const RatVec& center) {
  check_dim(center, 2 * gd.dim, "sampling center");
  std::optional<Rat> eps;
  auto take = [&](const Rat& d) {
    if (!eps || d < *eps) eps = d;
  };
  for (const auto& f : gd.faces) {
    if (f.poly.contains(center)) {
      for (const auto& r : f.poly.relations) {
        if (r.kind == RelKind::EQ) continue;
        const Rat slack = r.rhs - dot(r.normal, center);
        if (sgn(slack) <= 0) continue;
        Rat l1 = 0;
        for (const auto& a : r.normal) l1 += abs(a);
        take(slack / l1);
      }
    } else if (auto d = linf_distance(f.poly, center)) {
      take(*d);
    }
  }
  if (!eps) return std::nullopt;
  return *eps / Rat(8 * static_cast<long>(gd.dim));
}

std::vector<ProximalSample> proximal_normal_samples(const ProblemInstance& inst,
                                                    const GraphDecomposition& gd,
                                                    const RatVec& xbar, const RatVec& xstar,
                                                    const Rat& radius, std::size_t samples,
                                                    std::uint64_t seed) {
  if (sgn(radius) <= 0) throw PolyconeError("proximal_normal_samples: radius must be positive");
  const std::size_t n = inst.dim();
  check_dim(xbar, n, "sample center x");
  check_dim(xstar, n, "sample center x*");
  constexpr long kGrid = 8;
  std::mt19937_64 rng(seed);
  std::vector<RatVec> zs;
  const HPolyhedron cset = inst.cset();
  for (std::size_t s = 0; s < samples; ++s) {
    RatVec z(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const long k = static_cast<long>(rng() % (2 * kGrid + 1)) - kGrid;
      z[i] = (i < n ? xbar[i] : xstar[i - n]) + radius * Rat(k) / kGrid;
    }
    zs.push_back(std::move(z));
  }
  const auto polys = gd.polyhedra();
  auto per = parallel_map<std::vector<ProximalSample>>(zs.size(), [&](std::size_t s) {
    RatVec z = zs[s];
    RatVec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    if (!cset.contains(x)) {
      x = project_polyhedron(x, cset).point;
      std::copy(x.begin(), x.end(), z.begin());
    }
    std::vector<ProximalSample> out;
    for (auto& pr : project_union(z, polys)) {
      RatVec d = polycone::sub(z, pr.point);
      if (is_zero(d)) continue;
      out.push_back({z, std::move(pr.point), std::move(d)});
    }
    return out;
  });
  std::vector<ProximalSample> all;
  for (auto& v : per)
    for (auto& s : v) all.push_back(std::move(s));
  return all;
}

AubinGridChecker::AubinGridChecker(std::shared_ptr<const ProblemInstance> inst, RatVec shift,
                                   RatVec xbar, Rat radius, Rat kappa)
    : inst_(std::move(inst)),
      shift_(std::move(shift)),
      xbar_(std::move(xbar)),
      radius_(std::move(radius)),
      kappa_(std::move(kappa)) {
  check_dim(shift_, inst_->dim(), "grid shift");
  check_dim(xbar_, inst_->dim(), "grid center");
  if (sgn(radius_) <= 0) throw PolyconeError("aubin grid: radius must be positive");
  if (sgn(kappa_) < 0) throw PolyconeError("aubin grid: kappa must be nonnegative");
}

std::optional<IndexSet> AubinGridChecker::cls(const RatVec& p) const {
  IndexSet act;
  for (auto i : inst_->i1()) {
    const Rat lhs = dot(inst_->a(i), p);
    if (lhs > inst_->b(i)) return std::nullopt;
    if (lhs == inst_->b(i)) act.push_back(i);
  }
  return act;
}

const RatMat& AubinGridChecker::vertices(const std::optional<IndexSet>& cu) {
  auto it = vertex_cache_.find(cu);
  if (it != vertex_cache_.end()) return it->second;
  RatMat verts;
  if (cu) {
    const std::size_t n = inst_->dim();
    const HCone k = vcone_to_hcone(generated_cone(*inst_, *cu));
    // Homogenised polytope {(y,t) : y + t*shift in K, ||y||_1 <= r t, t >= 0}.
    HCone h(n + 1);
    auto lift = [&](const RatVec& l) {
      RatVec r = l;
      r.push_back(dot(l, shift_));
      return r;
    };
    for (const auto& l : k.le) h.add_le(lift(l));
    for (const auto& e : k.eq) h.add_eq(lift(e));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RatVec row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = (mask >> i) & 1 ? -1 : 1;
      row[n] = -radius_;
      h.add_le(std::move(row));
    }
    h.add_le(scale(Rat(-1), unit(n + 1, n)));
    const VCone gen = hcone_to_vcone(h);
    if (!gen.spans.empty()) throw InternalInconsistency("aubin grid: unbounded ball slice");
    for (const auto& r : gen.rays) {
      if (sgn(r[n]) <= 0) continue;
      RatVec y(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
      verts.push_back(scale(1 / r[n], y));
    }
    sort_unique(verts);
  }
  return vertex_cache_.emplace(cu, std::move(verts)).first->second;
}

const std::optional<AubinGridChecker::Distance>& AubinGridChecker::farthest(
    const std::optional<IndexSet>& cu, const std::optional<IndexSet>& cx) {
  auto key = std::make_pair(cu, cx);
  auto it = dist_cache_.find(key);
  if (it != dist_cache_.end()) return it->second;
  const RatMat& verts = vertices(cu);
  std::optional<Distance> best;
  if (!verts.empty()) {
    if (!cx) {
      best = Distance{true, Rat(0), verts.front()};
    } else {
      const std::size_t n = inst_->dim(), m = cx->size();
      for (const auto& y : verts) {
        // min ||y + shift - sum mu_j a_j||_1 over mu >= 0.
        LinearProgram lp(m + n);
        for (std::size_t j = 0; j < m + n; ++j) lp.set_nonneg(j);
        for (std::size_t i = 0; i < n; ++i) {
          RatVec lo = zeros(m + n), hi = zeros(m + n);
          for (std::size_t j = 0; j < m; ++j) {
            lo[j] = -inst_->a((*cx)[j])[i];
            hi[j] = inst_->a((*cx)[j])[i];
          }
          lo[m + i] = -1;
          hi[m + i] = -1;
          const Rat target = y[i] + shift_[i];
          lp.add(std::move(lo), Sense::LE, -target);
          lp.add(std::move(hi), Sense::LE, target);
        }
        RatVec cost = zeros(m + n);
        for (std::size_t i = 0; i < n; ++i) cost[m + i] = 1;
        LpSolution s = lp.minimize(cost);
        if (s.status != LpStatus::Optimal) throw InternalInconsistency("aubin grid: distance LP");
        if (!best || s.objective > best->value) best = Distance{false, s.objective, y};
      }
    }
  }
  return dist_cache_.emplace(key, std::move(best)).first->second;
}

std::optional<RatVec> AubinGridChecker::violation(const RatVec& x, const RatVec& u) {
  const auto& d = farthest(cls(u), cls(x));
  if (!d) return std::nullopt;
  if (d->infinite || d->value > kappa_ * norm1(sub(u, x))) return d->vertex;
  return std::nullopt;
}

GridReport AubinGridChecker::run(const Rat& step, const RatMat& extra) {
  RatMat pts = lattice_l1_ball(xbar_, step, radius_);
  pts.insert(pts.end(), extra.begin(), extra.end());
  const HPolyhedron cset = inst_->cset();
  RatMat kept;
  for (auto& p : pts) {
    check_dim(p, inst_->dim(), "grid point");
    if (cset.contains(p) && norm1(sub(p, xbar_)) <= radius_) kept.push_back(p);
  }
  sort_unique(kept);
  GridReport rep;
  rep.points = kept.size();
  for (const auto& x : kept)
    for (const auto& u : kept) {
      ++rep.pairs;
      if (rep.counterexample) continue;
      if (auto y = violation(x, u)) rep.counterexample = AubinTriple{x, u, *y};
    }
  return rep;
}

GridReport aubin_grid_check(std::shared_ptr<const ProblemInstance> inst, const RatVec& shift,
                            const RatVec& xbar, const Rat& radius, const Rat& kappa,
                            const Rat& grid_step, const RatMat& extra) {
  AubinGridChecker checker(std::move(inst), shift, xbar, radius, kappa);
  return checker.run(grid_step, extra);
}

}  // namespace polycone
