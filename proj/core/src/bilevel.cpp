#include "polycone/bilevel.hpp"

#include <algorithm>

#include "polycone/coderivative.hpp"
#include "polycone/errors.hpp"
#include "polycone/lp.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

bool VPolyhedron::contains(const RatVec& v) const {
  check_dim(v, dim, "VPolyhedron::contains");
  if (points.empty()) return false;
  const std::size_t np = points.size(), nr = rays.size(), nl = lines.size();
  LinearProgram lp(np + nr + nl);
  for (std::size_t j = 0; j < np + nr; ++j) lp.set_nonneg(j);
  RatVec sum = zeros(np + nr + nl);
  for (std::size_t j = 0; j < np; ++j) sum[j] = 1;
  lp.add(sum, Sense::EQ, Rat(1));
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec row(np + nr + nl);
    for (std::size_t j = 0; j < np; ++j) row[j] = points[j].at(i);
    for (std::size_t j = 0; j < nr; ++j) row[np + j] = rays[j].at(i);
    for (std::size_t j = 0; j < nl; ++j) row[np + nr + j] = lines[j].at(i);
    lp.add(std::move(row), Sense::EQ, v[i]);
  }
  return lp.find_feasible().status != LpStatus::Infeasible;
}

namespace {

VCone homogenize(const VPolyhedron& p) {
  VCone c(p.dim + 1);
  auto lift = [](RatVec v, int t) {
    v.push_back(Rat(t));
    return v;
  };
  for (const auto& x : p.points) c.rays.push_back(lift(x, 1));
  for (const auto& r : p.rays) c.rays.push_back(lift(r, 0));
  for (const auto& l : p.lines) c.spans.push_back(lift(l, 0));
  return c;
}

VCone negated(const VCone& c) {
  VCone n = c;
  for (auto& r : n.rays) r = neg(r);
  return n;
}

}  // namespace

bool set_equal(const VPolyhedron& a, const VPolyhedron& b) {
  if (a.dim != b.dim || a.points.empty() || b.points.empty()) return false;
  return set_equal(homogenize(a), homogenize(b));
}

SubdifferentialData affine_max_subdifferential(const std::vector<AffinePiece>& pieces,
                                               const RatVec& xbar) {
  if (pieces.empty()) throw PolyconeError("affine_max_subdifferential: no pieces");
  SubdifferentialData d;
  d.sub.dim = xbar.size();
  d.horizon = VCone(xbar.size());
  d.provenance = Provenance::AffineMaxDerived;
  Rat best;
  bool first = true;
  for (const auto& p : pieces) {
    check_dim(p.g, xbar.size(), "affine piece gradient");
    Rat v = dot(p.g, xbar) + p.h;
    if (first || v > best) best = v;
    first = false;
  }
  for (const auto& p : pieces)
    if (dot(p.g, xbar) + p.h == best) d.sub.points.push_back(p.g);
  sort_unique(d.sub.points);
  d.caveats.push_back(
      "subdifferential derived as the convex hull of active affine gradients; the "
      "subdifferential restricted to C may be larger");
  return d;
}

bool ObjectiveModel::less(const RatVec& a, const RatVec& b) const {
  if (pieces.empty()) throw PolyconeError("objective model has no pieces");
  if (kind == Kind::SqrtAbsAffine) {
    const auto& p = pieces.front();
    return abs(dot(p.g, a) + p.h) < abs(dot(p.g, b) + p.h);
  }
  auto value = [&](const RatVec& x) {
    Rat m = dot(pieces[0].g, x) + pieces[0].h;
    for (const auto& p : pieces) {
      Rat v = dot(p.g, x) + p.h;
      if (v > m) m = v;
    }
    return m;
  };
  return value(a) < value(b);
}

GraphPoint validate_candidate(const BilevelProblem& bp) {
  const ProblemInstance& inst = *bp.inst;
  check_dim(bp.candidate, inst.dim(), "candidate");
  check_dim(bp.c, inst.dim(), "lower-level objective c");
  if (!inst.theta().contains(bp.candidate))
    throw InfeasibleCandidate("candidate " + format_vec(bp.candidate) + " is not in Theta");
  if (!inst.cset().contains(bp.candidate))
    throw InfeasibleCandidate("candidate " + format_vec(bp.candidate) + " is not in C");
  try {
    return validate_graph_point(bp.inst, bp.candidate, neg(bp.c));
  } catch (const InvalidGraphPoint&) {
    throw InfeasibleCandidate("-c = " + format_vec(neg(bp.c)) +
                              " is not in N(xbar, Theta): candidate is not lower-level optimal");
  }
}

std::vector<ConditionPiece> condition_set(const BilevelProblem& bp, const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  const auto family = i2_family_relaxed(inst, gp.active, zeros(inst.dim()));
  VCone gens(inst.dim());
  for (auto i : gp.active.i2) gens.rays.push_back(inst.a(i));
  for (auto j : gp.active.i1) gens.spans.push_back(inst.a(j));
  const HCone gens_h = vcone_to_hcone(gens);
  return parallel_map<ConditionPiece>(family.size(), [&](std::size_t k) {
    ConditionPiece pc;
    pc.t = family[k];
    pc.generators = gens;
    pc.cut = t_cone(inst, pc.t);
    pc.cone = hcone_to_vcone(intersect(gens_h, pc.cut));
    pc.assembled = bp.subdiff.sub;
    pc.assembled.rays.insert(pc.assembled.rays.end(), pc.cone.rays.begin(), pc.cone.rays.end());
    pc.assembled.lines.insert(pc.assembled.lines.end(), pc.cone.spans.begin(),
                              pc.cone.spans.end());
    return pc;
  });
}

Q1Result check_q1(const BilevelProblem& bp, const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  const auto family = i2_family_relaxed(inst, gp.active, zeros(inst.dim()));
  VCone gens(inst.dim());
  for (auto i : gp.active.i2) gens.rays.push_back(inst.a(i));
  for (auto j : gp.active.i1) gens.spans.push_back(inst.a(j));
  const VCone minus_horizon = negated(bp.subdiff.horizon);
  auto hits = parallel_map<std::optional<ConeElement>>(family.size(), [&](std::size_t k) {
    return find_nonzero({minus_horizon, gens}, t_cone(inst, family[k]));
  });
  Q1Result r;
  for (std::size_t k = 0; k < family.size(); ++k)
    if (hits[k]) {
      r.passed = false;
      r.t = family[k];
      r.witness = hits[k]->v;
      break;
    }
  return r;
}

bool lipschitz_wrt_C(const BilevelProblem& bp) {
  return cone_is_trivial(vcone_to_hcone(bp.subdiff.horizon));
}

namespace {

std::optional<OptimalityWitness> solve_piece(const BilevelProblem& bp, const GraphPoint& gp,
                                             const IndexSet& t) {
  const ProblemInstance& inst = gp.instance();
  const VPolyhedron& sub = bp.subdiff.sub;
  const std::size_t n = inst.dim();
  const std::size_t np = sub.points.size(), nr = sub.rays.size(), nl = sub.lines.size();
  const IndexSet& bar2 = gp.active.i2;
  const IndexSet& bar1 = gp.active.i1;
  const std::size_t o_l = np + nr + nl, o_b = o_l + bar2.size(), nv = o_b + bar1.size();
  if (np == 0) return std::nullopt;

  LinearProgram lp(nv);
  for (std::size_t j = 0; j < np + nr; ++j) lp.set_nonneg(j);
  for (std::size_t j = 0; j < bar2.size(); ++j) lp.set_nonneg(o_l + j);
  RatVec sum = zeros(nv);
  for (std::size_t j = 0; j < np; ++j) sum[j] = 1;
  lp.add(sum, Sense::EQ, Rat(1));
  // s as a linear form in (lambda, beta).
  auto s_row = [&](const RatVec& w) {
    RatVec row = zeros(nv);
    for (std::size_t j = 0; j < bar2.size(); ++j) row[o_l + j] = dot(w, inst.a(bar2[j]));
    for (std::size_t j = 0; j < bar1.size(); ++j) row[o_b + j] = dot(w, inst.a(bar1[j]));
    return row;
  };
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row = s_row(unit(n, i));
    for (std::size_t j = 0; j < np; ++j) row[j] = sub.points[j].at(i);
    for (std::size_t j = 0; j < nr; ++j) row[np + j] = sub.rays[j].at(i);
    for (std::size_t j = 0; j < nl; ++j) row[np + nr + j] = sub.lines[j].at(i);
    lp.add(std::move(row), Sense::EQ, Rat(0));
  }
  for (auto k : t) lp.add(s_row(inst.a(k)), Sense::LE, Rat(0));
  LpSolution sol = lp.find_feasible();
  if (sol.status == LpStatus::Infeasible) return std::nullopt;

  OptimalityWitness w;
  w.t = t;
  const auto& x = sol.x;
  auto slice = [&](std::size_t from, std::size_t len) {
    return RatVec(x.begin() + static_cast<std::ptrdiff_t>(from),
                  x.begin() + static_cast<std::ptrdiff_t>(from + len));
  };
  w.point_weights = slice(0, np);
  w.ray_weights = slice(np, nr);
  w.line_weights = slice(np + nr, nl);
  w.g = zeros(n);
  for (std::size_t j = 0; j < np; ++j) axpy(w.point_weights[j], sub.points[j], w.g);
  for (std::size_t j = 0; j < nr; ++j) axpy(w.ray_weights[j], sub.rays[j], w.g);
  for (std::size_t j = 0; j < nl; ++j) axpy(w.line_weights[j], sub.lines[j], w.g);
  w.s = zeros(n);
  for (std::size_t j = 0; j < bar2.size(); ++j) {
    w.lambda.emplace_back(bar2[j], x[o_l + j]);
    axpy(x[o_l + j], inst.a(bar2[j]), w.s);
  }
  for (std::size_t j = 0; j < bar1.size(); ++j) {
    w.beta.emplace_back(bar1[j], x[o_b + j]);
    axpy(x[o_b + j], inst.a(bar1[j]), w.s);
  }
  return w;
}

}  // namespace

bool verify_witness(const BilevelProblem& bp, const GraphPoint& gp, const OptimalityWitness& w) {
  const ProblemInstance& inst = gp.instance();
  const VPolyhedron& sub = bp.subdiff.sub;
  if (w.point_weights.size() != sub.points.size() || w.ray_weights.size() != sub.rays.size() ||
      w.line_weights.size() != sub.lines.size())
    return false;
  Rat total = 0;
  RatVec g = zeros(inst.dim());
  for (std::size_t j = 0; j < sub.points.size(); ++j) {
    if (sgn(w.point_weights[j]) < 0) return false;
    total += w.point_weights[j];
    axpy(w.point_weights[j], sub.points[j], g);
  }
  if (total != 1) return false;
  for (std::size_t j = 0; j < sub.rays.size(); ++j) {
    if (sgn(w.ray_weights[j]) < 0) return false;
    axpy(w.ray_weights[j], sub.rays[j], g);
  }
  for (std::size_t j = 0; j < sub.lines.size(); ++j) axpy(w.line_weights[j], sub.lines[j], g);
  RatVec s = zeros(inst.dim());
  for (const auto& [i, l] : w.lambda) {
    if (!contains_index(gp.active.i2, i) || sgn(l) < 0) return false;
    axpy(l, inst.a(i), s);
  }
  for (const auto& [j, b] : w.beta) {
    if (!contains_index(gp.active.i1, j)) return false;
    axpy(b, inst.a(j), s);
  }
  if (g != w.g || s != w.s || !is_zero(add(g, s))) return false;
  for (auto k : w.t)
    if (sgn(dot(inst.a(k), s)) > 0) return false;
  return cq_nonempty(inst, set_union(gp.active.i1, w.t)).has_value();
}

GateResult robustness_gate(const BilevelProblem& bp, const GraphPoint& gp) {
  GateResult r;
  if (bp.robust) {
    r.kind = GateResult::Kind::RobustSolution;
    r.passed = true;
    return r;
  }
  r.kind = GateResult::Kind::LocalSolutionGrid;
  const ProblemInstance& inst = gp.instance();
  if (!bp.f || bp.grid.deltas.empty()) {
    r.passed = false;
    return r;
  }
  const HPolyhedron theta = inst.theta(), cset = inst.cset();
  const RatVec minus_c = neg(bp.c);
  for (const auto& delta : bp.grid.deltas) {
    RatMat pts = bp.grid.points;
    if (bp.grid.step) {
      RatMat lat = lattice_l1_ball(bp.candidate, *bp.grid.step, delta);
      pts.insert(pts.end(), lat.begin(), lat.end());
    }
    RatMat kept;
    for (auto& p : pts) {
      check_dim(p, inst.dim(), "grid point");
      if (cset.contains(p) && norm1(sub(p, bp.candidate)) <= delta) kept.push_back(p);
    }
    sort_unique(kept);
    GridEvidence ev;
    ev.delta = delta;
    ev.points_checked = kept.size();
    for (const auto& x : kept) {
      const bool zero_in_g = theta.contains(x) && member(normal_cone(inst, x), minus_c);
      if (zero_in_g) continue;  // antecedent false
      if (!bp.f->less(bp.candidate, x)) {
        ev.passed = false;
        ev.failing_point = x;
        break;
      }
    }
    r.passed = r.passed && ev.passed;
    r.evidence.push_back(std::move(ev));
  }
  return r;
}

OptimalityReport necessary_condition(const BilevelProblem& bp, const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  OptimalityReport rep;
  rep.q1 = check_q1(bp, gp);
  rep.lipschitz = lipschitz_wrt_C(bp);
  rep.pieces = condition_set(bp, gp);
  auto found = parallel_map<std::optional<OptimalityWitness>>(
      rep.pieces.size(), [&](std::size_t k) { return solve_piece(bp, gp, rep.pieces[k].t); });
  for (auto& w : found)
    if (w) {
      rep.holds = true;
      rep.witness = std::move(w);
      break;
    }
  rep.gate = robustness_gate(bp, gp);

  if (!bp.q2_asserted)
    rep.caveats.push_back("blocking: qualification (q2) is not asserted");
  else
    rep.caveats.push_back("qualification (q2) asserted by the user: " + bp.q2_justification);
  if (!rep.q1.passed) rep.caveats.push_back("blocking: qualification (q1) fails");
  if (!inst.homogeneous())
    rep.caveats.push_back("nonzero right-hand sides: formulas are applied with active sets localised at xbar");
  if (!gp.independent) rep.caveats.push_back("active generators are linearly dependent");
  for (const auto& c : bp.subdiff.caveats) rep.caveats.push_back(c);
  if (bp.subdiff.sub.points.empty()) rep.caveats.push_back("supplied subdifferential is empty");
  if (rep.gate.kind == GateResult::Kind::LocalSolutionGrid)
    rep.caveats.push_back(rep.gate.passed
                              ? "local-solution implication checked on a finite grid only (evidence, not proof)"
                              : "blocking: local-solution implication not established on the grid");
  return rep;
}

}  // namespace polycone
