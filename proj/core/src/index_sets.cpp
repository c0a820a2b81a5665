#include "polycone/index_sets.hpp"

#include "polycone/errors.hpp"
#include "polycone/linalg.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

ActiveSets active_sets(const ProblemInstance& inst, const RatVec& x) {
  check_dim(x, inst.dim(), "active_sets point");
  ActiveSets act;
  act.at = x;
  IndexSet violated;
  for (auto i : inst.all()) {
    const Rat lhs = dot(inst.a(i), x);
    if (lhs > inst.b(i)) {
      violated.push_back(i);
    } else if (lhs == inst.b(i)) {
      (inst.in_i1(i) ? act.i1 : act.i2).push_back(i);
      act.all.push_back(i);
    }
  }
  if (!violated.empty())
    throw OutsideSet("point " + format_vec(x) + " violates rows " + inst.format(violated));
  return act;
}

VCone generated_cone(const ProblemInstance& inst, const IndexSet& s) {
  VCone c(inst.dim());
  for (auto i : s) c.rays.push_back(inst.a(i));
  return c;
}

GraphPoint validate_graph_point(std::shared_ptr<const ProblemInstance> inst, const RatVec& x,
                                const RatVec& xstar) {
  const ProblemInstance& in = *inst;
  check_dim(xstar, in.dim(), "graph point x*");
  GraphPoint gp;
  try {
    gp.active = active_sets(in, x);
  } catch (const OutsideSet& e) {
    throw InvalidGraphPoint(std::string("x is not in Theta and C: ") + e.what());
  }
  gp.inst = inst;
  gp.x = x;
  gp.xstar = xstar;
  gp.multipliers = zeros(in.size());
  gp.independent = rank(in.normals(gp.active.all), in.dim()) == gp.active.all.size();

  const IndexSet& act1 = gp.active.i1;
  if (gp.independent) {
    auto sol = solve_linear(transpose(in.normals(act1), in.dim()), xstar, act1.size());
    bool ok = sol.has_value();
    if (ok)
      for (const auto& l : sol->particular) ok = ok && sgn(l) >= 0;
    if (!ok)
      throw InvalidGraphPoint("x* = " + format_vec(xstar) + " is not in N(x, Theta)");
    for (std::size_t k = 0; k < act1.size(); ++k) {
      gp.multipliers[act1[k]] = sol->particular[k];
      if (sgn(sol->particular[k]) > 0) gp.support.push_back(act1[k]);
    }
    return gp;
  }
  if (!member(generated_cone(in, act1), xstar))
    throw InvalidGraphPoint("x* = " + format_vec(xstar) + " is not in N(x, Theta)");
  for (const auto& p : subsets_of(act1)) {
    auto k = decompose(generated_cone(in, p), xstar);
    if (!k) continue;
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (sgn(k->ray_coeffs[t]) <= 0)
        throw InternalInconsistency("minimal multiplier support has a zero coefficient");
      gp.multipliers[p[t]] = k->ray_coeffs[t];
    }
    gp.support = p;
    return gp;
  }
  throw InternalInconsistency("no multiplier support found although x* is in N(x, Theta)");
}

GraphPoint validate_graph_point(const ProblemInstance& inst, const RatVec& x,
                                const RatVec& xstar) {
  return validate_graph_point(std::make_shared<const ProblemInstance>(inst), x, xstar);
}

std::vector<IndexSet> p_family(const GraphPoint& gp) {
  const auto all = subsets_of(gp.active.i1);
  auto ok = parallel_map<char>(all.size(), [&](std::size_t k) {
    return static_cast<char>(member(generated_cone(gp.instance(), all[k]), gp.xstar));
  });
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (ok[k]) out.push_back(all[k]);
  return out;
}

HPolyhedron cq_system(const ProblemInstance& inst, const IndexSet& q) {
  HPolyhedron p(inst.dim());
  for (auto i : inst.all())
    p.add(inst.a(i), contains_index(q, i) ? RelKind::EQ : RelKind::LT, inst.b(i));
  return p;
}

HPolyhedron cbar_system(const ProblemInstance& inst, const IndexSet& t) {
  HPolyhedron p(inst.dim());
  for (auto i : inst.all())
    p.add(inst.a(i), contains_index(t, i) ? RelKind::EQ : RelKind::LE, inst.b(i));
  return p;
}

std::optional<Witness> cq_nonempty(const ProblemInstance& inst, const IndexSet& q) {
  return feasible(cq_system(inst, q));
}

IndexSet upsilon(const ProblemInstance& inst, const ActiveSets& act, const IndexSet& t) {
  const HPolyhedron base = cbar_system(inst, t);
  const IndexSet& cand = act.i1;
  auto forced = parallel_map<char>(cand.size(), [&](std::size_t k) {
    const std::size_t i = cand[k];
    if (contains_index(t, i)) return char(1);
    HPolyhedron sys = base;
    sys.add(inst.a(i), RelKind::LT, inst.b(i));
    return static_cast<char>(!feasible(sys).has_value());
  });
  IndexSet out;
  for (std::size_t k = 0; k < cand.size(); ++k)
    if (forced[k]) out.push_back(cand[k]);
  return out;
}

CharacteristicSets characteristic_sets(const ProblemInstance& inst, const ActiveSets& act,
                                       const RatVec& u) {
  check_dim(u, inst.dim(), "characteristic_sets u");
  CharacteristicSets cs;
  for (auto i : act.i1) {
    const int s = sgn(dot(inst.a(i), u));
    if (s == 0) cs.zero.push_back(i);
    if (s > 0) cs.plus.push_back(i);
  }
  return cs;
}

std::vector<IndexSet> i2_family(const ProblemInstance& inst, const ActiveSets& act,
                                const RatVec& u) {
  const CharacteristicSets cs = characteristic_sets(inst, act, u);
  const IndexSet base = set_union(cs.zero, cs.plus);
  const auto all = subsets_of(act.i2);
  auto ok = parallel_map<char>(all.size(), [&](std::size_t k) {
    return static_cast<char>(cq_nonempty(inst, set_union(base, all[k])).has_value());
  });
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (ok[k]) out.push_back(all[k]);
  return out;
}

std::vector<IndexSet> i2_family_relaxed(const ProblemInstance& inst, const ActiveSets& act,
                                        const RatVec& u) {
  const CharacteristicSets cs = characteristic_sets(inst, act, u);
  const IndexSet free_rows = set_union(cs.zero, cs.plus);
  const auto all = subsets_of(act.i2);
  auto ok = parallel_map<char>(all.size(), [&](std::size_t k) {
    // Equal on T, either equal or strict on the free rows: one LP decides
    // whether some Q1 works.
    HPolyhedron p(inst.dim());
    for (auto i : inst.all()) {
      const RelKind kind = contains_index(all[k], i)      ? RelKind::EQ
                           : contains_index(free_rows, i) ? RelKind::LE
                                                          : RelKind::LT;
      p.add(inst.a(i), kind, inst.b(i));
    }
    return static_cast<char>(feasible(p).has_value());
  });
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (ok[k]) out.push_back(all[k]);
  return out;
}

}  // namespace polycone
