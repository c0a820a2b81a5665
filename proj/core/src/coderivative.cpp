#include "polycone/coderivative.hpp"

#include "polycone/errors.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

bool CoderivativeValue::contains(const RatVec& v) const {
  for (const auto& p : pieces)
    if (p.cone.contains(v)) return true;
  return false;
}

bool CoderivativeValue::is_origin() const {
  if (pieces.empty()) return false;
  for (const auto& p : pieces)
    if (!cone_is_trivial(p.cone)) return false;
  return true;
}

DomainCone coderivative_domain(const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  DomainCone d;
  d.eq_rows = gp.support;
  d.ge_rows = set_minus(upsilon(inst, gp.active, gp.support), gp.support);
  d.cone = HCone(inst.dim());
  for (auto i : d.eq_rows) d.cone.add_eq(inst.a(i));
  for (auto j : d.ge_rows) d.cone.add_le(neg(inst.a(j)));
  return d;
}

CoderivativeValue coderivative_value(const PieceUnion& pu, const DomainCone& dom,
                                     const RatVec& u) {
  const ProblemInstance& inst = pu.point.instance();
  check_dim(u, inst.dim(), "coderivative query");
  CoderivativeValue out;
  out.query = u;
  out.exactness = Exactness::Exact;
  out.in_domain = dom.contains(u);
  const RatVec mu = neg(u);
  for (const auto& pc : pu.pieces) {
    if (!pc.v_part.contains(mu)) continue;
    out.pieces.push_back({pc.label, std::nullopt, pc.x_generators, pc.x_cut, pc.x_part});
  }
  const bool enumerated = !out.pieces.empty();
  if (enumerated != out.in_domain) {
    out.warnings.push_back(
        "domain mismatch at u = " + format_vec(u) + ": closed-form domain (eq " +
        inst.format(dom.eq_rows) + ", ge " + inst.format(dom.ge_rows) + ") says " +
        (out.in_domain ? "inside" : "outside") + ", (Q,P) enumeration says " +
        (enumerated ? "inside" : "outside"));
  }
  return out;
}

CoderivativeValue coderivative_value(const GraphPoint& gp, const RatVec& u) {
  return coderivative_value(limiting_normal_cone_graph(gp), coderivative_domain(gp), u);
}

namespace {

CoderivativeValue per_t_value(const GraphPoint& gp, const RatVec& u, bool literal) {
  const ProblemInstance& inst = gp.instance();
  check_dim(u, inst.dim(), "coderivative query");
  const DomainCone dom = coderivative_domain(gp);
  if (!dom.contains(u))
    throw OutsideDomain("u = " + format_vec(u) + " is outside the coderivative domain");
  const CharacteristicSets cs = characteristic_sets(inst, gp.active, u);
  const auto family =
      literal ? i2_family_relaxed(inst, gp.active, u) : i2_family(inst, gp.active, u);

  CoderivativeValue out;
  out.query = u;
  out.in_domain = true;
  out.exactness = literal ? Exactness::SupersetOnly : Exactness::Exact;
  out.pieces = parallel_map<CoderivativePiece>(family.size(), [&](std::size_t k) {
    const IndexSet& t = family[k];
    CoderivativePiece pc;
    pc.t = t;
    pc.generators = VCone(inst.dim());
    for (auto i : set_union(cs.plus, literal ? gp.active.i2 : t))
      pc.generators.rays.push_back(inst.a(i));
    for (auto i : cs.zero) pc.generators.spans.push_back(inst.a(i));
    pc.cut = t_cone(inst, t);
    pc.cone = intersect(vcone_to_hcone(pc.generators), pc.cut);
    return pc;
  });
  return out;
}

}  // namespace

CoderivativeValue coderivative_superset(const GraphPoint& gp, const RatVec& u) {
  return per_t_value(gp, u, true);
}

CoderivativeValue coderivative_value_li(const GraphPoint& gp, const RatVec& u) {
  if (!gp.independent)
    throw DependentGenerators("active generators " + gp.instance().format(gp.active.all) +
                              " are linearly dependent");
  return per_t_value(gp, u, false);
}

GraphPoint g_graph_point(std::shared_ptr<const ProblemInstance> inst, const RatVec& xbar,
                         const RatVec& shift) {
  try {
    return validate_graph_point(std::move(inst), xbar, shift);
  } catch (const InvalidGraphPoint& e) {
    throw InvalidGraphPoint(std::string("0 is not in G(xbar): ") + e.what());
  }
}

CoderivativeValue coderivative_G(std::shared_ptr<const ProblemInstance> inst,
                                 const RatVec& xbar, const RatVec& shift, const RatVec& u) {
  return coderivative_value(g_graph_point(std::move(inst), xbar, shift), u);
}

bool piecewise_contained(const CoderivativeValue& inner, const CoderivativeValue& outer) {
  for (const auto& pi : inner.pieces) {
    const VCone gens = hcone_to_vcone(pi.cone);
    bool found = false;
    for (const auto& po : outer.pieces)
      if (contains(po.cone, gens)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace polycone
