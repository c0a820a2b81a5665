#include "polycone/cone_formulas.hpp"

#include "polycone/errors.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

VCone a_cone(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p) {
  VCone c(inst.dim());
  for (auto i : q) (contains_index(p, i) ? c.spans : c.rays).push_back(inst.a(i));
  return c;
}

HCone b_cone(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p) {
  HCone c(inst.dim());
  for (auto i : q) {
    if (contains_index(p, i))
      c.add_eq(inst.a(i));
    else
      c.add_le(inst.a(i));
  }
  return c;
}

HCone t_cone(const ProblemInstance& inst, const IndexSet& q) {
  HCone c(inst.dim());
  for (auto i : q) c.add_le(inst.a(i));
  return c;
}

bool ProductPiece::contains(const RatVec& u, const RatVec& v) const {
  return x_part.contains(u) && v_part.contains(v);
}

ProductPiece make_piece(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p) {
  ProductPiece pc;
  pc.label = {q, p};
  pc.x_generators = a_cone(inst, q, p);
  pc.x_cut = t_cone(inst, inst.restrict_i2(q));
  pc.x_part = intersect(vcone_to_hcone(pc.x_generators), pc.x_cut);
  pc.v_part = b_cone(inst, inst.restrict_i1(q), p);
  return pc;
}

VCone normal_cone(const ProblemInstance& inst, const RatVec& x) {
  check_dim(x, inst.dim(), "normal_cone point");
  if (!inst.theta().contains(x))
    throw OutsideSet("normal_cone: point " + format_vec(x) + " is not in Theta");
  IndexSet act;
  for (auto i : inst.i1())
    if (dot(inst.a(i), x) == inst.b(i)) act.push_back(i);
  return generated_cone(inst, act);
}

HCone tangent_cone(const ProblemInstance& inst, const RatVec& x, TangentOf which) {
  check_dim(x, inst.dim(), "tangent_cone point");
  const IndexSet& rows = which == TangentOf::Theta ? inst.i1()
                         : which == TangentOf::C   ? inst.i2()
                                                   : inst.all();
  HCone c(inst.dim());
  IndexSet violated;
  for (auto i : rows) {
    const Rat lhs = dot(inst.a(i), x);
    if (lhs > inst.b(i)) violated.push_back(i);
    if (lhs == inst.b(i)) c.add_le(inst.a(i));
  }
  if (!violated.empty())
    throw OutsideSet("tangent_cone: point " + format_vec(x) + " violates rows " +
                     inst.format(violated));
  return c;
}

FrechetNormalCone frechet_normal_cone_graph(const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  FrechetNormalCone out;
  out.piece = make_piece(inst, gp.active.all, gp.support);

  HCone tan_both = tangent_cone(inst, gp.x, TangentOf::ThetaCapC);
  tan_both.add_eq(gp.xstar);
  out.free_x_part = intersect(polar(hcone_to_vcone(tan_both)),
                              tangent_cone(inst, gp.x, TangentOf::C));
  out.free_v_part = tangent_cone(inst, gp.x, TangentOf::Theta);
  out.free_v_part.add_eq(gp.xstar);

  if (!set_equal(out.free_x_part, out.piece.x_part))
    throw InternalInconsistency("Frechet normal cone: x-parts of the two forms differ");
  if (!set_equal(out.free_v_part, out.piece.v_part))
    throw InternalInconsistency("Frechet normal cone: v-parts of the two forms differ");
  return out;
}

namespace {

PieceUnion build_union(const GraphPoint& gp, const std::vector<SubsetPair>& labels) {
  PieceUnion pu;
  pu.point = gp;
  pu.pieces = parallel_map<ProductPiece>(labels.size(), [&](std::size_t k) {
    return make_piece(gp.instance(), labels[k].q, labels[k].p);
  });
  return pu;
}

}  // namespace

PieceUnion limiting_normal_cone_graph(const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  const auto qs = subsets_of(gp.active.all);
  auto nonempty = parallel_map<char>(qs.size(), [&](std::size_t k) {
    return static_cast<char>(cq_nonempty(inst, qs[k]).has_value());
  });
  const auto ps = p_family(gp);
  std::vector<SubsetPair> labels;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    if (!nonempty[k]) continue;
    const IndexSet q1 = inst.restrict_i1(qs[k]);
    for (const auto& p : ps)
      if (is_subset(p, q1)) labels.push_back({qs[k], p});
  }
  return build_union(gp, labels);
}

PieceUnion limiting_normal_cone_graph_li(const GraphPoint& gp) {
  if (!gp.independent)
    throw DependentGenerators("active generators " + gp.instance().format(gp.active.all) +
                              " are linearly dependent");
  const ProblemInstance& inst = gp.instance();
  std::vector<SubsetPair> labels;
  for (const auto& q : subsets_of(gp.active.all))
    for (const auto& p : subsets_of(inst.restrict_i1(q)))
      if (is_subset(gp.support, p)) labels.push_back({q, p});
  return build_union(gp, labels);
}

std::optional<SubsetPair> member_union(const PieceUnion& pu, const RatVec& u, const RatVec& v) {
  for (const auto& pc : pu.pieces)
    if (pc.contains(u, v)) return pc.label;
  return std::nullopt;
}

bool piece_equal(const ProductPiece& a, const ProductPiece& b) {
  return set_equal(a.x_part, b.x_part) && set_equal(a.v_part, b.v_part);
}

bool piecewise_equal(const PieceUnion& a, const PieceUnion& b) {
  if (a.pieces.size() != b.pieces.size()) return false;
  for (std::size_t k = 0; k < a.pieces.size(); ++k) {
    if (!(a.pieces[k].label == b.pieces[k].label)) return false;
    if (!piece_equal(a.pieces[k], b.pieces[k])) return false;
  }
  return true;
}

}  // namespace polycone
