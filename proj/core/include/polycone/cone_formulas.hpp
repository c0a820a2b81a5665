#pragma once

#include <optional>
#include <vector>

#include "polycone/index_sets.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

struct SubsetPair {
  IndexSet q;
  IndexSet p;  // subset of q restricted to I1
  bool operator==(const SubsetPair&) const = default;
};

// A_{Q,P} = cone{a_i : i in Q\P} + span{a_i : i in P}
VCone a_cone(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p);
// B_{Q,P} = {u : <a_i,u> <= 0 on Q, = 0 on P}
HCone b_cone(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p);
// T_Q = {u : <a_i,u> <= 0 on Q}; T_empty is the whole space.
HCone t_cone(const ProblemInstance& inst, const IndexSet& q);

// (A_{Q,P} n T_{Q|I2}) x B_{Q|I1,P}
struct ProductPiece {
  SubsetPair label;
  VCone x_generators;  // A_{Q,P}
  HCone x_cut;         // T_{Q|I2}
  HCone x_part;        // H-form of A_{Q,P} n T_{Q|I2}
  HCone v_part;        // B_{Q|I1,P}

  bool contains(const RatVec& u, const RatVec& v) const;
};

ProductPiece make_piece(const ProblemInstance& inst, const IndexSet& q, const IndexSet& p);

struct PieceUnion {
  GraphPoint point;
  std::vector<ProductPiece> pieces;  // canonical (Q, then P) order
};

// N(x, Theta) = cone{a_i : i in I1(x)}. Throws OutsideSet if x is not in Theta.
VCone normal_cone(const ProblemInstance& inst, const RatVec& x);

enum class TangentOf { Theta, ThetaCapC, C };
HCone tangent_cone(const ProblemInstance& inst, const RatVec& x, TangentOf which);

struct FrechetNormalCone {
  ProductPiece piece;  // index form, label (I(x), support)
  HCone free_x_part;   // (T(x,Theta n C) n {x*}^perp)^polar n T(x,C), via DD
  HCone free_v_part;   // T(x,Theta) n {x*}^perp
};

// Computes both forms and throws InternalInconsistency if they differ.
FrechetNormalCone frechet_normal_cone_graph(const GraphPoint& gp);

PieceUnion limiting_normal_cone_graph(const GraphPoint& gp);
// Requires independent active generators (throws DependentGenerators); skips
// the C_Q tests and takes every P with support subset P subset Q|I1.
PieceUnion limiting_normal_cone_graph_li(const GraphPoint& gp);

std::optional<SubsetPair> member_union(const PieceUnion& pu, const RatVec& u, const RatVec& v);

// Set equality of both factors.
bool piece_equal(const ProductPiece& a, const ProductPiece& b);
// Same labels in the same order and set-equal pieces.
bool piecewise_equal(const PieceUnion& a, const PieceUnion& b);

}  // namespace polycone
