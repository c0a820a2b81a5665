#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycone/cone_formulas.hpp"

namespace polycone {

enum class Exactness { Exact, SupersetOnly };

struct CoderivativePiece {
  std::optional<SubsetPair> label;  // pieces coming from the (Q,P) enumeration
  std::optional<IndexSet> t;        // pieces indexed by T in the I2-family
  VCone generators;
  HCone cut;
  HCone cone;  // H-form of generators n cut
};

struct CoderivativeValue {
  RatVec query;
  Exactness exactness = Exactness::Exact;
  std::vector<CoderivativePiece> pieces;
  std::vector<std::string> warnings;
  bool in_domain = false;  // according to the closed-form domain

  bool contains(const RatVec& v) const;
  bool is_origin() const;  // every piece is {0} (and there is at least one)
};

// {u : <a_i,u> = 0 on the support, <a_j,u> >= 0 on Upsilon(support)\support}
struct DomainCone {
  IndexSet eq_rows;
  IndexSet ge_rows;
  HCone cone;
  bool contains(const RatVec& u) const { return cone.contains(u); }
};

DomainCone coderivative_domain(const GraphPoint& gp);

// Exact: every limiting piece whose v-part contains -u. A disagreement with
// the closed-form domain is reported in `warnings`.
CoderivativeValue coderivative_value(const GraphPoint& gp, const RatVec& u);
CoderivativeValue coderivative_value(const PieceUnion& pu, const DomainCone& dom,
                                     const RatVec& u);

// (cone{a_i : I1+(x,u) u I2(x)} + span{a_i : I1(x,u)}) n T_T for each T in the
// relaxed I2-family (see i2_family_relaxed). Always a superset; with the
// narrower i2_family it can miss pieces whose Q|I1 is a proper subset of
// I1(x,u) u I1+(x,u) when generators are dependent. Throws OutsideDomain.
CoderivativeValue coderivative_superset(const GraphPoint& gp, const RatVec& u);

// Independent generators: (cone{a_i : I1+(x,u) u T} + span{a_i : I1(x,u)}) n T_T
// for each T in the I2-family; equal to the exact value. Throws
// DependentGenerators or OutsideDomain.
CoderivativeValue coderivative_value_li(const GraphPoint& gp, const RatVec& u);

// G(x) = -shift + N(x, Theta); (xbar, 0) in gph G iff shift in N(xbar, Theta).
// Throws InvalidGraphPoint when 0 is not in G(xbar).
GraphPoint g_graph_point(std::shared_ptr<const ProblemInstance> inst, const RatVec& xbar,
                         const RatVec& shift);
CoderivativeValue coderivative_G(std::shared_ptr<const ProblemInstance> inst,
                                 const RatVec& xbar, const RatVec& shift, const RatVec& u);

// Every piece of `inner` is contained in a single piece of `outer`.
bool piecewise_contained(const CoderivativeValue& inner, const CoderivativeValue& outer);

}  // namespace polycone
