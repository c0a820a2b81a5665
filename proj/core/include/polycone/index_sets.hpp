#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "polycone/instance.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

struct ActiveSets {
  RatVec at;
  IndexSet i1;   // I1(x)
  IndexSet i2;   // I2(x)
  IndexSet all;  // I(x)
};

// Throws OutsideSet (listing violated labels) unless x is in Theta and C.
ActiveSets active_sets(const ProblemInstance& inst, const RatVec& x);

struct GraphPoint {
  std::shared_ptr<const ProblemInstance> inst;
  RatVec x;
  RatVec xstar;
  ActiveSets active;
  RatVec multipliers;  // one per row, zero off the support
  IndexSet support;    // {i : lambda_i > 0}, subset of I1(x)
  bool independent = false;  // {a_i : i in I(x)} linearly independent

  const ProblemInstance& instance() const { return *inst; }
};

// Throws InvalidGraphPoint if x is outside Theta and C or xstar is not in
// N(x, Theta). Independent active generators give the unique multiplier;
// otherwise the support is the lexicographically first minimum-cardinality P
// with xstar in cone{a_i : i in P}.
GraphPoint validate_graph_point(std::shared_ptr<const ProblemInstance> inst, const RatVec& x,
                                const RatVec& xstar);
GraphPoint validate_graph_point(const ProblemInstance& inst, const RatVec& x,
                                const RatVec& xstar);

// cone{a_i : i in s} (as a VCone with the rows as rays).
VCone generated_cone(const ProblemInstance& inst, const IndexSet& s);

// All P subset of I1(x) with xstar in cone{a_i : i in P}, canonical order.
std::vector<IndexSet> p_family(const GraphPoint& gp);

// C_Q: <a_i,x> = b_i on Q, < b_i on the other rows.
HPolyhedron cq_system(const ProblemInstance& inst, const IndexSet& q);
// closure: <a_i,x> = b_i on T, <= b_i on the other rows.
HPolyhedron cbar_system(const ProblemInstance& inst, const IndexSet& t);
std::optional<Witness> cq_nonempty(const ProblemInstance& inst, const IndexSet& q);

// {i in I1(x) : <a_i,x> = b_i on all of closure(C_T)}.
IndexSet upsilon(const ProblemInstance& inst, const ActiveSets& act, const IndexSet& t);

struct CharacteristicSets {
  IndexSet zero;  // I1(x,u): <a_i,u> = 0
  IndexSet plus;  // I1+(x,u): <a_i,u> > 0
};
CharacteristicSets characteristic_sets(const ProblemInstance& inst, const ActiveSets& act,
                                       const RatVec& u);

// {T subset of I2(x) : C_{I1(x,u) u I1+(x,u) u T} nonempty}, canonical order.
std::vector<IndexSet> i2_family(const ProblemInstance& inst, const ActiveSets& act,
                                const RatVec& u);

// {T subset of I2(x) : C_{Q1 u T} nonempty for some Q1 subset of I1(x,u) u I1+(x,u)}.
// Contains i2_family; it is the family every admissible piece's Q|I2 belongs to.
std::vector<IndexSet> i2_family_relaxed(const ProblemInstance& inst, const ActiveSets& act,
                                        const RatVec& u);

}  // namespace polycone
