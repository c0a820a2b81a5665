#pragma once

// Test-side oracles that share no code with the library beyond the Rat type.

#include <optional>
#include <vector>

#include "polycone/polyhedron.hpp"

namespace polycone::ptest {

// Reduced row echelon form (own elimination, not the library's).
struct Rref {
  RatMat rows;
  std::vector<std::size_t> pivots;
};
Rref reduce(RatMat m, std::size_t cols);
// Unique solution of m x = rhs (m may be non-square), else nullopt.
std::optional<RatVec> solve_unique(const RatMat& m, const RatVec& rhs, std::size_t cols);
std::size_t brute_rank(const RatMat& m, std::size_t cols);
RatMat brute_nullspace(const RatMat& m, std::size_t cols);

// Extreme rays of {x : le x <= 0, eq x = 0} modulo its lineality space, by
// enumerating every subset of le rows, orthogonally projected onto the
// complement of the lineality space and scaled to primitive integers.
struct BruteCone {
  RatMat lineality;  // basis
  RatMat rays;       // sorted, primitive, in lineality^perp
};
BruteCone brute_extreme_rays(const HCone& h);

// Orthogonal projection onto the complement of span(basis).
RatVec project_out(const RatVec& v, const RatMat& basis);

// Canonical comparison of a V-cone against the brute-force answer.
bool same_cone(const VCone& v, const BruteCone& b);

// Direct definition of cone membership for tiny generator sets: x is a
// nonnegative combination of rays plus a combination of spans. Enumerates
// supports (Caratheodory) and solves square systems with own elimination.
bool brute_member(const VCone& v, const RatVec& x);

}  // namespace polycone::ptest
