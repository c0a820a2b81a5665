#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycone/rational.hpp"

namespace polycone {

// Reduced row echelon form. `cols` is needed because a matrix with no rows
// still has a column count.
struct Echelon {
  RatMat rows;                      // nonzero rows only, pivot entries are 1
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const RatMat& m, std::size_t cols);

std::size_t rank(const RatMat& m);
std::size_t rank(const RatMat& m, std::size_t cols);

// Basis of {x : m x = 0}, one vector per free column, in column order.
RatMat nullspace(const RatMat& m, std::size_t cols);

// Canonical basis of span(rows): the nonzero rref rows.
RatMat span_basis(const RatMat& gens, std::size_t cols);
bool in_span(const RatMat& gens, const RatVec& v);

struct LinearSolution {
  RatVec particular;  // free variables set to zero
  RatMat nullspace;
};

// m x = rhs. nullopt if inconsistent; throws DimensionMismatch.
std::optional<LinearSolution> solve_linear(const RatMat& m, const RatVec& rhs, std::size_t cols);
std::optional<LinearSolution> solve_linear(const RatMat& m, const RatVec& rhs);

// Euclidean projection of p onto {x : eqs x = rhs}. Throws InconsistentSystem.
RatVec project_affine(const RatVec& p, const RatMat& eqs, const RatVec& rhs);

// Solve with a square nonsingular matrix; nullopt if singular.
std::optional<RatVec> solve_square(RatMat m, RatVec rhs);

}  // namespace polycone
