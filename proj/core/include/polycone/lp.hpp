#pragma once

#include <cstddef>
#include <vector>

#include "polycone/rational.hpp"

namespace polycone {

enum class Sense { LE, EQ, GE };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVec x;       // meaningful unless Infeasible
  Rat objective;  // meaningful when Optimal
};

// Exact two-phase primal simplex, Bland's rule, dense tableau. Variables are
// free unless marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t nvars);

  std::size_t num_vars() const { return n_; }
  void add(RatVec coeffs, Sense sense, Rat rhs);
  void set_nonneg(std::size_t j, bool nonneg = true);

  LpSolution maximize(const RatVec& c) const;
  LpSolution minimize(const RatVec& c) const;
  LpSolution find_feasible() const;

 private:
  struct Row {
    RatVec a;
    Sense sense;
    Rat b;
  };
  LpSolution solve(const RatVec& cost) const;  // minimizes

  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<bool> nonneg_;
};

}  // namespace polycone
