#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycone/aubin.hpp"
#include "polycone/index_sets.hpp"

namespace polycone {

// conv{points} + cone{rays} + span{lines}
struct VPolyhedron {
  std::size_t dim = 0;
  RatMat points;
  RatMat rays;
  RatMat lines;

  bool contains(const RatVec& v) const;
};

// Set equality via homogenisation (both must be nonempty).
bool set_equal(const VPolyhedron& a, const VPolyhedron& b);

enum class Provenance { UserSupplied, AffineMaxDerived };

struct SubdifferentialData {
  VPolyhedron sub;  // restricted subdifferential at xbar
  VCone horizon;    // restricted singular (horizon) subdifferential at xbar
  Provenance provenance = Provenance::UserSupplied;
  std::vector<std::string> caveats;
};

struct AffinePiece {
  RatVec g;
  Rat h;
};

// f = max_k <g_k, x> + h_k. Only conv{g_k : k active at xbar} is derived; the
// horizon part is {0}.
SubdifferentialData affine_max_subdifferential(const std::vector<AffinePiece>& pieces,
                                               const RatVec& xbar);

// Objective models whose values can be compared exactly.
struct ObjectiveModel {
  enum class Kind { AffineMax, SqrtAbsAffine };  // SqrtAbsAffine: sqrt|<g,x> + h|
  Kind kind = Kind::AffineMax;
  std::vector<AffinePiece> pieces;

  // f(a) < f(b)
  bool less(const RatVec& a, const RatVec& b) const;
};

struct GridSpec {
  std::vector<Rat> deltas;
  std::optional<Rat> step;  // lattice xbar + step * Z^n
  RatMat points;            // extra explicit points
};

struct BilevelProblem {
  std::shared_ptr<const ProblemInstance> inst;
  RatVec c;          // lower-level objective
  RatVec candidate;  // xbar
  SubdifferentialData subdiff;
  bool q2_asserted = false;
  std::string q2_justification;
  bool robust = false;  // user declares xbar a robust local solution
  std::optional<ObjectiveModel> f;
  GridSpec grid;
};

// (xbar, -c) as a graph point. Throws InfeasibleCandidate naming the failing
// condition.
GraphPoint validate_candidate(const BilevelProblem& bp);

struct ConditionPiece {
  IndexSet t;
  VCone generators;  // cone{a_i : I2(x)} + span{a_j : I1(x)}
  HCone cut;         // T_T
  VCone cone;        // canonical V-form of generators n cut
  VPolyhedron assembled;  // sub + cone
};

// S = union of the condition pieces over the relaxed I2-family at u = 0 (a
// superset of the coderivative at 0 also with dependent generators).
std::vector<ConditionPiece> condition_set(const BilevelProblem& bp, const GraphPoint& gp);

struct Q1Result {
  bool passed = true;
  std::optional<IndexSet> t;
  std::optional<RatVec> witness;
};

Q1Result check_q1(const BilevelProblem& bp, const GraphPoint& gp);
bool lipschitz_wrt_C(const BilevelProblem& bp);

struct OptimalityWitness {
  IndexSet t;
  RatVec g;  // in sub
  RatVec s;  // in the T-piece of S, g + s = 0
  RatVec point_weights;  // convex weights on sub.points
  RatVec ray_weights;
  RatVec line_weights;
  Coefficients lambda;  // on I2(x)
  Coefficients beta;    // on I1(x)
};

struct GridEvidence {
  Rat delta;
  std::size_t points_checked = 0;
  bool passed = true;
  std::optional<RatVec> failing_point;
};

struct GateResult {
  enum class Kind { RobustSolution, LocalSolutionGrid } kind = Kind::RobustSolution;
  std::vector<GridEvidence> evidence;
  bool passed = true;
};

// Declared robust -> RobustSolution. Otherwise checks, on the finite grid of
// C n B1(xbar, delta), that d(0,G(x)) > 0 implies f(xbar) < f(x).
GateResult robustness_gate(const BilevelProblem& bp, const GraphPoint& gp);

struct OptimalityReport {
  Q1Result q1;
  bool lipschitz = false;
  std::vector<ConditionPiece> pieces;
  bool holds = false;
  std::optional<OptimalityWitness> witness;
  GateResult gate;
  std::vector<std::string> caveats;
};

OptimalityReport necessary_condition(const BilevelProblem& bp, const GraphPoint& gp);

// Re-checks g + s = 0, g in sub from the stored weights, s from lambda/beta.
bool verify_witness(const BilevelProblem& bp, const GraphPoint& gp, const OptimalityWitness& w);

}  // namespace polycone
