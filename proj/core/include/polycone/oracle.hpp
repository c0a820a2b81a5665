#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polycone/cone_formulas.hpp"

namespace polycone {

// N(x, Theta n C) n R(x, C) computed from definitions only: polar of the DD
// generators of the tangent cone, cut by the radial cone of C.
struct ConvexFrechet {
  HCone h;
  VCone v;  // canonical
};
ConvexFrechet frechet_convex_oracle(const ProblemInstance& inst, const RatVec& xbar);

// gph N n (C x R^n) as a union of faces over Q1 subset of I1:
// {x in C : <a_i,x> = b_i on Q1, <= b_i on I1\Q1} x cone{a_i : i in Q1},
// as polyhedra over R^{2n} in (x, y) order. Empty faces are dropped.
struct GraphFace {
  IndexSet q1;
  HPolyhedron poly;
};
struct GraphDecomposition {
  std::size_t dim = 0;  // n
  std::vector<GraphFace> faces;

  std::vector<HPolyhedron> polyhedra() const;
};
GraphDecomposition graph_decomposition(const ProblemInstance& inst);

struct ProximalSample {
  RatVec z;          // sampled point in R^{2n}, x-part in C
  RatVec base;       // a nearest point of the graph
  RatVec direction;  // z - base, nonzero
};

// Deterministic for a given seed; offsets are multiples of radius/8 in each
// coordinate. Zero directions are dropped; ties contribute every minimiser.
std::vector<ProximalSample> proximal_normal_samples(const ProblemInstance& inst,
                                                    const GraphDecomposition& gd,
                                                    const RatVec& xbar, const RatVec& xstar,
                                                    const Rat& radius, std::size_t samples,
                                                    std::uint64_t seed);

// A radius r such that every base point of a sample drawn with radius <= r
// around `center` (in R^{2n}) lies where the graph coincides with center plus
// its tangent cone, so sampled directions are limiting normals at center.
// r = eps / (8n), eps the l_inf distance from center to the faces that miss it
// and to the hyperplanes of the face rows that are slack at center. nullopt:
// no such obstruction (any radius works).
std::optional<Rat> local_sampling_radius(const GraphDecomposition& gd, const RatVec& center);

// Aubin inclusion G(u) n B1(0,r) subset of G(x) + kappa ||u-x||_1 B1 for
// G(x) = -shift + N(x, Theta), tested on pairs of points of C.
struct AubinTriple {
  RatVec x;
  RatVec u;
  RatVec y;  // in G(u) n B1(0,r), farther than kappa ||u-x||_1 from G(x)
};

struct GridReport {
  std::size_t points = 0;
  std::size_t pairs = 0;
  std::optional<AubinTriple> counterexample;  // first in canonical order
};

class AubinGridChecker {
 public:
  AubinGridChecker(std::shared_ptr<const ProblemInstance> inst, RatVec shift, RatVec xbar,
                   Rat radius, Rat kappa);

  // The farthest vertex y of G(u) n B1(0,r) if it violates the inclusion.
  std::optional<RatVec> violation(const RatVec& x, const RatVec& u);

  // Grid xbar + step Z^n (l1 ball of the radius) plus extra points, all
  // intersected with C and the ball.
  GridReport run(const Rat& step, const RatMat& extra);

 private:
  struct Distance {
    bool infinite = false;
    Rat value;
    RatVec vertex;
  };
  std::optional<IndexSet> cls(const RatVec& p) const;  // nullopt: outside Theta
  const RatMat& vertices(const std::optional<IndexSet>& cu);
  const std::optional<Distance>& farthest(const std::optional<IndexSet>& cu,
                                          const std::optional<IndexSet>& cx);

  std::shared_ptr<const ProblemInstance> inst_;
  RatVec shift_, xbar_;
  Rat radius_, kappa_;
  std::map<std::optional<IndexSet>, RatMat> vertex_cache_;
  std::map<std::pair<std::optional<IndexSet>, std::optional<IndexSet>>, std::optional<Distance>>
      dist_cache_;
};

GridReport aubin_grid_check(std::shared_ptr<const ProblemInstance> inst, const RatVec& shift,
                            const RatVec& xbar, const Rat& radius, const Rat& kappa,
                            const Rat& grid_step, const RatMat& extra = {});

}  // namespace polycone
