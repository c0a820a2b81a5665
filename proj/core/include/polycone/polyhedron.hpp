#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polycone/rational.hpp"

namespace polycone {

enum class RelKind { LE, LT, EQ };

// <normal, x> (<=|<|=) rhs.
struct LinRel {
  RatVec normal;
  Rat rhs;
  RelKind kind = RelKind::LE;

  enum class Degeneracy { Proper, AlwaysTrue, AlwaysFalse };
  // Zero normals are legal but decided at construction time.
  Degeneracy degeneracy() const;
  bool satisfied_by(const RatVec& x) const;
};

struct HPolyhedron {
  std::size_t dim = 0;
  std::vector<LinRel> relations;

  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t d) : dim(d) {}
  void add(RatVec normal, RelKind kind, Rat rhs);
  bool contains(const RatVec& x) const;
  bool has_strict() const;
};

struct Witness {
  RatVec point;
  std::vector<std::pair<std::size_t, Rat>> slacks;  // relation index, rhs - <normal, point>
};

// {x : <l,x> <= 0 for l in le, <e,x> = 0 for e in eq}.
struct HCone {
  std::size_t dim = 0;
  RatMat le;
  RatMat eq;

  HCone() = default;
  explicit HCone(std::size_t d) : dim(d) {}
  static HCone full(std::size_t d) { return HCone(d); }
  static HCone origin(std::size_t d);
  bool contains(const RatVec& v) const;
  void add_le(RatVec n);
  void add_eq(RatVec n);
};

// cone{rays} + span{spans}.
struct VCone {
  std::size_t dim = 0;
  RatMat rays;
  RatMat spans;

  VCone() = default;
  explicit VCone(std::size_t d) : dim(d) {}
  static VCone origin(std::size_t d) { return VCone(d); }
  static VCone full(std::size_t d);
  bool is_origin() const;  // every generator is zero
};

std::optional<Witness> feasible(const HPolyhedron& sys);

// Double description. Output is canonical: rays are primitive integer vectors
// of the pointed part orthogonal to the lineality space, sorted
// lexicographically; spans are the rref basis of the lineality space.
// Throws DimensionCapExceeded above dim_cap().
VCone hcone_to_vcone(const HCone& c);
HCone vcone_to_hcone(const VCone& c);

HCone polar(const VCone& c);
VCone polar(const HCone& c);
HCone intersect(const HCone& a, const HCone& b);

bool member(const HCone& c, const RatVec& v);
bool member(const VCone& c, const RatVec& v);

struct ConeCombination {
  RatVec ray_coeffs;   // >= 0
  RatVec span_coeffs;  // free
};
std::optional<ConeCombination> decompose(const VCone& c, const RatVec& v);
RatVec combine(const VCone& c, const ConeCombination& k);

// A nonzero v lying in every generated cone of `gens` and in `cut`, together
// with its representation in each generated cone. Found by optimising each
// coordinate of v over the box [-1,1]^n in index order (max, then min).
struct ConeElement {
  RatVec v;
  std::vector<ConeCombination> parts;
};
std::optional<ConeElement> find_nonzero(const std::vector<VCone>& gens, const HCone& cut);

bool cone_is_trivial(const HCone& c);
std::optional<RatVec> nonzero_element(const HCone& c);

// Set relations.
bool contains(const HCone& outer, const VCone& inner);
bool contains(const VCone& outer, const VCone& inner);
bool set_equal(const HCone& a, const HCone& b);
bool set_equal(const VCone& a, const VCone& b);

struct Projection {
  RatVec point;
  Rat dist2;
  std::size_t piece = 0;  // index within the union (0 for a single polyhedron)
};

// Exact Euclidean projection by active-set enumeration. Strict rows are not
// allowed. Throws EmptyPolyhedron.
Projection project_polyhedron(const RatVec& p, const HPolyhedron& poly);
// All distinct minimisers over the nonempty members, sorted by point.
std::vector<Projection> project_union(const RatVec& p, const std::vector<HPolyhedron>& polys);

}  // namespace polycone
