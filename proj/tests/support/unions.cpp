#include "unions.hpp"

namespace polycone::ptest {

namespace {

// Normals n such that <n,x> > 0 takes x out of the cone; equalities count
// with both signs.
RatMat escapes(const HCone& c) {
  RatMat out = c.le;
  for (const auto& e : c.eq) {
    out.push_back(e);
    out.push_back(neg(e));
  }
  return out;
}

bool meets(HPolyhedron sys, const HCone& c) {
  for (const auto& l : c.le) sys.add(l, RelKind::LE, Rat(0));
  for (const auto& e : c.eq) sys.add(e, RelKind::EQ, Rat(0));
  return feasible(sys).has_value();
}

bool search(const std::vector<HCone>& outer, std::size_t j, HPolyhedron& sys) {
  if (!feasible(sys)) return false;
  if (j == outer.size()) return true;  // found a point of inner outside all outer pieces
  // A piece the current region already avoids needs no escape.
  if (!meets(sys, outer[j])) return search(outer, j + 1, sys);
  for (const auto& n : escapes(outer[j])) {
    sys.add(neg(n), RelKind::LT, Rat(0));
    const bool found = search(outer, j + 1, sys);
    sys.relations.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

bool union_covers(const std::vector<HCone>& outer, const HCone& inner) {
  const VCone gens = hcone_to_vcone(inner);
  for (const auto& o : outer)
    if (contains(o, gens)) return true;
  HPolyhedron sys(inner.dim);
  for (const auto& l : inner.le) sys.add(l, RelKind::LE, Rat(0));
  for (const auto& e : inner.eq) sys.add(e, RelKind::EQ, Rat(0));
  return !search(outer, 0, sys);
}

bool union_equal(const std::vector<HCone>& a, const std::vector<HCone>& b) {
  for (const auto& x : a)
    if (!union_covers(b, x)) return false;
  for (const auto& y : b)
    if (!union_covers(a, y)) return false;
  return true;
}

}  // namespace polycone::ptest
