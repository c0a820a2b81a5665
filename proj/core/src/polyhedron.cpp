#include "polycone/polyhedron.hpp"

#include "polycone/errors.hpp"
#include "polycone/lp.hpp"

namespace polycone {

LinRel::Degeneracy LinRel::degeneracy() const {
  if (!is_zero(normal)) return Degeneracy::Proper;
  const int s = sgn(rhs);
  bool ok = false;
  switch (kind) {
    case RelKind::LE: ok = s >= 0; break;
    case RelKind::LT: ok = s > 0; break;
    case RelKind::EQ: ok = s == 0; break;
  }
  return ok ? Degeneracy::AlwaysTrue : Degeneracy::AlwaysFalse;
}

bool LinRel::satisfied_by(const RatVec& x) const {
  const Rat lhs = dot(normal, x);
  switch (kind) {
    case RelKind::LE: return lhs <= rhs;
    case RelKind::LT: return lhs < rhs;
    case RelKind::EQ: return lhs == rhs;
  }
  return false;
}

void HPolyhedron::add(RatVec normal, RelKind kind, Rat rhs) {
  check_dim(normal, dim, "HPolyhedron::add");
  relations.push_back({std::move(normal), std::move(rhs), kind});
}

bool HPolyhedron::contains(const RatVec& x) const {
  check_dim(x, dim, "HPolyhedron::contains");
  for (const auto& r : relations)
    if (!r.satisfied_by(x)) return false;
  return true;
}

bool HPolyhedron::has_strict() const {
  for (const auto& r : relations)
    if (r.kind == RelKind::LT) return true;
  return false;
}

HCone HCone::origin(std::size_t d) {
  HCone c(d);
  for (std::size_t i = 0; i < d; ++i) c.eq.push_back(unit(d, i));
  return c;
}

bool HCone::contains(const RatVec& v) const {
  check_dim(v, dim, "HCone::contains");
  for (const auto& l : le)
    if (sgn(dot(l, v)) > 0) return false;
  for (const auto& e : eq)
    if (sgn(dot(e, v)) != 0) return false;
  return true;
}

void HCone::add_le(RatVec n) {
  check_dim(n, dim, "HCone::add_le");
  le.push_back(std::move(n));
}

void HCone::add_eq(RatVec n) {
  check_dim(n, dim, "HCone::add_eq");
  eq.push_back(std::move(n));
}

VCone VCone::full(std::size_t d) {
  VCone c(d);
  for (std::size_t i = 0; i < d; ++i) c.spans.push_back(unit(d, i));
  return c;
}

bool VCone::is_origin() const {
  for (const auto& r : rays)
    if (!is_zero(r)) return false;
  for (const auto& s : spans)
    if (!is_zero(s)) return false;
  return true;
}

std::optional<Witness> feasible(const HPolyhedron& sys) {
  const std::size_t n = sys.dim;
  std::vector<std::size_t> proper;
  bool strict = false;
  for (std::size_t i = 0; i < sys.relations.size(); ++i) {
    const auto& r = sys.relations[i];
    check_dim(r.normal, n, "feasible");
    switch (r.degeneracy()) {
      case LinRel::Degeneracy::AlwaysFalse: return std::nullopt;
      case LinRel::Degeneracy::AlwaysTrue: continue;
      case LinRel::Degeneracy::Proper: break;
    }
    proper.push_back(i);
    strict = strict || r.kind == RelKind::LT;
  }
  // Variables: x (free) and, with strict rows, a slack t <= 1 to maximise.
  const std::size_t nv = n + (strict ? 1 : 0);
  LinearProgram lp(nv);
  for (auto i : proper) {
    const auto& r = sys.relations[i];
    RatVec row = r.normal;
    row.resize(nv, Rat(0));
    if (r.kind == RelKind::EQ) {
      lp.add(std::move(row), Sense::EQ, r.rhs);
    } else {
      if (r.kind == RelKind::LT) row[n] = 1;
      lp.add(std::move(row), Sense::LE, r.rhs);
    }
  }
  RatVec x;
  if (strict) {
    lp.add(unit(nv, n), Sense::LE, Rat(1));
    LpSolution s = lp.maximize(unit(nv, n));
    if (s.status != LpStatus::Optimal || sgn(s.objective) <= 0) return std::nullopt;
    x.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    LpSolution s = lp.find_feasible();
    if (s.status == LpStatus::Infeasible) return std::nullopt;
    x = s.x;
  }
  Witness w;
  w.point = x;
  for (std::size_t i = 0; i < sys.relations.size(); ++i) {
    const auto& r = sys.relations[i];
    w.slacks.emplace_back(i, r.rhs - dot(r.normal, x));
    if (!r.satisfied_by(x))
      throw InternalInconsistency("feasible: witness violates relation " + std::to_string(i));
  }
  return w;
}

HCone polar(const VCone& c) {
  HCone h(c.dim);
  for (const auto& r : c.rays)
    if (!is_zero(r)) h.add_le(r);
  for (const auto& s : c.spans)
    if (!is_zero(s)) h.add_eq(s);
  return h;
}

VCone polar(const HCone& c) {
  VCone v(c.dim);
  for (const auto& l : c.le)
    if (!is_zero(l)) v.rays.push_back(l);
  for (const auto& e : c.eq)
    if (!is_zero(e)) v.spans.push_back(e);
  return v;
}

HCone intersect(const HCone& a, const HCone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("intersect: cone dimensions differ");
  HCone c = a;
  c.le.insert(c.le.end(), b.le.begin(), b.le.end());
  c.eq.insert(c.eq.end(), b.eq.begin(), b.eq.end());
  return c;
}

bool member(const HCone& c, const RatVec& v) { return c.contains(v); }

bool member(const VCone& c, const RatVec& v) { return decompose(c, v).has_value(); }

std::optional<ConeCombination> decompose(const VCone& c, const RatVec& v) {
  check_dim(v, c.dim, "member");
  const std::size_t nr = c.rays.size(), ns = c.spans.size();
  LinearProgram lp(nr + ns);
  for (std::size_t j = 0; j < nr; ++j) lp.set_nonneg(j);
  for (std::size_t i = 0; i < c.dim; ++i) {
    RatVec row(nr + ns);
    for (std::size_t j = 0; j < nr; ++j) row[j] = c.rays[j].at(i);
    for (std::size_t j = 0; j < ns; ++j) row[nr + j] = c.spans[j].at(i);
    lp.add(std::move(row), Sense::EQ, v[i]);
  }
  LpSolution s = lp.find_feasible();
  if (s.status == LpStatus::Infeasible) return std::nullopt;
  ConeCombination k;
  k.ray_coeffs.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(nr));
  k.span_coeffs.assign(s.x.begin() + static_cast<std::ptrdiff_t>(nr), s.x.end());
  return k;
}

RatVec combine(const VCone& c, const ConeCombination& k) {
  check_dim(k.ray_coeffs, c.rays.size(), "combine rays");
  check_dim(k.span_coeffs, c.spans.size(), "combine spans");
  RatVec v = zeros(c.dim);
  for (std::size_t j = 0; j < c.rays.size(); ++j) axpy(k.ray_coeffs[j], c.rays[j], v);
  for (std::size_t j = 0; j < c.spans.size(); ++j) axpy(k.span_coeffs[j], c.spans[j], v);
  return v;
}

std::optional<ConeElement> find_nonzero(const std::vector<VCone>& gens, const HCone& cut) {
  const std::size_t n = cut.dim;
  std::vector<std::size_t> offset;
  std::size_t nv = n;
  for (const auto& g : gens) {
    if (g.dim != n) throw DimensionMismatch("find_nonzero: generator cone dimension");
    offset.push_back(nv);
    nv += g.rays.size() + g.spans.size();
  }
  LinearProgram lp(nv);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t j = 0; j < gens[k].rays.size(); ++j) lp.set_nonneg(offset[k] + j);
  auto lift = [&](const RatVec& a) {
    RatVec row = a;
    row.resize(nv, Rat(0));
    return row;
  };
  for (const auto& l : cut.le) lp.add(lift(l), Sense::LE, Rat(0));
  for (const auto& e : cut.eq) lp.add(lift(e), Sense::EQ, Rat(0));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& g = gens[k];
    for (std::size_t i = 0; i < n; ++i) {
      RatVec row = zeros(nv);
      row[i] = 1;
      for (std::size_t j = 0; j < g.rays.size(); ++j) row[offset[k] + j] = -g.rays[j].at(i);
      for (std::size_t j = 0; j < g.spans.size(); ++j)
        row[offset[k] + g.rays.size() + j] = -g.spans[j].at(i);
      lp.add(std::move(row), Sense::EQ, Rat(0));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    lp.add(unit(nv, i), Sense::LE, Rat(1));
    lp.add(unit(nv, i), Sense::GE, Rat(-1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int dir : {1, -1}) {
      LpSolution s = dir > 0 ? lp.maximize(unit(nv, i)) : lp.minimize(unit(nv, i));
      if (s.status != LpStatus::Optimal || sgn(s.objective) == 0) continue;
      ConeElement e;
      e.v.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(n));
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& g = gens[k];
        auto at = s.x.begin() + static_cast<std::ptrdiff_t>(offset[k]);
        const auto nr = static_cast<std::ptrdiff_t>(g.rays.size());
        const auto ns = static_cast<std::ptrdiff_t>(g.spans.size());
        e.parts.push_back({RatVec(at, at + nr), RatVec(at + nr, at + nr + ns)});
      }
      return e;
    }
  }
  return std::nullopt;
}

std::optional<RatVec> nonzero_element(const HCone& c) {
  auto e = find_nonzero({}, c);
  if (!e) return std::nullopt;
  return e->v;
}

bool cone_is_trivial(const HCone& c) { return !nonzero_element(c).has_value(); }

bool contains(const HCone& outer, const VCone& inner) {
  for (const auto& r : inner.rays)
    if (!outer.contains(r)) return false;
  for (const auto& s : inner.spans)
    if (!outer.contains(s) || !outer.contains(neg(s))) return false;
  return true;
}

bool contains(const VCone& outer, const VCone& inner) {
  for (const auto& r : inner.rays)
    if (!member(outer, r)) return false;
  for (const auto& s : inner.spans)
    if (!member(outer, s) || !member(outer, neg(s))) return false;
  return true;
}

bool set_equal(const HCone& a, const HCone& b) {
  if (a.dim != b.dim) return false;
  VCone va = hcone_to_vcone(a), vb = hcone_to_vcone(b);
  return va.rays == vb.rays && va.spans == vb.spans;
}

bool set_equal(const VCone& a, const VCone& b) {
  return a.dim == b.dim && contains(a, b) && contains(b, a);
}

}  // namespace polycone
