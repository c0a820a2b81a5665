#include "polycone/aubin.hpp"

#include <algorithm>

#include "polycone/coderivative.hpp"
#include "polycone/errors.hpp"
#include "polycone/parallel.hpp"

namespace polycone {

namespace {

// Cone element -> certificate, mapping generator slots back to row indices.
FailureCertificate to_certificate(const ConeElement& e, const IndexSet& ray_rows,
                                  const IndexSet& span_rows) {
  FailureCertificate c;
  c.witness = e.v;
  for (std::size_t k = 0; k < ray_rows.size(); ++k)
    c.lambda.emplace_back(ray_rows[k], e.parts.at(0).ray_coeffs[k]);
  for (std::size_t k = 0; k < span_rows.size(); ++k)
    c.beta.emplace_back(span_rows[k], e.parts.at(0).span_coeffs[k]);
  return c;
}

VCone generated(const ProblemInstance& inst, const IndexSet& rays, const IndexSet& spans) {
  VCone g(inst.dim());
  for (auto i : rays) g.rays.push_back(inst.a(i));
  for (auto i : spans) g.spans.push_back(inst.a(i));
  return g;
}

// Per T: the first nonzero element of (cone{rays(T)} + span{spans}) n T_T.
struct PerT {
  IndexSet t;
  std::optional<FailureCertificate> hit;
};

template <class RaysOf>
std::vector<PerT> scan_condition_set(const GraphPoint& gp, const std::vector<IndexSet>& family,
                                     RaysOf rays_of) {
  const ProblemInstance& inst = gp.instance();
  return parallel_map<PerT>(family.size(), [&](std::size_t k) {
    const IndexSet& t = family[k];
    const IndexSet rays = rays_of(t);
    PerT r{t, std::nullopt};
    auto e = find_nonzero({generated(inst, rays, gp.active.i1)}, t_cone(inst, t));
    if (e) {
      r.hit = to_certificate(*e, rays, gp.active.i1);
      r.hit->t = t;
    }
    return r;
  });
}

}  // namespace

RatVec reconstruct(const ProblemInstance& inst, const FailureCertificate& c) {
  RatVec v = zeros(inst.dim());
  for (const auto& [i, l] : c.lambda) axpy(l, inst.a(i), v);
  for (const auto& [j, b] : c.beta) axpy(b, inst.a(j), v);
  return v;
}

AubinVerdict aubin_exact(const PieceUnion& pu) {
  const ProblemInstance& inst = pu.point.instance();
  AubinVerdict out;
  out.method = AubinMethod::ExactEnumeration;
  auto hits = parallel_map<std::optional<ConeElement>>(pu.pieces.size(), [&](std::size_t k) {
    const auto& pc = pu.pieces[k];
    return find_nonzero({pc.x_generators}, pc.x_cut);
  });
  for (std::size_t k = 0; k < pu.pieces.size(); ++k) {
    const auto& pc = pu.pieces[k];
    if (!hits[k]) {
      out.trivial.push_back({pc.label, std::nullopt});
      continue;
    }
    const IndexSet rays = set_minus(pc.label.q, pc.label.p);
    FailureCertificate c = to_certificate(*hits[k], rays, pc.label.p);
    c.form = CertificateForm::Piece;
    c.label = pc.label;
    c.t = inst.restrict_i2(pc.label.q);
    out.verdict = Verdict::Fails;
    out.failure = std::move(c);
    out.trivial.clear();
    return out;
  }
  out.verdict = Verdict::Holds;
  return out;
}

AubinVerdict aubin_exact(const GraphPoint& gp) { return aubin_exact(limiting_normal_cone_graph(gp)); }

AubinVerdict aubin_sufficient(const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  // The relaxed family keeps the set a superset of D*N(x,x*)(0) also for
  // dependent generators; with independent ones the two families coincide.
  const auto family = i2_family_relaxed(inst, gp.active, zeros(inst.dim()));
  const IndexSet& bar2 = gp.active.i2;
  auto scan = scan_condition_set(gp, family, [&](const IndexSet&) { return bar2; });

  AubinVerdict out;
  std::optional<FailureCertificate> element;
  for (const auto& r : scan)
    if (r.hit) {
      element = r.hit;
      element->form = CertificateForm::ConditionSet;
      break;
    }
  if (!element) {
    out.verdict = Verdict::Holds;
    out.method = AubinMethod::SufficientCondition;
    for (const auto& r : scan) out.trivial.push_back({std::nullopt, r.t});
    return out;
  }

  if (gp.independent) {
    // Independent generators: the exact test per T uses cone{a_i : i in T}
    // only, which is the (Q = I1(x) u T, P = I1(x)) piece.
    out.method = AubinMethod::LIExact;
    out.inconclusive = element;
    out.notes.push_back(
        "sufficient-condition set is nontrivial; decided by the per-T pieces "
        "(cone{a_i : i in T} + span{a_j : j in I1(x)}) n T_T");
    auto exact = scan_condition_set(gp, family, [](const IndexSet& t) { return t; });
    for (const auto& r : exact) {
      if (!r.hit) {
        out.trivial.push_back({SubsetPair{set_union(gp.active.i1, r.t), gp.active.i1}, r.t});
        continue;
      }
      FailureCertificate c = *r.hit;
      c.form = CertificateForm::Piece;
      c.label = {set_union(gp.active.i1, r.t), gp.active.i1};
      out.verdict = Verdict::Fails;
      out.failure = std::move(c);
      out.trivial.clear();
      return out;
    }
    out.verdict = Verdict::Holds;
    return out;
  }

  AubinVerdict exact = aubin_exact(gp);
  exact.inconclusive = element;
  exact.notes.push_back(
      "sufficient-condition set is nontrivial and the active generators are dependent; "
      "verdict taken from the exact (Q,P) enumeration");
  return exact;
}

AubinVerdict aubin_G(std::shared_ptr<const ProblemInstance> inst, const RatVec& xbar,
                     const RatVec& shift) {
  return aubin_exact(g_graph_point(std::move(inst), xbar, shift));
}

CertificateCheck verify_certificate(const GraphPoint& gp, const FailureCertificate& c) {
  const ProblemInstance& inst = gp.instance();
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (c.witness.size() != inst.dim()) return fail("witness has the wrong dimension");
  for (const auto& [i, l] : c.lambda) {
    if (i >= inst.size()) return fail("cone coefficient on an unknown row");
    if (sgn(l) < 0) return fail("negative cone coefficient on row " + inst.format({i}));
  }
  for (const auto& [j, b] : c.beta)
    if (j >= inst.size()) return fail("span coefficient on an unknown row");

  IndexSet lam_rows, beta_rows;
  for (const auto& kv : c.lambda) lam_rows.push_back(kv.first);
  for (const auto& kv : c.beta) beta_rows.push_back(kv.first);
  std::sort(lam_rows.begin(), lam_rows.end());
  std::sort(beta_rows.begin(), beta_rows.end());

  if (c.form == CertificateForm::Piece) {
    const IndexSet& q = c.label.q;
    const IndexSet& p = c.label.p;
    if (!is_subset(q, gp.active.all)) return fail("Q is not contained in I(x)");
    if (!is_subset(p, inst.restrict_i1(q))) return fail("P is not contained in Q|I1");
    if (!cq_nonempty(inst, q)) return fail("C_Q is empty");
    if (!member(generated_cone(inst, p), gp.xstar)) return fail("P is not in the P-family");
    if (c.t != inst.restrict_i2(q)) return fail("T differs from Q|I2");
    if (!is_subset(lam_rows, set_minus(q, p))) return fail("cone coefficients outside Q\\P");
    if (!is_subset(beta_rows, p)) return fail("span coefficients outside P");
  } else {
    if (!is_subset(c.t, gp.active.i2)) return fail("T is not contained in I2(x)");
    const auto family = i2_family_relaxed(inst, gp.active, zeros(inst.dim()));
    if (std::find(family.begin(), family.end(), c.t) == family.end())
      return fail("C_{Q1 u T} is empty for every Q1 subset of I1(x)");
    if (!is_subset(lam_rows, gp.active.i2)) return fail("cone coefficients outside I2(x)");
    if (!is_subset(beta_rows, gp.active.i1)) return fail("span coefficients outside I1(x)");
  }
  const RatVec v = reconstruct(inst, c);
  if (v != c.witness) return fail("coefficients do not reproduce the witness");
  if (is_zero(v)) return fail("witness is zero");
  for (auto k : c.t)
    if (sgn(dot(inst.a(k), v)) > 0) return fail("witness violates <a_k, v> <= 0 for a row of T");
  return {true, "ok"};
}

}  // namespace polycone
