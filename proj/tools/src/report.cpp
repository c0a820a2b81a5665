#include "report.hpp"

#include <sstream>

namespace polycone::cli {

json to_json(const Rat& r) { return format_rat(r); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rat(x));
  return a;
}

json to_json(const RatMat& m) {
  json a = json::array();
  for (const auto& v : m) a.push_back(to_json(v));
  return a;
}

json labels(const ProblemInstance& inst, const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(inst.label(i) + 1);
  return a;
}

json coefficients(const ProblemInstance& inst, const Coefficients& c) {
  json a = json::array();
  for (const auto& [i, v] : c) a.push_back({{"row", inst.label(i) + 1}, {"value", to_json(v)}});
  return a;
}

json cone_json(const VCone& v) {
  // Round-trip through DD so equal sets print identically.
  const VCone c = hcone_to_vcone(vcone_to_hcone(v));
  return {{"rays", to_json(c.rays)}, {"lines", to_json(c.spans)}};
}

json cone_json(const HCone& h) {
  const VCone c = hcone_to_vcone(h);
  return {{"rays", to_json(c.rays)}, {"lines", to_json(c.spans)}};
}

json instance_summary(const ProblemInstance& inst) {
  json rows = json::array();
  for (const auto& r : inst.rows())
    rows.push_back({{"row", r.label + 1},
                    {"set", r.group == Group::I1 ? "theta" : "c_set"},
                    {"a", to_json(r.a)},
                    {"b", to_json(r.b)}});
  json dropped = json::array();
  for (auto l : inst.dropped_labels()) dropped.push_back(l + 1);
  return {{"dim", inst.dim()},
          {"theta_rows", inst.i1().size()},
          {"c_rows", inst.i2().size()},
          {"rows", rows},
          {"dropped_zero_rows", dropped}};
}

json graph_point_json(const GraphPoint& gp) {
  const ProblemInstance& inst = gp.instance();
  json mult = json::array();
  for (auto i : gp.support) mult.push_back({{"row", inst.label(i) + 1}, {"value", to_json(gp.multipliers[i])}});
  return {{"x", to_json(gp.x)},
          {"xstar", to_json(gp.xstar)},
          {"active_theta", labels(inst, gp.active.i1)},
          {"active_c", labels(inst, gp.active.i2)},
          {"support", labels(inst, gp.support)},
          {"multipliers", mult},
          {"independent_generators", gp.independent}};
}

json piece_json(const ProductPiece& p) {
  return {{"x_part", cone_json(p.x_part)}, {"v_part", cone_json(p.v_part)}};
}

json piece_union_json(const PieceUnion& pu) {
  const ProblemInstance& inst = pu.point.instance();
  json pieces = json::array();
  for (const auto& p : pu.pieces) {
    json j = piece_json(p);
    j["Q"] = labels(inst, p.label.q);
    j["P"] = labels(inst, p.label.p);
    pieces.push_back(std::move(j));
  }
  return {{"pieces", pieces}, {"piece_count", pu.pieces.size()}};
}

json frechet_json(const FrechetNormalCone& f) {
  return {{"x_part", cone_json(f.piece.x_part)},
          {"v_part", cone_json(f.piece.v_part)},
          {"forms_agree", true}};
}

json coderivative_json(const ProblemInstance& inst, const CoderivativeValue& v) {
  json pieces = json::array();
  for (const auto& p : v.pieces) {
    json j = {{"cone", cone_json(p.cone)}};
    if (p.label) {
      j["Q"] = labels(inst, p.label->q);
      j["P"] = labels(inst, p.label->p);
    }
    if (p.t) j["T"] = labels(inst, *p.t);
    pieces.push_back(std::move(j));
  }
  return {{"u", to_json(v.query)},
          {"exactness", v.exactness == Exactness::Exact ? "exact" : "superset"},
          {"in_domain", v.in_domain},
          {"empty", v.pieces.empty()},
          {"pieces", pieces},
          {"warnings", v.warnings}};
}

json domain_json(const ProblemInstance& inst, const DomainCone& d) {
  return {{"eq_rows", labels(inst, d.eq_rows)},
          {"ge_rows", labels(inst, d.ge_rows)},
          {"cone", cone_json(d.cone)}};
}

json certificate_json(const GraphPoint& gp, const FailureCertificate& c) {
  const ProblemInstance& inst = gp.instance();
  const CertificateCheck chk = verify_certificate(gp, c);
  json j = {{"form", c.form == CertificateForm::Piece ? "piece" : "condition_set"},
            {"T", labels(inst, c.t)},
            {"witness", to_json(c.witness)},
            {"lambda", coefficients(inst, c.lambda)},
            {"beta", coefficients(inst, c.beta)},
            {"verified", chk.ok}};
  if (c.form == CertificateForm::Piece) {
    j["Q"] = labels(inst, c.label.q);
    j["P"] = labels(inst, c.label.p);
  }
  if (!chk.ok) j["reason"] = chk.reason;
  return j;
}

namespace {

const char* method_name(AubinMethod m) {
  switch (m) {
    case AubinMethod::ExactEnumeration: return "exact_enumeration";
    case AubinMethod::SufficientCondition: return "sufficient_condition";
    case AubinMethod::LIExact: return "independent_generators_exact";
  }
  return "?";
}

}  // namespace

json verdict_json(const GraphPoint& gp, const AubinVerdict& v) {
  const ProblemInstance& inst = gp.instance();
  json trivial = json::array();
  for (const auto& t : v.trivial) {
    json r = json::object();
    if (t.label) {
      r["Q"] = labels(inst, t.label->q);
      r["P"] = labels(inst, t.label->p);
    }
    if (t.t) r["T"] = labels(inst, *t.t);
    trivial.push_back(std::move(r));
  }
  json fam = json::array();
  for (const auto& t : i2_family(inst, gp.active, zeros(inst.dim()))) fam.push_back(labels(inst, t));
  json j = {{"verdict", v.verdict == Verdict::Holds ? "Holds" : "Fails"},
            {"method", method_name(v.method)},
            {"trivial_pieces", trivial},
            {"i2_family", fam},
            {"notes", v.notes}};
  if (v.failure) j["certificate"] = certificate_json(gp, *v.failure);
  if (v.inconclusive) j["inconclusive_element"] = certificate_json(gp, *v.inconclusive);
  return j;
}

namespace {

json vpoly_json(const VPolyhedron& p) {
  return {{"points", to_json(p.points)}, {"rays", to_json(p.rays)}, {"lines", to_json(p.lines)}};
}

}  // namespace

json optimality_json(const BilevelProblem& bp, const GraphPoint& gp, const OptimalityReport& r) {
  const ProblemInstance& inst = gp.instance();
  json q1 = {{"passed", r.q1.passed}};
  if (r.q1.t) q1["T"] = labels(inst, *r.q1.t);
  if (r.q1.witness) q1["witness"] = to_json(*r.q1.witness);

  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back({{"T", labels(inst, p.t)}, {"cone", cone_json(p.cone)}, {"assembled", vpoly_json(p.assembled)}});

  json gate = {{"kind", r.gate.kind == GateResult::Kind::RobustSolution ? "robust_solution" : "local_solution_grid"},
               {"passed", r.gate.passed}};
  json ev = json::array();
  for (const auto& e : r.gate.evidence) {
    json x = {{"delta", to_json(e.delta)}, {"points_checked", e.points_checked}, {"passed", e.passed}};
    if (e.failing_point) x["failing_point"] = to_json(*e.failing_point);
    ev.push_back(std::move(x));
  }
  gate["evidence"] = ev;

  json j = {{"q1", q1},
            {"lipschitz_wrt_C", r.lipschitz ? "Yes" : "No"},
            {"condition_pieces", pieces},
            {"holds", r.holds},
            {"gate", gate},
            {"q2_asserted", bp.q2_asserted},
            {"subdifferential_provenance",
             bp.subdiff.provenance == Provenance::UserSupplied ? "user_supplied" : "affine_max_derived"},
            {"caveats", r.caveats}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"T", labels(inst, w.t)},
                    {"g", to_json(w.g)},
                    {"s", to_json(w.s)},
                    {"lambda", coefficients(inst, w.lambda)},
                    {"beta", coefficients(inst, w.beta)},
                    {"verified", verify_witness(bp, gp, w)}};
  }
  return j;
}

namespace {

void render(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
        out << pad << k << ":\n";
        render(v, indent + 1, out);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render(v, indent + 1, out);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace polycone::cli
