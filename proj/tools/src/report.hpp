#pragma once

#include <nlohmann/json.hpp>

#include "polycone/bilevel.hpp"
#include "polycone/coderivative.hpp"
#include "polycone/oracle.hpp"

namespace polycone::cli {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const RatVec& v);
json to_json(const RatMat& m);
// 1-based original labels.
json labels(const ProblemInstance& inst, const IndexSet& s);
json coefficients(const ProblemInstance& inst, const Coefficients& c);

// Canonical generator form (primitive sorted rays plus an rref line basis).
json cone_json(const VCone& v);
json cone_json(const HCone& h);

json instance_summary(const ProblemInstance& inst);
json graph_point_json(const GraphPoint& gp);
json piece_json(const ProductPiece& p);
json piece_union_json(const PieceUnion& pu);
json frechet_json(const FrechetNormalCone& f);
json coderivative_json(const ProblemInstance& inst, const CoderivativeValue& v);
json domain_json(const ProblemInstance& inst, const DomainCone& d);
json certificate_json(const GraphPoint& gp, const FailureCertificate& c);
json verdict_json(const GraphPoint& gp, const AubinVerdict& v);
json optimality_json(const BilevelProblem& bp, const GraphPoint& gp, const OptimalityReport& r);

// Indented "key: value" rendering of a report for terminals.
std::string render_text(const json& j);

}  // namespace polycone::cli
