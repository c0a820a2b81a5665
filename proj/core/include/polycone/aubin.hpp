#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycone/cone_formulas.hpp"

namespace polycone {

enum class Verdict { Holds, Fails };
enum class AubinMethod { ExactEnumeration, SufficientCondition, LIExact };

// Piece: v lies in A_{Q,P} n T_{Q|I2} for an admissible (Q,P); t = Q|I2.
// ConditionSet: v lies in (cone{a_i : I2(x)} + span{a_j : I1(x)}) n T_t with
// t in the relaxed I2-family at u = 0.
enum class CertificateForm { Piece, ConditionSet };

using Coefficients = std::vector<std::pair<std::size_t, Rat>>;  // row index -> value

struct FailureCertificate {
  CertificateForm form = CertificateForm::Piece;
  SubsetPair label;  // Piece form only
  IndexSet t;
  RatVec witness;
  Coefficients lambda;  // cone coefficients, >= 0
  Coefficients beta;    // span coefficients, free
};

struct TrivialityRecord {
  std::optional<SubsetPair> label;
  std::optional<IndexSet> t;
};

struct AubinVerdict {
  Verdict verdict = Verdict::Holds;
  AubinMethod method = AubinMethod::ExactEnumeration;
  std::vector<TrivialityRecord> trivial;      // Holds: every checked piece
  std::optional<FailureCertificate> failure;  // Fails
  // Nonzero element of the sufficient-condition set that did not settle the
  // question on its own.
  std::optional<FailureCertificate> inconclusive;
  std::vector<std::string> notes;
};

AubinVerdict aubin_exact(const GraphPoint& gp);
AubinVerdict aubin_exact(const PieceUnion& pu);
AubinVerdict aubin_sufficient(const GraphPoint& gp);
// Delegates to aubin_exact at (xbar, shift); throws InvalidGraphPoint when
// 0 is not in G(xbar).
AubinVerdict aubin_G(std::shared_ptr<const ProblemInstance> inst, const RatVec& xbar,
                     const RatVec& shift);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

// Re-derives everything from the stored coefficients and labels.
CertificateCheck verify_certificate(const GraphPoint& gp, const FailureCertificate& c);

RatVec reconstruct(const ProblemInstance& inst, const FailureCertificate& c);

}  // namespace polycone
