#pragma once

// Verification pipeline for dimension <= 4: for each candidate pole of the
// topological zeta function, either certify the matching monodromy eigenvalue
// (at the origin, or after a chain of coordinate projections) or explain the
// cancellation of a fake candidate through the facet classification.

#include "nz/exact.hpp"
#include "nz/facets.hpp"
#include "nz/monozeta.hpp"
#include "nz/newton.hpp"
#include "nz/zetatop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nz {

enum class PoleStatus {
  FakeB1,                     // cancelled; contributed only by B1-pyramids
  FakeB2,                     // cancelled; contributed by a single B2-facet
  EigenvalueAtOrigin,         // root or pole of the origin monodromy zeta
  EigenvalueAfterProjection,  // witnessed on a projected polyhedron
  NotAPole,                   // cancelled without a covering fake criterion
  Inconclusive,
};

std::string to_string(PoleStatus s);

struct EigenCertificate {
  RootOfUnity lambda;
  FactoredCyclo zeta;               // factored product with multiplicity != 0
  Integer multiplicity;
  std::vector<int> projection_chain;  // axes dropped, in order (0-based)
  std::string description;

  bool verify() const { return zeta.multiplicity(lambda) == multiplicity && multiplicity != 0; }
};

struct PoleVerdict {
  Rational pole;
  bool actual = false;
  int order = 0;
  PoleStatus status = PoleStatus::Inconclusive;
  std::vector<int> contributing_facets;
  std::optional<EigenCertificate> certificate;
  std::vector<std::string> evidence;
  std::string reason;  // set when inconclusive
};

struct HypothesisFlags {
  bool nondegeneracy_assumed = true;
  bool zero_convenient = false;
  bool good = false;
  bool b_wall_condition = false;
  std::vector<std::string> failures;

  bool all_pass() const { return zero_convenient && good && b_wall_condition; }
};

HypothesisFlags check_hypotheses(const NewtonPolyhedron& p);

struct DescentWitness {
  std::vector<int> projection_chain;  // 0-based axes, applied left to right
  FactoredCyclo zeta;                 // origin zeta of the final projection
  Integer multiplicity;               // != 0 at lambda
  int v_face_id = -1;                 // the stratum face that triggered descent
};

// Search the given stratum (2 or 1) for a V-face whose local factor has the
// eigenvalue as root, then project along the unbounded directions of the
// facets of that essential dimension and test the projected zeta data.
std::optional<DescentWitness> descend(const NewtonPolyhedron& p, const RootOfUnity& lambda,
                                      int stratum_index);

struct CheckOptions {
  bool assume_nondegenerate = true;
  int max_projection_depth = 4;
  int parallel = 1;
};

struct Report {
  SupportSet input;
  HypothesisFlags flags;
  ZTop ztop;
  std::vector<CandidatePole> candidates;
  FactoredCyclo varchenko;
  std::vector<PoleVerdict> verdicts;

  bool inconclusive_present() const;
};

Report check_conjecture(const NewtonPolyhedron& p, const CheckOptions& options = {});

}  // namespace nz
