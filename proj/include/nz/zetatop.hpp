#pragma once

// Local topological zeta function from the Newton polyhedron: per-cone terms
// J_Delta, per-face sums J_tau, the full vertex/compact-face formula, the
// candidate-pole set, actual-pole tests on the reduced denominator, and the
// Loeser pairwise quantities beta, lambda, mu.

#include "nz/exact.hpp"
#include "nz/newton.hpp"

#include <vector>

namespace nz {

struct CandidatePole {
  Rational value;
  std::vector<int> facet_indices;  // contributing facets (indices into facets())
};

struct ZTopTerm {
  int face_id;
  SimplicialCone cone;
  RationalFunction value;  // full contribution, prefactor included
  bool vertex_term;        // vertex sum vs compact-face sum
};

struct ZTop {
  RationalFunction value;
  std::vector<ZTopTerm> ledger;  // sums exactly to `value`
};

// mult(cone) / prod_i (N(a_i) s + nu(a_i)) with N, nu measured against p.
RationalFunction j_delta(const NewtonPolyhedron& p, const SimplicialCone& cone);

// Sum of j_delta over a triangulation of the dual cone of the face;
// independent of the insertion order by Denef-Loeser's Lemme 5.1.1.
RationalFunction j_tau(const NewtonPolyhedron& p, int face_id,
                       RayOrder order = RayOrder::Lex);

ZTop z_top(const NewtonPolyhedron& p);

// -nu/N over facets not lying in coordinate hyperplanes, with -1 always
// included (the s/(s+1) prefactor can contribute it).
std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& p);

// (is a pole, order of the pole) read off the reduced denominator.
std::pair<bool, int> is_actual_pole(const ZTop& z, const Rational& s0);

struct LoeserData {
  Integer beta;     // gcd of the 2x2 minors of (a(tau), a(tau'))
  Rational lambda;  // nu' - (nu/N) N'
  Rational mu;      // lambda / beta
};
LoeserData loeser_quantities(const NewtonPolyhedron& p, int facet_a, int facet_b);

}  // namespace nz
