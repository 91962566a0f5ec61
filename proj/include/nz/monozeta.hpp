#pragma once

// Varchenko's monodromy zeta function at the origin as a factored product
// over V-faces, facet eigenvalues, and the four-level decomposition of the
// V-faces by the essential dimension of the facets containing them.

#include "nz/exact.hpp"
#include "nz/newton.hpp"

#include <array>
#include <vector>

namespace nz {

// Single factor {N ↦ Vol} of a V-face, with the lattice distance measured
// inside the minimal coordinate subspace containing the face.
FactoredCyclo zeta_face(const NewtonPolyhedron& p, int face_id);

// prod over V-faces of zeta_face^((-1)^dim).
FactoredCyclo varchenko_zeta(const NewtonPolyhedron& p);

// exp(-2 pi i nu(tau)/N(tau)) for a facet with N > 0.
RootOfUnity facet_eigenvalue(const FacetData& f);

struct Stratum {
  int index = 0;
  std::vector<int> v_face_ids;
  FactoredCyclo factor;  // prod zeta_face^((-1)^(index - dim))
};

// V-faces split by containment: level 3 when inside a compact facet, else by
// the largest essential dimension among the facets containing the face
// (capped at 2). The signed product of the four factors recovers the inverse
// of varchenko_zeta exactly.
std::array<Stratum, 4> strata(const NewtonPolyhedron& p);

}  // namespace nz
