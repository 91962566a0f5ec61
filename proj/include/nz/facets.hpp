#pragma once

// Facet and simplex classification: B1-pyramids (compact and non-compact
// type), the six-vertex B2 pattern and B-wall triangles in dimension four,
// corners of simplices and their signed cyclotomic products, the splitting of
// non-B1/non-B2 facets, contribution tests, 0-convenience and goodness.

#include "nz/exact.hpp"
#include "nz/lattice.hpp"
#include "nz/newton.hpp"

#include <optional>
#include <vector>

namespace nz {

struct B1Classification {
  enum class Kind { None, Compact, NonCompact };
  Kind kind = Kind::None;
  // All variables realizing the pyramid (0-based original axes), ascending.
  std::vector<int> variables;
  // Unbounded direction set S of the non-compact kind.
  std::vector<int> unbounded_set;
  // Apex vertex id for the compact kind (for the smallest variable).
  int apex_vertex = -1;

  explicit operator bool() const { return kind != Kind::None; }
};

B1Classification classify_b1(const NewtonPolyhedron& p, int facet_index);

// A lattice simplex is of type B1 iff for some axis exactly one vertex has a
// nonzero coordinate there and that coordinate is 1.
bool is_b1_simplex(const std::vector<IVec>& vertices,
                   std::vector<int>* variables = nullptr);

// n = 4 only: compact facet whose vertices split, for some pair of axes
// (i, j), into the classes (1,0,*,*), (0,1,*,*), (0,0,*,*) with one or two
// vertices each (the degenerate identifications of the six-vertex pattern).
bool is_b2_facet(const NewtonPolyhedron& p, int facet_index);

// Triangle in Z_+^4 matching (0,0,a,b), (1,0,c,d), (0,1,e,f) up to
// coordinate reordering.
bool is_b_wall(const std::vector<IVec>& triangle);

struct CornerData {
  std::vector<int> axes;            // 0-based, ascending; nonempty
  std::vector<IVec> corner_vertices;  // vertices on all the corner hyperplanes
};

// The corner of an (n-1)-dimensional lattice simplex: the set of axes whose
// coordinate hyperplane cuts out a facet of the simplex, when the joint
// intersection is nonempty.
std::optional<CornerData> corner_of(const std::vector<IVec>& simplex);

// Signed product over the subsets of the corner axes of the face factors
// {N ↦ ±Vol}; a polynomial, with the simplex eigenvalue as root when the
// simplex is not of type B1.
FactoredCyclo f_tau(const std::vector<IVec>& simplex);

// Variant for simplices with one vertex on each coordinate axis: the signed
// product over all nonempty faces times (1-t)^((-1)^n).
FactoredCyclo f_tau_axes(const std::vector<IVec>& simplex);

// Distance, conormal entry sum and eigenvalue of an (n-1)-simplex spanning a
// hyperplane off the origin, oriented so the distance is positive.
struct SimplexPoleData {
  Integer dist;
  Integer conormal_sum;
  RootOfUnity eigenvalue;
};
SimplexPoleData simplex_pole_data(const std::vector<IVec>& simplex);

struct TaggedSimplex {
  std::vector<int> vertex_ids;
  bool b1;
};

// Split a compact facet that is neither B1 nor B2 (n = 4) into lattice
// simplices, at least one of which is not of type B1.
std::vector<TaggedSimplex> alex_split(const NewtonPolyhedron& p, int facet_index);

// Does the V-face contribute with respect to the simplex: is the simplex
// eigenvalue a root of the face factor?
bool contributes(const NewtonPolyhedron& p, int v_face_id,
                 const std::vector<IVec>& simplex);

// Every facet through a 0-dimensional V-face that is not contained in a
// coordinate hyperplane must be compact.
bool is_zero_convenient(const NewtonPolyhedron& p);

// 0-convenient, and no two B1-pyramid facets for disjoint variable sets
// sharing a candidate pole have a common 1-dimensional V-face that contains
// a 0-dimensional one.
bool is_good(const NewtonPolyhedron& p);

}  // namespace nz
