#pragma once

// The Newton polyhedron Gamma_+ of a support set: V- and H-representations
// via the double description method, the full face lattice, facet data
// (conormal, lattice distance, conormal sum), dual cones, lattice volumes,
// V-faces, coordinate projections, and deterministic triangulations.

#include "nz/exact.hpp"
#include "nz/lattice.hpp"

#include <string>
#include <vector>

namespace nz {

struct SupportSet {
  int n = 0;
  std::vector<IVec> points;
  void validate() const;  // nonempty, distinct, nonnegative, nonzero, 1 <= n <= 6
};

struct FacetData {
  int face_id = -1;           // index into NewtonPolyhedron::faces()
  IVec conormal;              // primitive, componentwise >= 0
  Integer dist;               // N: min of <conormal, .> over the polyhedron
  Integer conormal_sum;       // nu: sum of the conormal entries
  bool compact = false;       // all conormal entries positive
  bool in_coordinate_hyperplane = false;  // dist == 0
  std::vector<int> vertex_ids;
  std::vector<int> unbounded_dirs;  // 0-based axes j with conormal[j] == 0
};

struct Face {
  int id = -1;
  int dim = 0;
  std::vector<int> vertex_ids;      // sorted; nonempty
  std::vector<int> unbounded_dirs;  // sorted; empty iff compact
  std::vector<int> facet_ids;       // facets containing this face
  bool compact = false;
  bool is_v_face = false;           // compact and dim == |subspace| - 1
  std::vector<int> subspace;        // minimal coordinate subspace (compact faces)
};

struct SimplicialCone {
  std::vector<IVec> rays;  // primitive generators
  Integer index;           // lattice index of the ray lattice in its saturation
};

enum class RayOrder { Lex, RevLex };

class NewtonPolyhedron {
 public:
  static NewtonPolyhedron build(SupportSet support);

  int dim() const { return n_; }
  const SupportSet& support() const { return support_; }
  const std::vector<IVec>& vertex_coords() const { return vertices_; }
  const std::vector<FacetData>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  int whole_face_id() const { return whole_face_id_; }

  bool is_convenient() const;

  struct Supporting {
    Rational dist;    // N(a)
    Rational weight;  // nu(a) = |a|
    int face_id;
  };
  Supporting supporting_data(const std::vector<Rational>& a) const;
  // N(a), nu(a) for a primitive integer direction.
  std::pair<Integer, Integer> ray_data(const IVec& a) const;

  // Extreme rays of the dual cone of a face: the primitive conormals of the
  // facets containing it, in lexicographic order. Empty for the whole face.
  std::vector<IVec> dual_cone(int face_id) const;

  Integer normalized_volume(int face_id) const;  // compact faces only
  Integer lattice_dist(int face_id) const;       // compact faces only

  std::vector<int> v_faces() const;

  NewtonPolyhedron project(int axis) const;  // drop the 0-based axis

  int ess_dim(int facet_index) const;

  // Pulling triangulation of a compact face at its lex-least vertex;
  // simplices are sorted vertex-id lists.
  std::vector<std::vector<int>> split_face(int face_id) const;

  std::vector<IVec> face_vertices(int face_id) const;
  bool face_contains(int outer_id, int inner_id) const;
  int face_id_of(const std::vector<int>& vertex_ids,
                 const std::vector<int>& unbounded) const;

 private:
  int n_ = 0;
  SupportSet support_;
  std::vector<IVec> vertices_;
  std::vector<FacetData> facets_;
  std::vector<Face> faces_;
  int whole_face_id_ = -1;
};

// Decompose a pointed cone spanned by the given rays (all in the nonnegative
// orthant) into simplicial cones using only input rays: the placing
// triangulation with rays inserted in the chosen order.
std::vector<SimplicialCone> triangulate_cone(std::vector<IVec> rays,
                                             RayOrder order = RayOrder::Lex);

// Incremental placing triangulation of cone(rays) in insertion order; rays
// must span a pointed cone. Returns cells as sorted index lists.
std::vector<std::vector<int>> placing_triangulation(const std::vector<IVec>& rays,
                                                    const std::vector<int>& order);

}  // namespace nz
