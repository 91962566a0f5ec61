#include "nz/monozeta.hpp"

#include "nz/lattice.hpp"

#include <stdexcept>

namespace nz {

FactoredCyclo zeta_face(const NewtonPolyhedron& p, int face_id) {
  const Face& f = p.face(face_id);
  if (!f.is_v_face) throw std::invalid_argument("zeta_face requires a V-face");
  // For a V-face the linear span of the vertices is the minimal coordinate
  // subspace, so the generic affine-span distance is the subspace-relative one.
  return FactoredCyclo::single(p.lattice_dist(face_id), p.normalized_volume(face_id));
}

FactoredCyclo varchenko_zeta(const NewtonPolyhedron& p) {
  FactoredCyclo z;
  for (int id : p.v_faces()) {
    const Face& f = p.face(id);
    const Integer vol = p.normalized_volume(id);
    z.multiply_factor(p.lattice_dist(id), (f.dim % 2 == 0) ? vol : -vol);
  }
  return z;
}

RootOfUnity facet_eigenvalue(const FacetData& f) {
  if (f.dist <= 0) throw std::domain_error("facet eigenvalue needs N > 0");
  return RootOfUnity::from_ratio(f.conormal_sum, f.dist);
}

std::array<Stratum, 4> strata(const NewtonPolyhedron& p) {
  std::array<Stratum, 4> out;
  for (int i = 0; i < 4; ++i) out[i].index = i;
  for (int id : p.v_faces()) {
    int level = -1;
    for (size_t k = 0; k < p.facets().size(); ++k) {
      const FacetData& fd = p.facets()[k];
      if (!std::includes(fd.vertex_ids.begin(), fd.vertex_ids.end(),
                         p.face(id).vertex_ids.begin(), p.face(id).vertex_ids.end()))
        continue;
      if (fd.compact) {
        level = 3;
        break;
      }
      level = std::max(level, std::min(p.ess_dim(static_cast<int>(k)), 2));
    }
    if (level < 0) throw std::logic_error("V-face not contained in any facet");
    Stratum& st = out[level];
    st.v_face_ids.push_back(id);
    const int dim = p.face(id).dim;
    const Integer vol = p.normalized_volume(id);
    st.factor.multiply_factor(p.lattice_dist(id),
                              ((level - dim) % 2 == 0) ? vol : -vol);
  }
  return out;
}

}  // namespace nz
