#include "nz/facets.hpp"

#include "nz/monozeta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nz {

namespace {

// Compact-type pyramid test on a vertex list: for which axes is there exactly
// one vertex off the coordinate hyperplane, at height 1? The base (the other
// vertices) must be nonempty.
std::vector<int> compact_pyramid_variables(const std::vector<IVec>& verts,
                                           std::vector<int>* apex_out = nullptr) {
  std::vector<int> vars;
  if (verts.size() < 2) return vars;
  const int m = static_cast<int>(verts[0].size());
  for (int i = 0; i < m; ++i) {
    int off = -1;
    int count = 0;
    for (size_t v = 0; v < verts.size(); ++v) {
      if (verts[v][i] != 0) {
        ++count;
        off = static_cast<int>(v);
      }
    }
    if (count == 1 && verts[off][i] == 1) {
      vars.push_back(i);
      if (apex_out && apex_out->empty()) apex_out->push_back(off);
    }
  }
  return vars;
}

}  // namespace

bool is_b1_simplex(const std::vector<IVec>& vertices, std::vector<int>* variables) {
  const std::vector<int> vars = compact_pyramid_variables(vertices);
  if (variables) *variables = vars;
  return !vars.empty();
}

B1Classification classify_b1(const NewtonPolyhedron& p, int facet_index) {
  const FacetData& fd = p.facets().at(facet_index);
  B1Classification c;
  std::vector<IVec> verts;
  for (int vi : fd.vertex_ids) verts.push_back(p.vertex_coords()[vi]);

  if (fd.compact) {
    std::vector<int> apex;
    c.variables = compact_pyramid_variables(verts, &apex);
    if (!c.variables.empty()) {
      c.kind = B1Classification::Kind::Compact;
      c.apex_vertex = fd.vertex_ids[apex.front()];
    }
    return c;
  }

  // Non-compact type: the only subset S with tau + R_+^S inside tau that can
  // make the projection compact is the full unbounded direction set.
  const std::vector<int>& zset = fd.unbounded_dirs;
  std::vector<int> keep;
  for (int j = 0; j < p.dim(); ++j)
    if (!std::binary_search(zset.begin(), zset.end(), j)) keep.push_back(j);
  if (keep.empty()) return c;
  std::vector<IVec> shadow;
  for (const auto& v : verts) {
    IVec q;
    for (int j : keep) q.push_back(v[j]);
    shadow.push_back(std::move(q));
  }
  std::set<IVec> hull_pts;
  for (int i : extreme_point_indices(shadow)) hull_pts.insert(shadow[i]);
  const std::vector<IVec> hull(hull_pts.begin(), hull_pts.end());
  for (int local : compact_pyramid_variables(hull)) c.variables.push_back(keep[local]);
  if (!c.variables.empty()) {
    c.kind = B1Classification::Kind::NonCompact;
    c.unbounded_set = zset;
  }
  return c;
}

bool is_b2_facet(const NewtonPolyhedron& p, int facet_index) {
  if (p.dim() != 4) throw std::invalid_argument("B2-facets are defined for n = 4");
  const FacetData& fd = p.facets().at(facet_index);
  if (!fd.compact) return false;
  const size_t nv = fd.vertex_ids.size();
  if (nv < 3 || nv > 6) return false;
  std::vector<IVec> verts;
  for (int vi : fd.vertex_ids) verts.push_back(p.vertex_coords()[vi]);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      int c10 = 0, c01 = 0, c00 = 0;
      bool ok = true;
      for (const auto& v : verts) {
        if (v[i] == 1 && v[j] == 0) ++c10;
        else if (v[i] == 0 && v[j] == 1) ++c01;
        else if (v[i] == 0 && v[j] == 0) ++c00;
        else { ok = false; break; }
      }
      if (ok && c10 >= 1 && c10 <= 2 && c01 >= 1 && c01 <= 2 && c00 >= 1 && c00 <= 2)
        return true;
    }
  }
  return false;
}

bool is_b_wall(const std::vector<IVec>& triangle) {
  if (triangle.size() != 3 || triangle[0].size() != 4) return false;
  IMat diffs{sub(triangle[1], triangle[0]), sub(triangle[2], triangle[0])};
  if (rank(diffs) != 2) return false;  // not a triangle
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      // permutation of the three points into the classes (0,0), (1,0), (0,1)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (a == b) continue;
          const int c = 3 - a - b;
          if (triangle[a][i] == 0 && triangle[a][j] == 0 && triangle[b][i] == 1 &&
              triangle[b][j] == 0 && triangle[c][i] == 0 && triangle[c][j] == 1)
            return true;
        }
    }
  }
  return false;
}

std::optional<CornerData> corner_of(const std::vector<IVec>& simplex) {
  const int n = static_cast<int>(simplex[0].size());
  if (static_cast<int>(simplex.size()) != n)
    throw std::invalid_argument("expected an (n-1)-dimensional simplex with n vertices");
  IMat diffs;
  for (size_t i = 1; i < simplex.size(); ++i) diffs.push_back(sub(simplex[i], simplex[0]));
  if (rank(diffs) != n - 1) throw std::invalid_argument("degenerate simplex");
  CornerData cd;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& v : simplex)
      if (v[i] != 0) ++count;
    if (count == 1) cd.axes.push_back(i);
  }
  if (cd.axes.empty()) return std::nullopt;
  for (const auto& v : simplex) {
    bool in_all = true;
    for (int i : cd.axes)
      if (v[i] != 0) in_all = false;
    if (in_all) cd.corner_vertices.push_back(v);
  }
  if (cd.corner_vertices.empty()) return std::nullopt;
  return cd;
}

FactoredCyclo f_tau(const std::vector<IVec>& simplex) {
  const auto cd = corner_of(simplex);
  if (!cd) throw std::invalid_argument("simplex has no corner");
  const int r = static_cast<int>(cd->axes.size());
  FactoredCyclo f;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<IVec> face;
    for (const auto& v : simplex) {
      bool keep = true;
      for (int b = 0; b < r; ++b)
        if ((mask >> b) & 1u)
          if (v[cd->axes[b]] != 0) keep = false;
      if (keep) face.push_back(v);
    }
    const Integer vol = simplex_normalized_volume(face);
    f.multiply_factor(lattice_distance(face),
                      (__builtin_popcount(mask) % 2 == 0) ? vol : -vol);
  }
  return f;
}

FactoredCyclo f_tau_axes(const std::vector<IVec>& simplex) {
  const int n = static_cast<int>(simplex[0].size());
  if (static_cast<int>(simplex.size()) != n)
    throw std::invalid_argument("expected one vertex per coordinate axis");
  std::vector<bool> seen(n, false);
  for (const auto& v : simplex) {
    int axis = -1;
    for (int j = 0; j < n; ++j) {
      if (v[j] != 0) {
        if (axis >= 0) throw std::invalid_argument("vertex off the coordinate axes");
        axis = j;
      }
    }
    if (axis < 0 || seen[axis]) throw std::invalid_argument("vertex off the coordinate axes");
    seen[axis] = true;
  }
  FactoredCyclo f;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<IVec> face;
    for (int b = 0; b < n; ++b)
      if ((mask >> b) & 1u) face.push_back(simplex[b]);
    const Integer vol = simplex_normalized_volume(face);
    const int codim = n - __builtin_popcount(mask);  // n-1 - dim(face)
    f.multiply_factor(lattice_distance(face), (codim % 2 == 0) ? vol : -vol);
  }
  f.multiply_factor(1, (n % 2 == 0) ? 1 : -1);
  return f;
}

SimplexPoleData simplex_pole_data(const std::vector<IVec>& simplex) {
  const IVec a = simplex_conormal(simplex);
  SimplexPoleData d;
  d.dist = dot(a, simplex[0]);
  d.conormal_sum = 0;
  for (const auto& x : a) d.conormal_sum += x;
  d.eigenvalue = RootOfUnity::from_ratio(d.conormal_sum, d.dist);
  return d;
}

std::vector<TaggedSimplex> alex_split(const NewtonPolyhedron& p, int facet_index) {
  if (p.dim() != 4) throw std::invalid_argument("alex_split is defined for n = 4");
  const FacetData& fd = p.facets().at(facet_index);
  if (!fd.compact) throw std::invalid_argument("alex_split needs a compact facet");
  if (classify_b1(p, facet_index))
    throw std::invalid_argument("facet is a B1-pyramid");
  if (is_b2_facet(p, facet_index)) throw std::invalid_argument("facet is a B2-facet");

  auto tag = [&](const std::vector<std::vector<int>>& simplices) {
    std::vector<TaggedSimplex> out;
    for (const auto& s : simplices) {
      std::vector<IVec> vs;
      for (int vi : s) vs.push_back(p.vertex_coords()[vi]);
      out.push_back({s, is_b1_simplex(vs)});
    }
    return out;
  };

  std::vector<TaggedSimplex> pulled = tag(p.split_face(fd.face_id));
  if (std::any_of(pulled.begin(), pulled.end(), [](const TaggedSimplex& t) { return !t.b1; }))
    return pulled;

  // The pulling split came out all-B1: seed a placing triangulation with the
  // lex-first non-B1 vertex 4-subset, which exists for non-B1/non-B2 facets.
  const std::vector<int>& vids = fd.vertex_ids;
  const int nv = static_cast<int>(vids.size());
  std::vector<int> seed;
  for (int a = 0; a < nv && seed.empty(); ++a)
    for (int b = a + 1; b < nv && seed.empty(); ++b)
      for (int c = b + 1; c < nv && seed.empty(); ++c)
        for (int d = c + 1; d < nv && seed.empty(); ++d) {
          const std::vector<IVec> vs{p.vertex_coords()[vids[a]], p.vertex_coords()[vids[b]],
                                     p.vertex_coords()[vids[c]], p.vertex_coords()[vids[d]]};
          IMat diffs{sub(vs[1], vs[0]), sub(vs[2], vs[0]), sub(vs[3], vs[0])};
          if (rank(diffs) == 3 && !is_b1_simplex(vs)) seed = {a, b, c, d};
        }
  if (seed.empty())
    throw std::logic_error("no non-B1 simplex inside a non-B1/non-B2 facet");

  std::vector<IVec> lifted;
  for (int vi : vids) {
    IVec q = p.vertex_coords()[vi];
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  std::vector<int> order = seed;
  for (int i = 0; i < nv; ++i)
    if (std::find(seed.begin(), seed.end(), i) == seed.end()) order.push_back(i);
  std::vector<std::vector<int>> cells;
  for (const auto& cell : placing_triangulation(lifted, order)) {
    std::vector<int> s;
    for (int i : cell) s.push_back(vids[i]);
    std::sort(s.begin(), s.end());
    cells.push_back(std::move(s));
  }
  std::sort(cells.begin(), cells.end());
  return tag(cells);
}

bool contributes(const NewtonPolyhedron& p, int v_face_id, const std::vector<IVec>& simplex) {
  const SimplexPoleData d = simplex_pole_data(simplex);
  return zeta_face(p, v_face_id).multiplicity(d.eigenvalue) > 0;
}

bool is_zero_convenient(const NewtonPolyhedron& p) {
  for (int id : p.v_faces()) {
    const Face& f = p.face(id);
    if (f.dim != 0) continue;
    for (int k : f.facet_ids) {
      const FacetData& fd = p.facets()[k];
      if (!fd.in_coordinate_hyperplane && !fd.compact) return false;
    }
  }
  return true;
}

bool is_good(const NewtonPolyhedron& p) {
  if (!is_zero_convenient(p)) return false;
  struct B1Facet {
    int index;
    Rational pole;
    std::vector<int> variables;
  };
  std::vector<B1Facet> b1s;
  for (size_t k = 0; k < p.facets().size(); ++k) {
    const FacetData& fd = p.facets()[k];
    if (fd.in_coordinate_hyperplane) continue;
    const B1Classification c = classify_b1(p, static_cast<int>(k));
    if (c) b1s.push_back({static_cast<int>(k), Rational(-fd.conormal_sum, fd.dist), c.variables});
  }
  for (size_t a = 0; a < b1s.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      if (b1s[a].pole != b1s[b].pole) continue;
      std::vector<int> common_vars;
      std::set_intersection(b1s[a].variables.begin(), b1s[a].variables.end(),
                            b1s[b].variables.begin(), b1s[b].variables.end(),
                            std::back_inserter(common_vars));
      if (!common_vars.empty()) continue;  // pyramids for a shared variable are exempt
      const FacetData& fa = p.facets()[b1s[a].index];
      const FacetData& fb = p.facets()[b1s[b].index];
      for (int rho : p.v_faces()) {
        const Face& rf = p.face(rho);
        if (rf.dim != 1) continue;
        if (!std::includes(fa.vertex_ids.begin(), fa.vertex_ids.end(), rf.vertex_ids.begin(),
                           rf.vertex_ids.end()) ||
            !std::includes(fb.vertex_ids.begin(), fb.vertex_ids.end(), rf.vertex_ids.begin(),
                           rf.vertex_ids.end()))
          continue;
        for (int v0 : p.v_faces()) {
          const Face& vf = p.face(v0);
          if (vf.dim == 0 && std::includes(rf.vertex_ids.begin(), rf.vertex_ids.end(),
                                           vf.vertex_ids.begin(), vf.vertex_ids.end()))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace nz
