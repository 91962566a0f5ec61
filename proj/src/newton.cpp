#include "nz/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nz {

void SupportSet::validate() const {
  if (n < 1 || n > 6) throw std::invalid_argument("dimension must be between 1 and 6");
  if (points.empty()) throw std::invalid_argument("empty support");
  std::set<IVec> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("support point of wrong dimension");
    for (const auto& x : p)
      if (x < 0) throw std::invalid_argument("negative exponent in support");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate support point");
  }
}

NewtonPolyhedron NewtonPolyhedron::build(SupportSet support) {
  support.validate();
  NewtonPolyhedron p;
  p.n_ = support.n;
  const int n = p.n_;
  std::sort(support.points.begin(), support.points.end());
  p.support_ = support;

  // Facet inequalities of conv(points) + R_+^n from the homogenized cone:
  // a ray (a, c) of the dual means <a, x> >= -c on the polyhedron.
  IMat constraints;
  for (int j = 0; j < n; ++j) {
    IVec e(n + 1, 0);
    e[j] = 1;
    constraints.push_back(std::move(e));
  }
  for (const auto& v : support.points) {
    IVec c = v;
    c.push_back(1);
    constraints.push_back(std::move(c));
  }
  const std::vector<IVec> dual_rays = dd_extreme_rays(constraints, n + 1);

  struct RawFacet {
    IVec conormal;
    Integer dist;
  };
  std::vector<RawFacet> raw;
  for (const auto& r : dual_rays) {
    IVec a(r.begin(), r.end() - 1);
    if (is_zero_vec(a)) continue;  // the trivial inequality 1 >= 0
    raw.push_back({std::move(a), -r.back()});
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawFacet& x, const RawFacet& y) { return x.conormal < y.conormal; });

  // Vertices: support points whose active facet normals span R^n.
  for (const auto& v : support.points) {
    IMat active;
    for (const auto& f : raw)
      if (dot(f.conormal, v) == f.dist) active.push_back(f.conormal);
    if (rank(active) == n) p.vertices_.push_back(v);
  }

  for (const auto& f : raw) {
    FacetData fd;
    fd.conormal = f.conormal;
    fd.dist = f.dist;
    fd.conormal_sum = 0;
    for (const auto& x : f.conormal) fd.conormal_sum += x;
    fd.compact = true;
    for (int j = 0; j < n; ++j) {
      if (f.conormal[j] == 0) {
        fd.compact = false;
        fd.unbounded_dirs.push_back(j);
      }
    }
    fd.in_coordinate_hyperplane = (fd.dist == 0);
    for (size_t i = 0; i < p.vertices_.size(); ++i)
      if (dot(f.conormal, p.vertices_[i]) == f.dist)
        fd.vertex_ids.push_back(static_cast<int>(i));
    p.facets_.push_back(std::move(fd));
  }

  // Face lattice: close the facet faces under pairwise intersection.
  // A face is determined by (vertex set, unbounded direction set).
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::set<Key> keys;
  std::vector<Key> work;
  for (const auto& f : p.facets_) {
    Key k{f.vertex_ids, f.unbounded_dirs};
    if (keys.insert(k).second) work.push_back(k);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> vs, us;
      std::set_intersection(work[i].first.begin(), work[i].first.end(),
                            work[j].first.begin(), work[j].first.end(),
                            std::back_inserter(vs));
      std::set_intersection(work[i].second.begin(), work[i].second.end(),
                            work[j].second.begin(), work[j].second.end(),
                            std::back_inserter(us));
      if (vs.empty()) continue;
      Key k{std::move(vs), std::move(us)};
      if (keys.insert(k).second) work.push_back(std::move(k));
    }
  }
  {
    std::vector<int> all_v(p.vertices_.size());
    for (size_t i = 0; i < p.vertices_.size(); ++i) all_v[i] = static_cast<int>(i);
    std::vector<int> all_d(n);
    for (int j = 0; j < n; ++j) all_d[j] = j;
    keys.insert({all_v, all_d});  // the whole polyhedron
  }

  std::vector<Face> faces;
  for (const auto& [vs, us] : keys) {
    Face f;
    f.vertex_ids = vs;
    f.unbounded_dirs = us;
    IMat dirs;
    for (size_t i = 1; i < vs.size(); ++i)
      dirs.push_back(sub(p.vertices_[vs[i]], p.vertices_[vs[0]]));
    for (int j : us) {
      IVec e(n, 0);
      e[j] = 1;
      dirs.push_back(std::move(e));
    }
    f.dim = rank(dirs);
    f.compact = us.empty();
    if (f.compact) {
      std::set<int> s;
      for (int vi : vs)
        for (int j = 0; j < n; ++j)
          if (p.vertices_[vi][j] != 0) s.insert(j);
      f.subspace.assign(s.begin(), s.end());
      f.is_v_face = (f.dim == static_cast<int>(f.subspace.size()) - 1);
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertex_ids, a.unbounded_dirs) <
           std::tie(b.dim, b.vertex_ids, b.unbounded_dirs);
  });
  for (size_t i = 0; i < faces.size(); ++i) {
    faces[i].id = static_cast<int>(i);
    for (size_t k = 0; k < p.facets_.size(); ++k) {
      const auto& fk = p.facets_[k];
      if (std::includes(fk.vertex_ids.begin(), fk.vertex_ids.end(),
                        faces[i].vertex_ids.begin(), faces[i].vertex_ids.end()) &&
          std::includes(fk.unbounded_dirs.begin(), fk.unbounded_dirs.end(),
                        faces[i].unbounded_dirs.begin(), faces[i].unbounded_dirs.end()))
        faces[i].facet_ids.push_back(static_cast<int>(k));
    }
    if (faces[i].dim == n) p.whole_face_id_ = static_cast<int>(i);
  }
  p.faces_ = std::move(faces);
  for (auto& fd : p.facets_)
    fd.face_id = p.face_id_of(fd.vertex_ids, fd.unbounded_dirs);
  return p;
}

bool NewtonPolyhedron::is_convenient() const {
  for (int axis = 0; axis < n_; ++axis) {
    bool hit = false;
    for (const auto& v : vertices_) {
      bool on_axis = true;
      for (int j = 0; j < n_; ++j)
        if (j != axis && v[j] != 0) on_axis = false;
      if (on_axis) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

NewtonPolyhedron::Supporting NewtonPolyhedron::supporting_data(
    const std::vector<Rational>& a) const {
  Rational weight = 0;
  for (const auto& x : a) {
    if (x < 0) throw std::invalid_argument("direction outside the nonnegative orthant");
    weight += x;
  }
  Rational best = 0;
  bool first = true;
  std::vector<Rational> vals(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    Rational s = 0;
    for (int j = 0; j < n_; ++j) s += a[j] * Rational(vertices_[i][j]);
    vals[i] = s;
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  std::vector<int> vs;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vals[i] == best) vs.push_back(static_cast<int>(i));
  std::vector<int> us;
  for (int j = 0; j < n_; ++j)
    if (a[j] == 0) us.push_back(j);
  return {best, weight, face_id_of(vs, us)};
}

std::pair<Integer, Integer> NewtonPolyhedron::ray_data(const IVec& a) const {
  Integer weight = 0;
  for (const auto& x : a) {
    if (x < 0) throw std::invalid_argument("direction outside the nonnegative orthant");
    weight += x;
  }
  Integer best = dot(a, vertices_[0]);
  for (size_t i = 1; i < vertices_.size(); ++i) best = std::min(best, dot(a, vertices_[i]));
  return {best, weight};
}

std::vector<IVec> NewtonPolyhedron::dual_cone(int face_id) const {
  std::vector<IVec> rays;
  for (int k : face(face_id).facet_ids) rays.push_back(facets_[k].conormal);
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<IVec> NewtonPolyhedron::face_vertices(int face_id) const {
  std::vector<IVec> out;
  for (int vi : face(face_id).vertex_ids) out.push_back(vertices_[vi]);
  return out;
}

Integer NewtonPolyhedron::normalized_volume(int face_id) const {
  const Face& f = face(face_id);
  if (!f.compact) throw std::invalid_argument("normalized volume of a non-compact face");
  if (f.dim == 0) return 1;
  Integer total = 0;
  for (const auto& simplex : split_face(face_id)) {
    std::vector<IVec> vs;
    for (int vi : simplex) vs.push_back(vertices_[vi]);
    total += simplex_normalized_volume(vs);
  }
  return total;
}

Integer NewtonPolyhedron::lattice_dist(int face_id) const {
  const Face& f = face(face_id);
  if (!f.compact) throw std::invalid_argument("lattice distance of a non-compact face");
  return lattice_distance(face_vertices(face_id));
}

std::vector<int> NewtonPolyhedron::v_faces() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.is_v_face) out.push_back(f.id);
  return out;
}

NewtonPolyhedron NewtonPolyhedron::project(int axis) const {
  if (n_ < 2) throw std::invalid_argument("cannot project a 1-dimensional polyhedron");
  // The projected support may contain the origin: that is the polyhedron of
  // a translated polynomial with nonzero constant term, and gives the whole
  // orthant with trivial zeta data.
  SupportSet s;
  s.n = n_ - 1;
  std::set<IVec> pts;
  for (const auto& v : vertices_) {
    IVec q;
    for (int j = 0; j < n_; ++j)
      if (j != axis) q.push_back(v[j]);
    pts.insert(std::move(q));
  }
  s.points.assign(pts.begin(), pts.end());
  return build(std::move(s));
}

int NewtonPolyhedron::ess_dim(int facet_index) const {
  const FacetData& fd = facets_.at(facet_index);
  int best = 0;
  for (const auto& f : faces_) {
    if (!f.compact || f.dim <= best) continue;
    if (std::includes(fd.vertex_ids.begin(), fd.vertex_ids.end(), f.vertex_ids.begin(),
                      f.vertex_ids.end()))
      best = f.dim;
  }
  return best;
}

std::vector<std::vector<int>> NewtonPolyhedron::split_face(int face_id) const {
  const Face& f = face(face_id);
  if (!f.compact) throw std::invalid_argument("can only split compact faces");
  if (static_cast<int>(f.vertex_ids.size()) == f.dim + 1) return {f.vertex_ids};
  const int pull = f.vertex_ids.front();  // vertices are stored in lex order
  std::vector<std::vector<int>> out;
  for (const auto& g : faces_) {
    if (g.dim != f.dim - 1 || !g.compact) continue;
    if (!std::includes(f.vertex_ids.begin(), f.vertex_ids.end(), g.vertex_ids.begin(),
                       g.vertex_ids.end()))
      continue;
    if (std::binary_search(g.vertex_ids.begin(), g.vertex_ids.end(), pull)) continue;
    for (auto simplex : split_face(g.id)) {
      simplex.insert(std::lower_bound(simplex.begin(), simplex.end(), pull), pull);
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool NewtonPolyhedron::face_contains(int outer_id, int inner_id) const {
  const Face& a = face(outer_id);
  const Face& b = face(inner_id);
  return std::includes(a.vertex_ids.begin(), a.vertex_ids.end(), b.vertex_ids.begin(),
                       b.vertex_ids.end()) &&
         std::includes(a.unbounded_dirs.begin(), a.unbounded_dirs.end(),
                       b.unbounded_dirs.begin(), b.unbounded_dirs.end());
}

int NewtonPolyhedron::face_id_of(const std::vector<int>& vertex_ids,
                                 const std::vector<int>& unbounded) const {
  for (const auto& f : faces_)
    if (f.vertex_ids == vertex_ids && f.unbounded_dirs == unbounded) return f.id;
  throw std::logic_error("face not found in lattice");
}

// --------------------------------------------------------------------------
// Placing triangulation of pointed cones.

std::vector<std::vector<int>> placing_triangulation(const std::vector<IVec>& rays,
                                                    const std::vector<int>& order) {
  if (rays.empty()) return {};
  const int ambient = static_cast<int>(rays[0].size());

  // Work in an independent coordinate subset of the linear span, so all
  // orientation tests are determinants of square integer matrices.
  IMat all(rays.begin(), rays.end());
  const int l = rank(all);
  std::vector<int> cols;
  IMat picked(rays.size());
  for (int j = 0; j < ambient && static_cast<int>(cols.size()) < l; ++j) {
    for (size_t i = 0; i < rays.size(); ++i) picked[i].push_back(rays[i][j]);
    if (rank(picked) == static_cast<int>(cols.size()) + 1)
      cols.push_back(j);
    else
      for (auto& row : picked) row.pop_back();
  }
  auto proj = [&](int idx) {
    IVec v(l);
    for (int j = 0; j < l; ++j) v[j] = rays[idx][cols[j]];
    return v;
  };

  // First cell: the earliest independent subset in insertion order.
  std::vector<int> cell0;
  IMat cell_rows;
  std::vector<int> pending;
  size_t pos = 0;
  for (; pos < order.size() && static_cast<int>(cell0.size()) < l; ++pos) {
    cell_rows.push_back(proj(order[pos]));
    if (rank(cell_rows) == static_cast<int>(cell0.size()) + 1) {
      cell0.push_back(order[pos]);
    } else {
      cell_rows.pop_back();
      pending.push_back(order[pos]);
    }
  }
  if (static_cast<int>(cell0.size()) < l)
    throw std::invalid_argument("rays do not span the expected dimension");
  std::sort(cell0.begin(), cell0.end());
  std::vector<std::vector<int>> cells{cell0};
  for (; pos < order.size(); ++pos) pending.push_back(order[pos]);

  for (int ri : pending) {
    const IVec r = proj(ri);
    // Boundary facets of the current union: simplex facets used exactly once.
    std::map<std::vector<int>, std::pair<int, int>> facet_use;  // facet -> (count, cell)
    for (size_t c = 0; c < cells.size(); ++c) {
      for (size_t drop = 0; drop < cells[c].size(); ++drop) {
        std::vector<int> fct = cells[c];
        fct.erase(fct.begin() + drop);
        auto [it, fresh] = facet_use.emplace(std::move(fct),
                                             std::make_pair(0, static_cast<int>(c)));
        it->second.first++;
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [fct, use] : facet_use) {
      if (use.first != 1) continue;
      IMat frows;
      for (int i : fct) frows.push_back(proj(i));
      IVec normal = kernel_functional(frows, l);
      // Orient inward with the cell vertex opposite to this facet.
      int opposite = -1;
      for (int i : cells[use.second])
        if (!std::binary_search(fct.begin(), fct.end(), i)) opposite = i;
      const Integer so = dot(normal, proj(opposite));
      if (so == 0) throw std::logic_error("degenerate cell in placing triangulation");
      if (so < 0)
        for (auto& x : normal) x = -x;
      if (dot(normal, r) < 0) {  // strictly visible: attach
        std::vector<int> cell = fct;
        cell.insert(std::lower_bound(cell.begin(), cell.end(), ri), ri);
        added.push_back(std::move(cell));
      }
    }
    cells.insert(cells.end(), added.begin(), added.end());
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<SimplicialCone> triangulate_cone(std::vector<IVec> rays, RayOrder order) {
  for (auto& r : rays) {
    if (is_zero_vec(r)) throw std::invalid_argument("zero ray");
    for (const auto& x : r)
      if (x < 0)
        throw std::invalid_argument("triangulate_cone assumes rays in the nonnegative orthant");
    r = primitive(std::move(r));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.empty()) return {};

  std::vector<int> idx(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) idx[i] = static_cast<int>(i);
  if (order == RayOrder::RevLex) std::reverse(idx.begin(), idx.end());

  std::vector<SimplicialCone> out;
  for (const auto& cell : placing_triangulation(rays, idx)) {
    SimplicialCone sc;
    for (int i : cell) sc.rays.push_back(rays[i]);
    sc.index = snf_index(sc.rays);
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace nz
