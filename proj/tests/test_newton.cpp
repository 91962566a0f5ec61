#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nz/newton.hpp"

#include <random>
#include <set>

using namespace nz;

namespace {

NewtonPolyhedron make(int n, std::vector<IVec> pts) {
  SupportSet s;
  s.n = n;
  s.points = std::move(pts);
  return NewtonPolyhedron::build(std::move(s));
}

SupportSet random_support(std::mt19937_64& rng, int n, int max_coord, int count) {
  std::uniform_int_distribution<int> c(0, max_coord);
  std::set<IVec> pts;
  while (static_cast<int>(pts.size()) < count) {
    IVec p(n);
    for (auto& x : p) x = c(rng);
    if (!is_zero_vec(p)) pts.insert(std::move(p));
  }
  SupportSet s;
  s.n = n;
  s.points.assign(pts.begin(), pts.end());
  return s;
}

const FacetData* facet_with_conormal(const NewtonPolyhedron& p, const IVec& a) {
  for (const auto& f : p.facets())
    if (f.conormal == a) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("cusp polyhedron x^2 + y^3") {
  const auto p = make(2, {{2, 0}, {0, 3}});
  REQUIRE(p.facets().size() == 3);
  CHECK(facet_with_conormal(p, {0, 1}) != nullptr);
  CHECK(facet_with_conormal(p, {1, 0}) != nullptr);
  const FacetData* e = facet_with_conormal(p, {3, 2});
  REQUIRE(e != nullptr);
  CHECK(e->dist == 6);
  CHECK(e->conormal_sum == 5);
  CHECK(e->compact);
  CHECK(p.is_convenient());
}

TEST_CASE("single orthant translate {(1,1)}") {
  const auto p = make(2, {{1, 1}});
  REQUIRE(p.facets().size() == 2);
  CHECK(facet_with_conormal(p, {1, 0}) != nullptr);
  CHECK(facet_with_conormal(p, {0, 1}) != nullptr);
  for (const auto& f : p.facets()) {
    CHECK_FALSE(f.compact);
    CHECK(f.dist == 1);
    CHECK_FALSE(f.in_coordinate_hyperplane);
  }
  CHECK_FALSE(p.is_convenient());
  CHECK(p.v_faces().empty());
}

TEST_CASE("hull of two points plus orthant: x + y") {
  const auto p = make(2, {{1, 0}, {0, 1}});
  const FacetData* e = facet_with_conormal(p, {1, 1});
  REQUIRE(e != nullptr);
  CHECK(e->dist == 1);
  CHECK(e->conormal_sum == 2);
  CHECK(e->compact);
  CHECK(p.v_faces().size() == 3);
}

TEST_CASE("convenience needs every axis") {
  CHECK_FALSE(make(3, {{2, 0, 0}, {0, 3, 0}}).is_convenient());
  CHECK(make(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).is_convenient());
}

TEST_CASE("supporting data on the cusp") {
  const auto p = make(2, {{2, 0}, {0, 3}});
  const auto s = p.supporting_data({Rational(3), Rational(2)});
  CHECK(s.dist == 6);
  CHECK(s.weight == 5);
  CHECK(p.face(s.face_id).dim == 1);
  CHECK(p.face(s.face_id).compact);

  const auto t = p.supporting_data({Rational(0), Rational(1)});
  CHECK(t.dist == 0);
  CHECK(t.weight == 1);
  CHECK_FALSE(p.face(t.face_id).compact);
  CHECK(p.face(t.face_id).unbounded_dirs == std::vector<int>{0});

  const auto u = p.supporting_data({Rational(1), Rational(1)});
  CHECK(u.weight == 2);
}

TEST_CASE("dual cones on the cusp") {
  const auto p = make(2, {{2, 0}, {0, 3}});
  int vertex20 = -1, edge = -1;
  for (const auto& f : p.faces()) {
    if (f.dim == 0 && p.vertex_coords()[f.vertex_ids[0]] == IVec{2, 0}) vertex20 = f.id;
    if (f.dim == 1 && f.compact) edge = f.id;
  }
  REQUIRE(vertex20 >= 0);
  REQUIRE(edge >= 0);
  CHECK(p.dual_cone(vertex20) == std::vector<IVec>{{0, 1}, {3, 2}});
  CHECK(p.dual_cone(edge) == std::vector<IVec>{{3, 2}});
  CHECK(p.dual_cone(p.whole_face_id()).empty());
}

TEST_CASE("normalized volume and lattice distance of faces") {
  const auto p = make(2, {{2, 0}, {0, 3}});
  for (const auto& f : p.faces()) {
    if (f.dim == 1 && f.compact) {
      CHECK(p.normalized_volume(f.id) == 1);
      CHECK(p.lattice_dist(f.id) == 6);
    }
    if (f.dim == 0 && p.vertex_coords()[f.vertex_ids[0]] == IVec{2, 0}) {
      CHECK(p.normalized_volume(f.id) == 1);
      CHECK(p.lattice_dist(f.id) == 2);
    }
  }
  const auto q = make(2, {{2, 0}, {0, 4}});
  for (const auto& f : q.faces())
    if (f.dim == 1 && f.compact) CHECK(q.normalized_volume(f.id) == 2);
}

TEST_CASE("v-faces") {
  const auto cusp = make(2, {{2, 0}, {0, 3}});
  CHECK(cusp.v_faces().size() == 3);
  const auto smooth = make(2, {{1, 0}, {0, 1}});
  CHECK(smooth.v_faces().size() == 3);
  const auto xy = make(2, {{1, 1}});
  CHECK(xy.v_faces().empty());
}

TEST_CASE("projection drops an axis") {
  const auto cusp = make(2, {{2, 0}, {0, 3}});
  const auto p1 = cusp.project(1);  // drop the second axis
  CHECK(p1.dim() == 1);
  CHECK(p1.vertex_coords() == std::vector<IVec>{{0}});

  const auto q = make(3, {{2, 0, 1}, {0, 3, 1}});
  const auto pr = q.project(2);
  CHECK(pr.dim() == 2);
  const FacetData* e = facet_with_conormal(pr, {3, 2});
  REQUIRE(e != nullptr);
  CHECK(e->dist == 6);

  // (0,0,4) projects onto the origin, so this projection is the orthant.
  const auto w = make(3, {{2, 0, 1}, {0, 3, 1}, {0, 0, 4}});
  const auto pw = w.project(2);
  CHECK(pw.vertex_coords() == std::vector<IVec>{{0, 0}});
}

TEST_CASE("1-dimensional support keeps its vertex") {
  const auto p = make(1, {{2}});
  CHECK(p.vertex_coords() == std::vector<IVec>{{2}});
  REQUIRE(p.facets().size() == 1);
  CHECK(p.facets()[0].dist == 2);
  CHECK(p.v_faces().size() == 1);
}

TEST_CASE("projection of the cusp along the second axis hits the origin") {
  // pi_2 of {(2,0),(0,3)} = {(2),(0)}: the polyhedron is [0, infinity)
  const auto cusp = make(2, {{2, 0}, {0, 3}});
  const auto p = cusp.project(1);
  CHECK(p.vertex_coords() == std::vector<IVec>{{0}});
  CHECK(p.v_faces().empty());  // the vertex 0 spans no positive axis
}

TEST_CASE("essential dimension") {
  const auto cusp = make(2, {{2, 0}, {0, 3}});
  for (size_t k = 0; k < cusp.facets().size(); ++k) {
    const auto& f = cusp.facets()[k];
    if (f.compact) CHECK(cusp.ess_dim(static_cast<int>(k)) == 1);
    else CHECK(cusp.ess_dim(static_cast<int>(k)) == 0);
  }
  const auto xy = make(2, {{1, 1}});
  for (size_t k = 0; k < xy.facets().size(); ++k)
    CHECK(xy.ess_dim(static_cast<int>(k)) == 0);
}

TEST_CASE("split_face pulls from the lex-least vertex") {
  // Planar quadrilateral facet in 3d: vertices on the hyperplane x+y+z=3.
  const auto p = make(3, {{3, 0, 0}, {0, 3, 0}, {1, 0, 2}, {0, 1, 2}});
  int quad = -1;
  for (const auto& f : p.faces())
    if (f.dim == 2 && f.compact && f.vertex_ids.size() == 4) quad = f.id;
  REQUIRE(quad >= 0);
  const auto tri = p.split_face(quad);
  CHECK(tri.size() == 2);
  for (const auto& s : tri) CHECK(s.size() == 3);
  // Both simplices share the pulled vertex (lex-least of the face).
  const int pull = p.face(quad).vertex_ids.front();
  for (const auto& s : tri)
    CHECK(std::find(s.begin(), s.end(), pull) != s.end());
}

TEST_CASE("triangulate simplicial cones") {
  const auto one = triangulate_cone({{1, 0}, {0, 1}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].index == 1);

  const auto self = triangulate_cone({{2, 1, 0}, {0, 1, 3}, {1, 1, 1}});
  REQUIRE(self.size() == 1);
  CHECK(self[0].index == snf_index({{2, 1, 0}, {0, 1, 3}, {1, 1, 1}}));
}

TEST_CASE("triangulate the square cone") {
  const std::vector<IVec> rays{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const auto t = triangulate_cone(rays);
  REQUIRE(t.size() == 2);
  // The two pieces share a 2-dimensional face.
  std::set<IVec> shared;
  for (const auto& r : t[0].rays)
    if (std::find(t[1].rays.begin(), t[1].rays.end(), r) != t[1].rays.end())
      shared.insert(r);
  CHECK(shared.size() == 2);
  const auto t2 = triangulate_cone(rays, RayOrder::RevLex);
  CHECK(t2.size() == 2);
}

TEST_CASE("triangulation covers the cone and respects its rays") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(0, 4), dimd(2, 4), cnt(3, 7), w(1, 5);
  for (int it = 0; it < 50; ++it) {
    const int n = dimd(rng);
    std::set<IVec> rayset;
    for (int k = cnt(rng); k > 0; --k) {
      IVec r(n);
      for (auto& x : r) x = c(rng);
      if (!is_zero_vec(r)) rayset.insert(primitive(std::move(r)));
    }
    std::vector<IVec> rays(rayset.begin(), rayset.end());
    IMat m(rays.begin(), rays.end());
    const int l = rank(m);
    const auto tri = triangulate_cone(rays);
    // Cross-section volume with respect to the functional (1,...,1): the
    // weighted sum  sum |det(rays)| / prod <1, ray>  is a triangulation
    // invariant of the cone, unlike the raw sum of indices.
    auto section_volume = [&](const std::vector<SimplicialCone>& cones) {
      Rational vol = 0;
      for (const auto& sc : cones) {
        Integer weight = 1;
        for (const auto& r : sc.rays) {
          Integer s = 0;
          for (const auto& x : r) s += x;
          weight *= s;
        }
        vol += Rational(sc.index, weight);
      }
      return vol;
    };
    for (const auto& sc : tri) {
      CHECK(static_cast<int>(sc.rays.size()) == l);
      for (const auto& r : sc.rays)
        CHECK(rayset.count(r) == 1);
    }
    CHECK(section_volume(triangulate_cone(rays, RayOrder::RevLex)) == section_volume(tri));

    // Random nonnegative combinations of input rays lie in some cell.
    for (int probe = 0; probe < 10; ++probe) {
      IVec x(n, 0);
      for (const auto& r : rays) {
        const Integer wi = w(rng);
        for (int j = 0; j < n; ++j) x[j] += wi * r[j];
      }
      bool covered = false;
      for (const auto& sc : tri) {
        // x in cone(rays of sc): solve by rational elimination.
        IMat rows(sc.rays.begin(), sc.rays.end());
        rows.push_back(x);
        if (rank(rows) != l) continue;
        // Solve sum_i lambda_i ray_i = x with Cramer on an independent
        // coordinate subset.
        std::vector<int> cols;
        IMat sq;
        for (int j = 0; j < n && static_cast<int>(cols.size()) < l; ++j) {
          IMat test;
          for (const auto& r : sc.rays) {
            IVec row;
            for (int cc : cols) row.push_back(r[cc]);
            row.push_back(r[j]);
            test.push_back(std::move(row));
          }
          if (rank(test) == static_cast<int>(cols.size()) + 1) cols.push_back(j);
        }
        IMat a(l, IVec(l));
        IVec b(l);
        for (int i = 0; i < l; ++i) {
          for (int j = 0; j < l; ++j) a[j][i] = sc.rays[i][cols[j]];
          b[i] = x[cols[i]];
        }
        const Integer da = det_bareiss(a);
        bool inside = true;
        for (int i = 0; i < l; ++i) {
          IMat ai = a;
          for (int j = 0; j < l; ++j) ai[j][i] = b[j];
          const Integer di = det_bareiss(ai);
          if (di * da < 0) inside = false;
        }
        if (inside) covered = true;
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("face lattice is closed under intersection and supports incidence") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 40; ++it) {
    const int n = 2 + static_cast<int>(it % 3);
    const auto s = random_support(rng, n, 5, 4 + static_cast<int>(it % 4));
    const auto p = NewtonPolyhedron::build(s);

    // Supporting-hyperplane check for every facet.
    for (const auto& f : p.facets()) {
      for (size_t i = 0; i < p.vertex_coords().size(); ++i) {
        const Integer v = dot(f.conormal, p.vertex_coords()[i]);
        CHECK(v >= f.dist);
        const bool active =
            std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(), static_cast<int>(i));
        CHECK((v == f.dist) == active);
      }
    }

    // Lemma LLT on incident compact pairs.
    for (const auto& g : p.faces()) {
      if (!g.compact) continue;
      const Integer ng = p.lattice_dist(g.id);
      for (const auto& f : p.faces()) {
        if (!f.compact || f.id == g.id || !p.face_contains(f.id, g.id)) continue;
        const Integer nf = p.lattice_dist(f.id);
        CHECK(nf % ng == 0);
      }
    }

    // Pairwise intersections stay in the lattice.
    const auto& faces = p.faces();
    for (size_t i = 0; i < faces.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        std::vector<int> vs, us;
        std::set_intersection(faces[i].vertex_ids.begin(), faces[i].vertex_ids.end(),
                              faces[j].vertex_ids.begin(), faces[j].vertex_ids.end(),
                              std::back_inserter(vs));
        std::set_intersection(faces[i].unbounded_dirs.begin(), faces[i].unbounded_dirs.end(),
                              faces[j].unbounded_dirs.begin(), faces[j].unbounded_dirs.end(),
                              std::back_inserter(us));
        if (vs.empty()) continue;
        CHECK_NOTHROW(p.face_id_of(vs, us));
      }
  }
}

TEST_CASE("projection of a convenient polyhedron stays convenient") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 30; ++it) {
    const int n = 3;
    auto s = random_support(rng, n, 4, 4);
    // Force axis points so the input is convenient.
    for (int j = 0; j < n; ++j) {
      IVec axis(n, 0);
      axis[j] = 1 + static_cast<int>(it % 3);
      if (std::find(s.points.begin(), s.points.end(), axis) == s.points.end())
        s.points.push_back(axis);
    }
    const auto p = NewtonPolyhedron::build(s);
    REQUIRE(p.is_convenient());
    for (int axis = 0; axis < n; ++axis) CHECK(p.project(axis).is_convenient());
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(make(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(make(7, {{1, 0, 0, 0, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make(2, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("a support containing the origin spans the whole orthant") {
  const auto p = make(2, {{0, 0}, {2, 1}});
  CHECK(p.vertex_coords() == std::vector<IVec>{{0, 0}});
  REQUIRE(p.facets().size() == 2);
  for (const auto& f : p.facets()) {
    CHECK(f.dist == 0);
    CHECK(f.in_coordinate_hyperplane);
  }
  CHECK(p.v_faces().empty());
}
