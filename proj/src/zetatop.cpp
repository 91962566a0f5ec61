#include "nz/zetatop.hpp"

#include <algorithm>
#include <map>

namespace nz {

RationalFunction j_delta(const NewtonPolyhedron& p, const SimplicialCone& cone) {
  UniPoly den{Rational(1)};
  for (const auto& ray : cone.rays) {
    const auto [dist, weight] = p.ray_data(ray);
    den = den * UniPoly::linear(Rational(dist), Rational(weight));
  }
  return RationalFunction(UniPoly(Rational(cone.index)), std::move(den));
}

RationalFunction j_tau(const NewtonPolyhedron& p, int face_id, RayOrder order) {
  const std::vector<IVec> rays = p.dual_cone(face_id);
  if (rays.empty()) return RationalFunction(Rational(1));  // the whole polyhedron
  RationalFunction sum;
  for (const auto& cone : triangulate_cone(rays, order)) sum = sum + j_delta(p, cone);
  return sum;
}

ZTop z_top(const NewtonPolyhedron& p) {
  ZTop z;
  const RationalFunction s_over_s1(UniPoly::variable(), UniPoly::linear(1, 1));
  for (const auto& f : p.faces()) {
    if (f.dim == 0) {
      for (const auto& cone : triangulate_cone(p.dual_cone(f.id))) {
        ZTopTerm term{f.id, cone, j_delta(p, cone), true};
        z.value = z.value + term.value;
        z.ledger.push_back(std::move(term));
      }
    } else if (f.compact && f.dim >= 1) {
      const Integer vol = p.normalized_volume(f.id);
      const Rational signed_vol = (f.dim % 2 == 0) ? Rational(vol) : Rational(-vol);
      const RationalFunction prefactor = s_over_s1 * RationalFunction(signed_vol);
      for (const auto& cone : triangulate_cone(p.dual_cone(f.id))) {
        ZTopTerm term{f.id, cone, prefactor * j_delta(p, cone), false};
        z.value = z.value + term.value;
        z.ledger.push_back(std::move(term));
      }
    }
  }
  return z;
}

std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& p) {
  std::map<Rational, std::vector<int>> by_value;
  for (size_t k = 0; k < p.facets().size(); ++k) {
    const FacetData& f = p.facets()[k];
    if (f.in_coordinate_hyperplane) continue;
    if (f.dist <= 0) throw std::logic_error("facet off the coordinate hyperplanes with N <= 0");
    by_value[Rational(-f.conormal_sum, f.dist)].push_back(static_cast<int>(k));
  }
  by_value.try_emplace(Rational(-1));
  std::vector<CandidatePole> out;
  for (auto& [value, facets] : by_value) out.push_back({value, std::move(facets)});
  return out;
}

std::pair<bool, int> is_actual_pole(const ZTop& z, const Rational& s0) {
  const int order = z.value.pole_order(s0);
  return {order > 0, order};
}

LoeserData loeser_quantities(const NewtonPolyhedron& p, int facet_a, int facet_b) {
  const FacetData& fa = p.facets().at(facet_a);
  const FacetData& fb = p.facets().at(facet_b);
  if (facet_a == facet_b) throw std::invalid_argument("facets must be distinct");
  if (fa.dist == 0) throw std::invalid_argument("first facet must have positive distance");
  LoeserData d;
  d.beta = 0;
  const int n = p.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d.beta = gcd(d.beta, fa.conormal[i] * fb.conormal[j] - fa.conormal[j] * fb.conormal[i]);
  if (d.beta == 0) throw std::invalid_argument("parallel conormals");
  d.lambda = Rational(fb.conormal_sum) -
             Rational(fa.conormal_sum, fa.dist) * Rational(fb.dist);
  d.mu = d.lambda / Rational(d.beta);
  return d;
}

}  // namespace nz
