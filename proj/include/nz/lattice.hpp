#pragma once

// Small dense exact linear algebra over the integers: ranks and determinants
// (fraction-free), Smith normal form data, integer kernels, lattice distances
// of affine spans, and the double description method for pointed cones.
// Everything here is desk-scale (dimension <= 7, a few dozen rows).

#include "nz/exact.hpp"

#include <optional>
#include <vector>

namespace nz {

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;  // row-major

Integer dot(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
// v / gcd(entries); zero vector unchanged.
IVec primitive(IVec v);
bool is_zero_vec(const IVec& v);

int rank(IMat m);                    // fraction-free Gaussian elimination
Integer det_bareiss(IMat m);         // square input

// Nonzero elementary divisors d1 | d2 | ... of m (Smith normal form
// diagonal), with pivots chosen by minimal absolute value to limit growth.
std::vector<Integer> elementary_divisors(IMat m);

// Unimodular U with U*A in column echelon shape: the first r = rank rows of
// U*v give coordinates of v in a basis of the saturation of the column span.
// Returns {U, rank}.
std::pair<IMat, int> row_smith_transform(const IMat& columns_as_rows, int ambient_dim);

// Primitive integer kernel vector of a rank-(m-1) system rows*x = 0 in Z^m.
// Throws if the kernel is not 1-dimensional.
IVec kernel_functional(const IMat& rows, int m);

// Lattice distance from the origin of the affine span of `points` inside the
// linear span of the points: the positive generator of the value set of the
// primitive integral functional on span(points) cap Z^n that is constant on
// the points. Throws std::domain_error if the origin lies in the affine span.
Integer lattice_distance(const std::vector<IVec>& points);

// Normalized volume of the lattice simplex with the given vertices, with
// respect to the affine lattice of its span; a single vertex gives 1.
Integer simplex_normalized_volume(const std::vector<IVec>& vertices);

// Primitive conormal of an (m-1)-dimensional simplex in Z^m whose affine
// span misses the origin, oriented so that <a, vertex> > 0.
IVec simplex_conormal(const std::vector<IVec>& vertices);

// Extreme rays (primitive, lex-sorted) of the pointed cone
// {x in R^m : <c, x> >= 0 for all c in constraints}.
// Throws std::invalid_argument if the constraints do not define a pointed
// cone (rank < m would leave a lineality space).
std::vector<IVec> dd_extreme_rays(const IMat& constraints, int m);

// Indices of points that are vertices of the convex hull of `points`.
std::vector<int> extreme_point_indices(const std::vector<IVec>& points);

// Membership test: is x in conv(points)?
bool in_convex_hull(const IVec& x, const std::vector<IVec>& points);

}  // namespace nz
