#include "nz/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nz {

Integer dot(const IVec& a, const IVec& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_vec(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IVec primitive(IVec v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

int rank(IMat m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Integer g = gcd(m[row][col], m[i][col]);
      const Integer a = m[i][col] / g, b = m[row][col] / g;
      for (size_t j = col; j < cols; ++j) m[i][j] = b * m[i][j] - a * m[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

Integer det_bareiss(IMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Integer> elementary_divisors(IMat m) {
  std::vector<Integer> out;
  if (m.empty() || m[0].empty()) return out;
  size_t rows = m.size(), cols = m[0].size();
  size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot of minimal absolute value keeps the entries small.
    size_t pi = t, pj = t;
    Integer best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        const Integer a = abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Integer q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than the pivot: swap up
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Integer q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

std::pair<IMat, int> row_smith_transform(const IMat& columns_as_rows, int ambient_dim) {
  const size_t n = static_cast<size_t>(ambient_dim);
  // a: n x k with the input vectors as columns; u tracks the row operations.
  const size_t k = columns_as_rows.size();
  IMat a(n, IVec(k, 0));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) a[i][j] = columns_as_rows[j][i];
  IMat u(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  size_t row = 0;
  for (size_t col = 0; col < k && row < n; ++col) {
    // Euclidean reduction of column `col` below `row` by unimodular row ops.
    while (true) {
      size_t piv = n;
      Integer best = 0;
      for (size_t i = row; i < n; ++i) {
        if (a[i][col] == 0) continue;
        const Integer v = abs(a[i][col]);
        if (best == 0 || v < best) {
          best = v;
          piv = i;
        }
      }
      if (piv == n) break;  // column already zero below
      std::swap(a[row], a[piv]);
      std::swap(u[row], u[piv]);
      bool reduced = true;
      for (size_t i = row + 1; i < n; ++i) {
        if (a[i][col] == 0) continue;
        const Integer q = a[i][col] / a[row][col];
        for (size_t j = 0; j < k; ++j) a[i][j] -= q * a[row][j];
        for (size_t j = 0; j < n; ++j) u[i][j] -= q * u[row][j];
        if (a[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (a[row][col] != 0) ++row;
  }
  return {u, static_cast<int>(row)};
}

IVec kernel_functional(const IMat& rows, int m) {
  // Rational elimination; the kernel must be one-dimensional.
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) {
    std::vector<Rational> row(m);
    for (int j = 0; j < m; ++j) row[j] = Rational(r[j]);
    a.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < m && row < a.size(); ++col) {
    size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[row][col];
      for (int j = 0; j < m; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != m - 1)
    throw std::invalid_argument("kernel is not one-dimensional");
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(m, 0);
  x[free_col] = 1;
  for (size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = -a[i][free_col] / a[i][pivot_col[i]];
  Integer l = 1;
  for (const auto& q : x) l = lcm(l, den(q));
  IVec v(m);
  for (int j = 0; j < m; ++j) v[j] = num(x[j] * Rational(l));
  return primitive(std::move(v));
}

Integer lattice_distance(const std::vector<IVec>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const int n = static_cast<int>(points[0].size());
  auto [u, r] = row_smith_transform(points, n);
  if (r == 0) throw std::domain_error("origin in affine span");
  // Coordinates in a basis of span(points) cap Z^n.
  auto coords = [&](const IVec& p) {
    IVec x(r);
    for (int i = 0; i < r; ++i) x[i] = dot(u[i], p);
    return x;
  };
  const IVec x0 = coords(points[0]);
  IMat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    IVec d = sub(coords(points[i]), x0);
    if (!is_zero_vec(d)) diffs.push_back(std::move(d));
  }
  if (rank(diffs) != r - 1) throw std::domain_error("origin in affine span");
  const IVec c = kernel_functional(diffs, r);
  const Integer d0 = dot(c, x0);
  if (d0 == 0) throw std::domain_error("origin in affine span");
  return abs(d0);
}

Integer simplex_normalized_volume(const std::vector<IVec>& vertices) {
  if (vertices.size() <= 1) return 1;
  std::vector<IVec> edges;
  for (size_t i = 1; i < vertices.size(); ++i)
    edges.push_back(sub(vertices[i], vertices[0]));
  return snf_index(edges);
}

IVec simplex_conormal(const std::vector<IVec>& vertices) {
  const int m = static_cast<int>(vertices[0].size());
  if (static_cast<int>(vertices.size()) != m)
    throw std::invalid_argument("need m vertices in dimension m");
  IMat edges;
  for (size_t i = 1; i < vertices.size(); ++i)
    edges.push_back(sub(vertices[i], vertices[0]));
  IVec c = kernel_functional(edges, m);
  const Integer v0 = dot(c, vertices[0]);
  if (v0 == 0) throw std::domain_error("affine span through origin");
  if (v0 < 0)
    for (auto& x : c) x = -x;
  return c;
}

namespace {

// Zero set of a ray among the first `upto` constraints.
std::vector<int> zero_set(const IVec& ray, const IMat& constraints, int upto) {
  std::vector<int> z;
  for (int i = 0; i < upto; ++i)
    if (dot(constraints[i], ray) == 0) z.push_back(i);
  return z;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::vector<IVec> dd_extreme_rays(const IMat& constraints, int m) {
  // Greedy initial basis of m independent constraints, in input order.
  std::vector<int> basis;
  IMat basis_rows;
  for (size_t i = 0; i < constraints.size() && static_cast<int>(basis.size()) < m; ++i) {
    basis_rows.push_back(constraints[i]);
    if (rank(basis_rows) == static_cast<int>(basis.size()) + 1)
      basis.push_back(static_cast<int>(i));
    else
      basis_rows.pop_back();
  }
  if (static_cast<int>(basis.size()) < m)
    throw std::invalid_argument("cone not pointed");

  // Rays of the simplicial cone cut out by the basis: adjugate columns.
  IMat mt(m, IVec(m));
  for (int i = 0; i < m; ++i) mt[i] = constraints[basis[i]];
  const Integer d = det_bareiss(mt);
  std::vector<IVec> rays;
  for (int j = 0; j < m; ++j) {
    IVec col(m);
    for (int i = 0; i < m; ++i) {
      IMat minor;
      for (int r = 0; r < m; ++r) {
        if (r == j) continue;
        IVec row;
        for (int c = 0; c < m; ++c)
          if (c != i) row.push_back(mt[r][c]);
        minor.push_back(std::move(row));
      }
      Integer cof = det_bareiss(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      col[i] = cof;
    }
    if (d < 0)
      for (auto& x : col) x = -x;
    rays.push_back(primitive(std::move(col)));
  }

  // Reorder so the basis constraints come first; then run the incremental
  // double description step over the rest.
  IMat ordered;
  for (int b : basis) ordered.push_back(constraints[b]);
  for (size_t i = 0; i < constraints.size(); ++i)
    if (std::find(basis.begin(), basis.end(), static_cast<int>(i)) == basis.end())
      ordered.push_back(constraints[i]);

  for (size_t ci = static_cast<size_t>(m); ci < ordered.size(); ++ci) {
    const IVec& c = ordered[ci];
    std::vector<IVec> pos, zero, neg;
    for (auto& r : rays) {
      const Integer s = dot(c, r);
      (s > 0 ? pos : (s == 0 ? zero : neg)).push_back(r);
    }
    if (neg.empty()) continue;
    std::vector<std::vector<int>> zpos, zneg;
    for (auto& r : pos) zpos.push_back(zero_set(r, ordered, static_cast<int>(ci)));
    for (auto& r : neg) zneg.push_back(zero_set(r, ordered, static_cast<int>(ci)));
    std::vector<IVec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (size_t p = 0; p < pos.size(); ++p)
      for (size_t q = 0; q < neg.size(); ++q) {
        const std::vector<int> common = intersect_sorted(zpos[p], zneg[q]);
        bool adjacent = true;
        for (auto& w : rays) {
          if (w == pos[p] || w == neg[q]) continue;
          if (subset_of(common, zero_set(w, ordered, static_cast<int>(ci)))) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        const Integer sp = dot(c, pos[p]), sq = dot(c, neg[q]);
        IVec nr(m);
        for (int i = 0; i < m; ++i) nr[i] = sp * neg[q][i] - sq * pos[p][i];
        nr = primitive(std::move(nr));
        if (std::find(next.begin(), next.end(), nr) == next.end())
          next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

namespace {

// Is y in the cone generated by `gens`? Both live in Z^n.
bool cone_contains(const std::vector<IVec>& gens, const IVec& y) {
  const int n = static_cast<int>(y.size());
  IMat span = gens;
  const int r = rank(span);
  span.push_back(y);
  if (rank(span) != r) return false;  // y outside the linear span
  auto [u, rr] = row_smith_transform(gens, n);
  auto coords = [&](const IVec& p) {
    IVec x(rr);
    for (int i = 0; i < rr; ++i) x[i] = dot(u[i], p);
    return x;
  };
  IMat gen_coords;
  for (const auto& g : gens) gen_coords.push_back(coords(g));
  const IVec yc = coords(y);
  // Facet description of the cone in span coordinates.
  const std::vector<IVec> duals = dd_extreme_rays(gen_coords, rr);
  for (const auto& h : duals)
    if (dot(h, yc) < 0) return false;
  return true;
}

IVec lift(const IVec& p) {
  IVec q = p;
  q.push_back(1);
  return q;
}

}  // namespace

std::vector<int> extreme_point_indices(const std::vector<IVec>& points) {
  std::vector<int> out;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<IVec> others;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i && points[j] != points[i]) others.push_back(lift(points[j]));
    if (others.empty() || !cone_contains(others, lift(points[i])))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

bool in_convex_hull(const IVec& x, const std::vector<IVec>& points) {
  std::vector<IVec> lifted;
  for (const auto& p : points) lifted.push_back(lift(p));
  return cone_contains(lifted, lift(x));
}

}  // namespace nz
