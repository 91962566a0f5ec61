#include "nz/supermod.hpp"

#include <algorithm>
#include <set>

namespace nz {

namespace {
constexpr long kInfValuation = 1L << 40;  // valuation of 0 in the local data

long val_or_inf(const Integer& x, const Integer& p) {
  return x == 0 ? kInfValuation : valuation(x, p);
}
}  // namespace

SetFunction antiderivative(const SetFunction& phi) {
  SetFunction out = phi;
  for (int b = 0; b < phi.ground; ++b)
    for (unsigned mask = 0; mask < out.values.size(); ++mask)
      if ((mask >> b) & 1u) out.values[mask] += out.values[mask ^ (1u << b)];
  return out;
}

SetFunction derivative(const SetFunction& phi) {
  SetFunction out = phi;
  for (int b = 0; b < phi.ground; ++b)
    for (unsigned mask = 0; mask < out.values.size(); ++mask)
      if ((mask >> b) & 1u) out.values[mask] -= out.values[mask ^ (1u << b)];
  return out;
}

bool is_fully_supermodular(const SetFunction& phi) {
  for (const auto& v : derivative(phi).values)
    if (v < 0) return false;
  return true;
}

bool is_strictly_fully_supermodular(const SetFunction& phi) {
  const SetFunction d = derivative(phi);
  for (const auto& v : d.values)
    if (v < 0) return false;
  return d.values.back() > 0;
}

Integer product_derivative(const SetFunction& phi, const SetFunction& psi, unsigned mask_r) {
  const SetFunction du = derivative(phi), dv = derivative(psi);
  Integer total = 0;
  // I runs over subsets of R; J must cover the rest: R \ I  subset J subset R.
  for (unsigned i = mask_r;; i = (i - 1) & mask_r) {
    const unsigned rest = mask_r & ~i;
    for (unsigned extra = i;; extra = (extra - 1) & i) {
      total += du.values[i] * dv.values[rest | extra];
      if (extra == 0) break;
    }
    if (i == 0) break;
  }
  return total;
}

SetFunction pointwise_product(const SetFunction& phi, const SetFunction& psi) {
  if (phi.ground != psi.ground) throw std::invalid_argument("ground sets differ");
  SetFunction out(phi.ground);
  for (unsigned mask = 0; mask < out.values.size(); ++mask)
    out.values[mask] = phi.values[mask] * psi.values[mask];
  return out;
}

// --------------------------------------------------------------------------

std::vector<IVec> CornerSimplexData::vertices() const {
  std::vector<IVec> out;
  IVec q(n, 0);
  q[n - 1] = apex;
  out.push_back(q);
  for (int i = 0; i < n - 1; ++i) {
    IVec a = q;
    a[i] = edges[i].first;
    a[n - 1] = apex + edges[i].second;
    out.push_back(std::move(a));
  }
  return out;
}

RootOfUnity CornerSimplexData::eigenvalue() const {
  return RootOfUnity::from_ratio(facet_weight, facet_dist);
}

bool CornerSimplexData::b1() const {
  for (const auto& [a, b] : edges)
    if (a == 1) return true;
  return false;
}

CornerSimplexData corner_data(int n, Integer apex,
                              std::vector<std::pair<Integer, Integer>> edges) {
  if (n < 2 || static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("need n-1 edges");
  if (apex < 1) throw std::invalid_argument("apex coordinate must be positive");
  CornerSimplexData d;
  d.n = n;
  d.apex = apex;
  d.edges = std::move(edges);
  d.d_prod = 1;
  for (const auto& [a, b] : d.edges) {
    if (a < 1) throw std::invalid_argument("edge steps must be positive");
    if (apex + b < 0) throw std::invalid_argument("vertex leaves the nonnegative orthant");
    d.d_prod *= a;
  }
  d.k_total = 0;
  for (const auto& [a, b] : d.edges) {
    d.k_parts.push_back(b * d.d_prod / a);
    d.k_total += d.k_parts.back();
  }
  const unsigned full = 1u << (n - 1);
  d.gcd_table.resize(full);
  d.vol_table.resize(full);
  d.dist_table.resize(full);
  for (unsigned mask = 0; mask < full; ++mask) {
    Integer g = d.d_prod;
    Integer d_i = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((mask >> i) & 1u) {
        g = gcd(g, d.k_parts[i]);
        d_i *= d.edges[i].first;
      }
    }
    d.gcd_table[mask] = g;
    d.vol_table[mask] = g * d_i / d.d_prod;
    d.dist_table[mask] = (d.d_prod / g) * apex;
  }
  const Integer gcd_s = d.gcd_table[full - 1];
  d.facet_dist = d.d_prod * apex / gcd_s;
  if ((d.d_prod - d.k_total) % gcd_s != 0)
    throw std::logic_error("conormal is not integral");
  d.facet_weight = (d.d_prod - d.k_total) / gcd_s;
  if (d.facet_weight <= 0) throw std::invalid_argument("not a valid facet orientation");
  return d;
}

bool lambda_root(const CornerSimplexData& d, unsigned mask) {
  return d.k_total % d.gcd_table[mask] == 0;
}

bool lambda_root_m(const CornerSimplexData& d, unsigned mask, const Integer& m) {
  return (m * d.gcd_table.back()) % d.gcd_table[mask] == 0;
}

Integer g_sum(const CornerSimplexData& d) {
  Integer g = 0;
  const int s = d.n - 1;
  for (unsigned mask = 0; mask < d.gcd_table.size(); ++mask) {
    if (!lambda_root(d, mask)) continue;
    const int sign = (s - __builtin_popcount(mask)) % 2 == 0 ? 1 : -1;
    g += sign * d.vol_table[mask];
  }
  return g;
}

Integer g_m_sum(const CornerSimplexData& d, const Integer& m) {
  Integer g = 0;
  const int s = d.n - 1;
  for (unsigned mask = 0; mask < d.gcd_table.size(); ++mask) {
    if (!lambda_root_m(d, mask, m)) continue;
    const int sign = (s - __builtin_popcount(mask)) % 2 == 0 ? 1 : -1;
    g += sign * d.vol_table[mask];
  }
  return g;
}

namespace {

// Shared shape of phi_p and psi_p: value p^(min_{i in I}{beta_i - alpha_i, 0}
// + sum_{i in I} alpha_i) when the min does not exceed the cutoff, else 0.
SetFunction local_set_function(const CornerSimplexData& d, const Integer& p, long cutoff) {
  const int s = d.n - 1;
  std::vector<long> alpha(s), beta(s);
  for (int i = 0; i < s; ++i) {
    alpha[i] = valuation(d.edges[i].first, p);
    beta[i] = val_or_inf(d.edges[i].second, p);
  }
  SetFunction f(s);
  for (unsigned mask = 0; mask < f.values.size(); ++mask) {
    long min_term = 0;
    long alpha_sum = 0;
    for (int i = 0; i < s; ++i) {
      if ((mask >> i) & 1u) {
        min_term = std::min(min_term, beta[i] - alpha[i]);
        alpha_sum += alpha[i];
      }
    }
    if (min_term <= cutoff) {
      Integer v = 1;
      for (long e = 0; e < min_term + alpha_sum; ++e) v *= p;
      f.values[mask] = v;
    }
  }
  return f;
}

}  // namespace

SetFunction phi_p(const CornerSimplexData& d, const Integer& p, const Integer& m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const int s = d.n - 1;
  long min_all = 0;
  for (int i = 0; i < s; ++i)
    min_all = std::min(min_all, val_or_inf(d.edges[i].second, p) - valuation(d.edges[i].first, p));
  const long delta = val_or_inf(m, p);
  const long gamma = (delta >= kInfValuation) ? kInfValuation : delta + min_all;
  return local_set_function(d, p, gamma);
}

SetFunction psi_p(const CornerSimplexData& d, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const int s = d.n - 1;
  long alpha_total = 0;
  for (int i = 0; i < s; ++i) alpha_total += valuation(d.edges[i].first, p);
  const long kappa = val_or_inf(d.k_total, p);
  const long mu = (kappa >= kInfValuation) ? kInfValuation : kappa - alpha_total;
  return local_set_function(d, p, mu);
}

std::vector<Integer> relevant_primes(const CornerSimplexData& d, const Integer& m) {
  std::set<Integer> out;
  auto add = [&](const Integer& x) {
    for (const auto& p : prime_factors(x)) out.insert(p);
  };
  for (const auto& [a, b] : d.edges) {
    add(a);
    add(b);
  }
  add(d.k_total);
  add(m);
  return {out.begin(), out.end()};
}

FactoredCyclo corner_cyclo(const CornerSimplexData& d) {
  FactoredCyclo f;
  const int s = d.n - 1;
  for (unsigned mask = 0; mask < d.gcd_table.size(); ++mask) {
    const int sign = (s - __builtin_popcount(mask)) % 2 == 0 ? 1 : -1;
    f.multiply_factor(d.dist_table[mask], sign * d.vol_table[mask]);
  }
  return f;
}

}  // namespace nz
