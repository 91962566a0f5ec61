#pragma once

// Subset-lattice calculus: antiderivative/derivative transforms, (strictly)
// fully supermodular functions, and the reduced corner-simplex data with its
// gcd tables, alternating sums G and G_m, and the prime-local set functions
// whose derivatives reproduce them. Serves as an independent oracle for the
// geometric corner polynomials.

#include "nz/exact.hpp"
#include "nz/lattice.hpp"

#include <vector>

namespace nz {

struct SetFunction {
  int ground = 0;               // |S| <= 20
  std::vector<Integer> values;  // indexed by subset bitmask; size 2^ground

  SetFunction() = default;
  explicit SetFunction(int ground_size)
      : ground(ground_size), values(1u << ground_size, 0) {
    if (ground_size < 0 || ground_size > 20)
      throw std::invalid_argument("ground set size out of range");
  }
  Integer& operator[](unsigned mask) { return values[mask]; }
  const Integer& operator[](unsigned mask) const { return values[mask]; }
  bool operator==(const SetFunction& o) const {
    return ground == o.ground && values == o.values;
  }
};

// phi_down(I) = sum over J subset I of phi(J).
SetFunction antiderivative(const SetFunction& phi);
// phi_up(I) = sum over J subset I of (-1)^(|I|-|J|) phi(J); inverse of the above.
SetFunction derivative(const SetFunction& phi);

bool is_fully_supermodular(const SetFunction& phi);            // phi_up >= 0 everywhere
bool is_strictly_fully_supermodular(const SetFunction& phi);   // and phi_up(S) > 0

// (phi psi)_up(R) as the covering-pair convolution sum over I union J = R.
Integer product_derivative(const SetFunction& phi, const SetFunction& psi, unsigned mask_r);

SetFunction pointwise_product(const SetFunction& phi, const SetFunction& psi);

// Reduced-position corner simplex: apex Q = (0,...,0,k) and edges
// a_i e_i + b_i e_n. Tables are indexed by subsets of {1..n-1} as bitmasks.
struct CornerSimplexData {
  int n = 0;
  Integer apex;                                   // k
  std::vector<std::pair<Integer, Integer>> edges;  // (a_i, b_i)
  Integer d_prod;                  // D = prod a_i
  std::vector<Integer> k_parts;    // K_i = b_i D / a_i
  Integer k_total;                 // K = sum K_i
  std::vector<Integer> gcd_table;  // gcd_I = gcd(D, K_i for i in I)
  std::vector<Integer> vol_table;  // Vol(tau_I) = gcd_I D_I / D
  std::vector<Integer> dist_table;  // N(tau_I) = (D / gcd_I) k
  Integer facet_dist;              // N(tau) = D k / gcd_S
  Integer facet_weight;            // nu(tau) = (D - K) / gcd_S

  std::vector<IVec> vertices() const;  // Q, A_1, ..., A_{n-1} in Z^n
  RootOfUnity eigenvalue() const;
  bool b1() const;  // some a_i == 1
};

CornerSimplexData corner_data(int n, Integer apex,
                              std::vector<std::pair<Integer, Integer>> edges);

// Root tests for the face factors: gcd_I | K, and gcd_I | m gcd_S.
bool lambda_root(const CornerSimplexData& d, unsigned mask);
bool lambda_root_m(const CornerSimplexData& d, unsigned mask, const Integer& m);

// Alternating sums of the surviving face volumes: the multiplicity of the
// simplex eigenvalue (resp. of exp(2 pi i m / N)) in the corner product.
Integer g_sum(const CornerSimplexData& d);
Integer g_m_sum(const CornerSimplexData& d, const Integer& m);

// Prime-local set functions from the positivity proofs; products over the
// relevant primes have derivative G_m (phi) resp. G (psi) at the full set.
SetFunction phi_p(const CornerSimplexData& d, const Integer& p, const Integer& m);
SetFunction psi_p(const CornerSimplexData& d, const Integer& p);

std::vector<Integer> relevant_primes(const CornerSimplexData& d, const Integer& m = 0);

// The corner product assembled from the tables: factors {N(tau_I) ↦ ±Vol}.
FactoredCyclo corner_cyclo(const CornerSimplexData& d);

}  // namespace nz
