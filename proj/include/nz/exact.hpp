#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// univariate polynomials over Q, reduced rational functions, factored
// products of (1 - t^M), and roots of unity represented by their rotation.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// x reduced into the half-open interval [0,1).
Rational mod_one(const Rational& x);

// p-adic valuation of x != 0. Callers must special-case x = 0.
long valuation(Integer x, const Integer& p);

bool is_prime(const Integer& p);

// Ascending list of positive divisors (trial division; desk-scale inputs).
std::vector<Integer> divisors(const Integer& m);

// Distinct prime factors of |m|, ascending; empty for m in {-1,0,1}.
std::vector<Integer> prime_factors(Integer m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);  // "p" or "p/q", q > 0
Rational parse_rational(const std::string& s);

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, coefficients indexed by degree.
// The zero polynomial has an empty coefficient vector and degree() == -1.

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational constant);
  explicit UniPoly(std::vector<Rational> coeffs);  // constant term first

  static UniPoly variable();                      // the monomial s
  static UniPoly linear(Rational a1, Rational a0);  // a1*s + a0
  static UniPoly one_minus_power(unsigned long m);  // 1 - s^m

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly divide_exact(const UniPoly& d) const;

  UniPoly monic() const;
  Rational eval(const Rational& x) const;
  // Multiplicity of x0 as a root (0 if not a root or if *this == 0).
  int root_multiplicity(const Rational& x0) const;

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);  // monic

// ---------------------------------------------------------------------------
// Reduced rational function num/den: gcd(num, den) = 1, den monic.
// Zero is represented as 0/1.

class RationalFunction {
 public:
  RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
  explicit RationalFunction(Rational constant);
  RationalFunction(UniPoly num, UniPoly den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Order of x0 as a pole: multiplicity in the reduced denominator.
  int pole_order(const Rational& x0) const;

  std::string to_string(const std::string& var = "s") const;

 private:
  void reduce();
  UniPoly num_, den_;
};

// ---------------------------------------------------------------------------
// lambda = exp(-2*pi*i*rotation) with rotation in [0,1); order is the reduced
// denominator of the rotation, so e.g. 5/6 and 11/6 compare equal.

struct RootOfUnity {
  Rational rotation;
  Integer order;

  // exp(-2 pi i * conormal_sum / dist): the eigenvalue attached to a facet
  // or simplex with lattice distance `dist` and conormal entry sum.
  static RootOfUnity from_ratio(const Rational& ratio);
  static RootOfUnity from_ratio(const Integer& conormal_sum, const Integer& dist);
  // exp(2 pi i * s0) for a candidate pole s0.
  static RootOfUnity from_pole(const Rational& s0);

  bool operator==(const RootOfUnity& o) const { return rotation == o.rotation; }
  bool is_one() const { return rotation == 0; }
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Formal signed product of factors (1 - t^M)^e, kept factored: factors with
// different M share roots, so multiplicity queries work per divisor rather
// than per factor.

class FactoredCyclo {
 public:
  FactoredCyclo() = default;

  static FactoredCyclo one() { return FactoredCyclo(); }
  static FactoredCyclo single(const Integer& order_m, const Integer& exponent);

  const std::map<Integer, Integer>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  void multiply_factor(const Integer& order_m, const Integer& exponent);
  FactoredCyclo operator*(const FactoredCyclo& o) const;
  FactoredCyclo inverse() const;
  FactoredCyclo pow(const Integer& e) const;
  bool operator==(const FactoredCyclo& o) const { return factors_ == o.factors_; }

  // Multiplicity of (t - lambda): sum of exponents over factors whose order
  // is a multiple of order(lambda). Positive = root, negative = pole.
  Integer multiplicity(const RootOfUnity& lambda) const;

  // True iff every root of unity has nonnegative multiplicity.
  bool is_polynomial() const;

  // Expand to a reduced rational function in t. Throws std::length_error
  // ("degree cap") if the expanded degree would exceed `degree_cap`.
  RationalFunction expand(unsigned long degree_cap = 8192) const;

  std::string to_string() const;

 private:
  std::map<Integer, Integer> factors_;
};

// ---------------------------------------------------------------------------
// Index of the lattice generated by `generators` (integer vectors, linearly
// independent over Q) inside its saturation: the product of the nonzero
// elementary divisors of the generator matrix. Throws std::invalid_argument
// ("not simplicial") on dependent input.
Integer snf_index(const std::vector<std::vector<Integer>>& generators);

inline Integer cyclo_multiplicity(const FactoredCyclo& f, const RootOfUnity& lambda) {
  return f.multiplicity(lambda);
}
inline bool cyclo_is_polynomial(const FactoredCyclo& f) { return f.is_polynomial(); }
inline RationalFunction expand_cyclo(const FactoredCyclo& f, unsigned long cap = 8192) {
  return f.expand(cap);
}

}  // namespace nz
