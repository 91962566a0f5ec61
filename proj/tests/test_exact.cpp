#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nz/exact.hpp"
#include "nz/lattice.hpp"

#include <random>

using namespace nz;

namespace {

UniPoly rand_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-6, 6);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly_gcd on factored inputs") {
  const UniPoly s = UniPoly::variable();
  const UniPoly a = s * s - UniPoly(Rational(1));  // s^2 - 1
  const UniPoly b = s - UniPoly(Rational(1));      // s - 1
  CHECK(poly_gcd(a, b) == b);

  // gcd with zero is the monic normalization of the other argument
  const UniPoly p = UniPoly::linear(3, 6);
  CHECK(poly_gcd(p, UniPoly()) == UniPoly::linear(1, 2));

  CHECK(poly_gcd(UniPoly::linear(6, 5), UniPoly::linear(1, 1)) == UniPoly(Rational(1)));
}

TEST_CASE("poly_gcd divides both arguments exactly") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    UniPoly p = rand_poly(rng, 5), q = rand_poly(rng, 5);
    if (p.is_zero() && q.is_zero()) continue;
    const UniPoly g = poly_gcd(p, q);
    if (!p.is_zero()) CHECK((p.divmod(g).second.is_zero()));
    if (!q.is_zero()) CHECK((q.divmod(g).second.is_zero()));
    if (!p.is_zero() && !q.is_zero()) {
      const UniPoly g2 = poly_gcd(p.divide_exact(g), q.divide_exact(g));
      CHECK(g2 == UniPoly(Rational(1)));
    }
  }
}

TEST_CASE("rational function reduction and arithmetic") {
  const UniPoly s = UniPoly::variable();
  const RationalFunction f(s * s - UniPoly(Rational(1)), s - UniPoly(Rational(1)));
  CHECK(f == RationalFunction(s + UniPoly(Rational(1)), UniPoly(Rational(1))));

  // 2/(s+2) - s/((s+1)(s+2)) = 1/(s+1)
  const UniPoly s1 = UniPoly::linear(1, 1), s2 = UniPoly::linear(1, 2);
  const RationalFunction lhs = RationalFunction(UniPoly(Rational(2)), s2) -
                               RationalFunction(s, s1 * s2);
  CHECK(lhs == RationalFunction(UniPoly(Rational(1)), s1));
  CHECK(lhs.pole_order(Rational(-1)) == 1);
  CHECK(lhs.pole_order(Rational(-2)) == 0);
}

TEST_CASE("snf_index basic values") {
  CHECK(snf_index({{1, 0}, {0, 1}}) == 1);
  CHECK(snf_index({{3, 2}}) == 1);
  CHECK(snf_index({{0, 1}, {3, 2}}) == 3);
  CHECK_THROWS_AS(snf_index({{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("snf_index is invariant under unimodular column operations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5), pick(0, 2), coef(-3, 3);
  for (int it = 0; it < 100; ++it) {
    const int n = 4, l = 3;
    std::vector<IVec> gen(l, IVec(n));
    for (auto& g : gen)
      for (auto& x : g) x = entry(rng);
    IMat m(gen.begin(), gen.end());
    if (rank(m) != l) continue;
    const Integer base = snf_index(gen);
    auto ops = gen;
    for (int step = 0; step < 6; ++step) {
      const int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const Integer c = coef(rng);
      for (int k = 0; k < n; ++k) ops[i][k] += c * ops[j][k];
    }
    CHECK(snf_index(ops) == base);
    std::shuffle(ops.begin(), ops.end(), rng);
    CHECK(snf_index(ops) == base);
  }
}

TEST_CASE("cyclo multiplicity per divisor") {
  FactoredCyclo f;
  f.multiply_factor(6, 1);
  CHECK(f.multiplicity(RootOfUnity::from_ratio(Rational(5, 6))) == 1);

  FactoredCyclo g;
  g.multiply_factor(6, 1);
  g.multiply_factor(2, -1);
  g.multiply_factor(3, -1);
  CHECK(g.multiplicity(RootOfUnity::from_ratio(Rational(1, 6))) == 1);
  CHECK(g.multiplicity(RootOfUnity::from_ratio(Rational(0))) == -1);
}

TEST_CASE("cyclo multiplicity is additive under merge") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> ord(1, 9), exp(-3, 3), rot(0, 8);
  for (int it = 0; it < 200; ++it) {
    FactoredCyclo f, g;
    for (int k = 0; k < 3; ++k) {
      f.multiply_factor(ord(rng), exp(rng));
      g.multiply_factor(ord(rng), exp(rng));
    }
    const int d = ord(rng);
    const RootOfUnity lam = RootOfUnity::from_ratio(Rational(rot(rng), d));
    CHECK((f * g).multiplicity(lam) == f.multiplicity(lam) + g.multiplicity(lam));
  }
}

TEST_CASE("cyclo_is_polynomial") {
  FactoredCyclo a;
  a.multiply_factor(6, 1);
  a.multiply_factor(2, -1);
  CHECK(a.is_polynomial());  // (1-t^6)/(1-t^2) = 1 + t^2 + t^4

  FactoredCyclo b;
  b.multiply_factor(2, -1);
  CHECK_FALSE(b.is_polynomial());

  CHECK(FactoredCyclo().is_polynomial());
}

TEST_CASE("expand_cyclo") {
  FactoredCyclo f;
  f.multiply_factor(1, 1);
  const RationalFunction e = f.expand();
  CHECK(e == RationalFunction(UniPoly::linear(-1, 1), UniPoly(Rational(1))));

  FactoredCyclo g;
  g.multiply_factor(6, 1);
  g.multiply_factor(2, -1);
  g.multiply_factor(3, -1);
  const RationalFunction r = g.expand();
  // cross-multiplied identity: r * (1-t^2)(1-t^3) == (1-t^6)
  const UniPoly t2 = UniPoly::one_minus_power(2), t3 = UniPoly::one_minus_power(3);
  CHECK(r.numerator() * (t2 * t3) == UniPoly::one_minus_power(6) * r.denominator());

  CHECK(FactoredCyclo().expand() == RationalFunction(Rational(1)));
  FactoredCyclo big;
  big.multiply_factor(100000, 1);
  CHECK_THROWS_AS(big.expand(4096), std::length_error);
}

TEST_CASE("expand has a pole at a root of unity iff not a polynomial") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> ord(1, 6), exp(-2, 2);
  for (int it = 0; it < 60; ++it) {
    FactoredCyclo f;
    for (int k = 0; k < 3; ++k) f.multiply_factor(ord(rng), exp(rng));
    const RationalFunction e = f.expand();
    // A factored product is a polynomial iff its reduced denominator is
    // constant: the only possible denominator roots are roots of unity.
    CHECK(f.is_polynomial() == (e.denominator().degree() == 0));
  }
}

TEST_CASE("root of unity normalizes rotation mod 1") {
  const RootOfUnity a = RootOfUnity::from_ratio(Rational(5, 6));
  const RootOfUnity b = RootOfUnity::from_ratio(Rational(11, 6));
  CHECK(a == b);
  CHECK(a.order == 6);

  CHECK(RootOfUnity::from_ratio(Integer(12), Integer(6)).order == 1);
  CHECK(RootOfUnity::from_ratio(Integer(6), Integer(4)).order == 2);
  CHECK(RootOfUnity::from_pole(Rational(-5, 6)).rotation == Rational(5, 6));
}

TEST_CASE("lattice distance of affine spans") {
  CHECK(lattice_distance({{2, 0}, {0, 3}}) == 6);
  CHECK(lattice_distance({{2, 0}}) == 2);
  CHECK(lattice_distance({{2, 0}, {0, 4}}) == 4);  // functional (2,1), value 4
  CHECK(lattice_distance({{0, 0, 1}, {2, 0, 2}, {0, 3, 2}}) == 6);
  CHECK_THROWS_AS(lattice_distance({{1, 1}, {2, 2}}), std::domain_error);
}

TEST_CASE("simplex volumes and conormals") {
  CHECK(simplex_normalized_volume({{2, 0}, {0, 3}}) == 1);
  CHECK(simplex_normalized_volume({{2, 0}, {0, 4}}) == 2);
  CHECK(simplex_normalized_volume({{5, 5}}) == 1);

  const IVec c = simplex_conormal({{0, 0, 1}, {2, 0, 2}, {0, 3, 2}});
  CHECK(c == IVec{-3, -2, 6});
  CHECK(dot(c, {0, 0, 1}) == 6);
}

TEST_CASE("rational string forms") {
  CHECK(to_string(Rational(-5, 6)) == "-5/6");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("-5/6") == Rational(-5, 6));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(mod_one(Rational(-5, 6)) == Rational(1, 6));
  CHECK(mod_one(Rational(7, 3)) == Rational(1, 3));
}
