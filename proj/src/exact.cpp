#include "nz/exact.hpp"

#include "nz/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace nz {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

Rational mod_one(const Rational& x) {
  const Integer n = num(x), d = den(x);
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;  // floor
  return x - Rational(q);
}

long valuation(Integer x, const Integer& p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  x = abs(x);
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  for (Integer d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<Integer> divisors(const Integer& m) {
  std::vector<Integer> out;
  const Integer a = abs(m);
  if (a == 0) return out;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d * d != a) out.push_back(a / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> prime_factors(Integer m) {
  std::vector<Integer> out;
  m = abs(m);
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

// --------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::linear(Rational a1, Rational a0) {
  return UniPoly(std::vector<Rational>{std::move(a0), std::move(a1)});
}

UniPoly UniPoly::one_minus_power(unsigned long m) {
  std::vector<Rational> c(m + 1, 0);
  c[0] = 1;
  c[m] = -1;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational UniPoly::leading() const {
  if (is_zero()) return 0;
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPoly r = *this;
  std::vector<Rational> q(std::max<int>(0, degree() - d.degree() + 1), 0);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int k = r.degree() - d.degree();
    const Rational f = r.leading() / d.leading();
    q[k] = f;
    std::vector<Rational> rc = r.coeffs_;
    for (int i = 0; i <= d.degree(); ++i) rc[i + k] -= f * d.coeffs_[i];
    r = UniPoly(std::move(rc));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rational l = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x /= l;
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

int UniPoly::root_multiplicity(const Rational& x0) const {
  if (is_zero()) return 0;
  const UniPoly lin = UniPoly::linear(1, -x0);
  int mult = 0;
  UniPoly p = *this;
  while (true) {
    auto [q, r] = p.divmod(lin);
    if (!r.is_zero()) break;
    ++mult;
    p = q;
  }
  return mult;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = c > 0 ? c : Rational(-c);
    if (k == 0 || a != 1) os << nz::to_string(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    auto [quot, rem] = a.divmod(b);
    a = b;
    b = rem;
  }
  return a.monic();
}

// --------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Rational constant)
    : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  const UniPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  const Rational l = den_.leading();
  if (l != 1) {
    den_ = den_.monic();
    std::vector<Rational> c = num_.coeffs();
    for (auto& x : c) x /= l;
    num_ = UniPoly(std::move(c));
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

int RationalFunction::pole_order(const Rational& x0) const {
  return den_.root_multiplicity(x0);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == UniPoly(Rational(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// --------------------------------------------------------------------------
// RootOfUnity

RootOfUnity RootOfUnity::from_ratio(const Rational& ratio) {
  RootOfUnity r;
  r.rotation = mod_one(ratio);
  r.order = den(r.rotation);
  return r;
}

RootOfUnity RootOfUnity::from_ratio(const Integer& conormal_sum, const Integer& dist) {
  if (dist == 0) throw std::domain_error("zero lattice distance");
  return from_ratio(Rational(conormal_sum, dist));
}

RootOfUnity RootOfUnity::from_pole(const Rational& s0) { return from_ratio(-s0); }

std::string RootOfUnity::to_string() const {
  return "exp(-2*pi*i*" + nz::to_string(rotation) + ")";
}

// --------------------------------------------------------------------------
// FactoredCyclo

FactoredCyclo FactoredCyclo::single(const Integer& order_m, const Integer& exponent) {
  FactoredCyclo f;
  f.multiply_factor(order_m, exponent);
  return f;
}

void FactoredCyclo::multiply_factor(const Integer& order_m, const Integer& exponent) {
  if (order_m <= 0) throw std::invalid_argument("factor order must be positive");
  if (exponent == 0) return;
  auto it = factors_.find(order_m);
  if (it == factors_.end()) {
    factors_.emplace(order_m, exponent);
  } else {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredCyclo FactoredCyclo::operator*(const FactoredCyclo& o) const {
  FactoredCyclo f = *this;
  for (const auto& [m, e] : o.factors_) f.multiply_factor(m, e);
  return f;
}

FactoredCyclo FactoredCyclo::inverse() const {
  FactoredCyclo f;
  for (const auto& [m, e] : factors_) f.factors_.emplace(m, -e);
  return f;
}

FactoredCyclo FactoredCyclo::pow(const Integer& e) const {
  FactoredCyclo f;
  if (e == 0) return f;
  for (const auto& [m, k] : factors_) f.factors_.emplace(m, k * e);
  return f;
}

Integer FactoredCyclo::multiplicity(const RootOfUnity& lambda) const {
  Integer total = 0;
  for (const auto& [m, e] : factors_)
    if (m % lambda.order == 0) total += e;
  return total;
}

bool FactoredCyclo::is_polynomial() const {
  std::set<Integer> ds;
  for (const auto& [m, e] : factors_)
    for (const auto& d : divisors(m)) ds.insert(d);
  for (const auto& d : ds) {
    Integer total = 0;
    for (const auto& [m, e] : factors_)
      if (m % d == 0) total += e;
    if (total < 0) return false;
  }
  return true;
}

RationalFunction FactoredCyclo::expand(unsigned long degree_cap) const {
  Integer num_deg = 0, den_deg = 0;
  for (const auto& [m, e] : factors_) (e > 0 ? num_deg : den_deg) += m * abs(e);
  if (num_deg > degree_cap || den_deg > degree_cap) throw std::length_error("degree cap");
  UniPoly numer{Rational(1)}, denom{Rational(1)};
  for (const auto& [m, e] : factors_) {
    const UniPoly base = UniPoly::one_minus_power(m.convert_to<unsigned long>());
    for (Integer i = 0; i < abs(e); ++i) {
      if (e > 0)
        numer = numer * base;
      else
        denom = denom * base;
    }
  }
  return RationalFunction(std::move(numer), std::move(denom));
}

std::string FactoredCyclo::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, e] : factors_) {
    if (!first) os << " * ";
    os << "(1-t^" << m.str() << ")";
    if (e != 1) os << "^" << e.str();
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------------------

Integer snf_index(const std::vector<std::vector<Integer>>& generators) {
  if (generators.empty()) return 1;
  const size_t n = generators[0].size();
  IMat m(n, IVec(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = generators[j][i];
  const auto divs = elementary_divisors(m);
  if (divs.size() != generators.size()) throw std::invalid_argument("not simplicial");
  Integer prod = 1;
  for (const auto& d : divs) prod *= d;
  return prod;
}

}  // namespace nz
