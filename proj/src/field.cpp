#include "evoalg/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

namespace evoalg {

namespace {

const std::regex& integer_syntax() {
  static const std::regex re(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  return re;
}

const std::regex& decimal_syntax() {
  static const std::regex re(R"(^[+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?$)");
  return re;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

double checked(double v) {
  if (!std::isfinite(v)) raise(Errc::NonFiniteValue, "real arithmetic produced a non-finite value");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) raise(Errc::InvalidFieldSpec, "prime modulus must be below 2^32");
  if (!is_prime(p)) raise(Errc::InvalidFieldSpec, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::PrimeField, p, 0.0);
}

FieldSpec FieldSpec::approx_reals(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) raise(Errc::InvalidFieldSpec, "tolerance must be a positive finite number");
  return FieldSpec(FieldKind::ApproxReals, 0, tol);
}

std::string FieldSpec::describe() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(p_);
    case FieldKind::ApproxReals: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "R(tol=%.17g)", tol_);
      return buf;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

Scalar Scalar::zero(const FieldSpec& spec) { return from_int(spec, 0); }
Scalar Scalar::one(const FieldSpec& spec) { return from_int(spec, 1); }

Scalar Scalar::from_int(const FieldSpec& spec, long value) {
  return from_rational(spec, mpq_class(value));
}

Scalar Scalar::from_rational(const FieldSpec& spec, const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  switch (spec.kind()) {
    case FieldKind::Rationals:
      return Scalar(spec, v);
    case FieldKind::PrimeField: {
      const std::uint64_t p = spec.modulus();
      const std::uint64_t den = reduce_mod(v.get_den(), p);
      if (den == 0) raise(Errc::ZeroDenominator, "denominator vanishes modulo " + std::to_string(p));
      const std::uint64_t num = reduce_mod(v.get_num(), p);
      return Scalar(spec, num * mod_pow(den, p - 2, p) % p);
    }
    case FieldKind::ApproxReals:
      return Scalar(spec, checked(v.get_d()));
  }
  raise(Errc::InvalidFieldSpec, "unknown field kind");
}

Scalar Scalar::from_double(const FieldSpec& spec, double value) {
  if (spec.kind() == FieldKind::ApproxReals) return Scalar(spec, checked(value));
  if (!std::isfinite(value)) raise(Errc::NonFiniteValue, "non-finite value");
  return from_rational(spec, mpq_class(value));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& spec) {
  const std::string s(text);
  if (std::regex_match(s, integer_syntax())) {
    const auto slash = s.find('/');
    mpz_class num, den(1);
    const std::string num_text = s.substr(0, slash);
    // mpz_set_str rejects a leading '+'.
    num.set_str(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
    if (slash != std::string::npos) den.set_str(s.substr(slash + 1), 10);
    if (den == 0) raise(Errc::ZeroDenominator, "zero denominator in '" + s + "'");
    return from_rational(spec, mpq_class(num, den));
  }
  if (std::regex_match(s, decimal_syntax())) {
    if (spec.is_exact())
      raise(Errc::DecimalInExactField, "decimal '" + s + "' is not allowed over " + spec.describe());
    double v = 0.0;
    const char* first = s.data() + (s[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      raise(Errc::MalformedScalar, "cannot read real '" + s + "'");
    return Scalar(spec, v);
  }
  raise(Errc::MalformedScalar, "malformed scalar '" + s + "'");
}

void Scalar::require_same_spec(const Scalar& rhs) const {
  if (!(spec_ == rhs.spec_))
    raise(Errc::MixedFieldSpecs, "operands from " + spec_.describe() + " and " + rhs.spec_.describe());
}

bool Scalar::is_zero() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return rational() == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::ApproxReals: return std::abs(real()) <= spec_.tol();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(spec_); }

bool Scalar::is_negative() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return sgn(rational()) < 0;
    case FieldKind::PrimeField: return false;
    case FieldKind::ApproxReals: return real() < 0.0;
  }
  return false;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_spec(rhs);
  switch (spec_.kind()) {
    case FieldKind::Rationals: return Scalar(spec_, mpq_class(rational() + rhs.rational()));
    case FieldKind::PrimeField: return Scalar(spec_, (residue() + rhs.residue()) % spec_.modulus());
    case FieldKind::ApproxReals: return Scalar(spec_, checked(real() + rhs.real()));
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return Scalar(spec_, mpq_class(-rational()));
    case FieldKind::PrimeField: return Scalar(spec_, (spec_.modulus() - residue()) % spec_.modulus());
    case FieldKind::ApproxReals: return Scalar(spec_, -real());
  }
  return *this;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_spec(rhs);
  switch (spec_.kind()) {
    case FieldKind::Rationals: return Scalar(spec_, mpq_class(rational() * rhs.rational()));
    case FieldKind::PrimeField: return Scalar(spec_, residue() * rhs.residue() % spec_.modulus());
    case FieldKind::ApproxReals: return Scalar(spec_, checked(real() * rhs.real()));
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(Errc::InversionOfZero, "inverse of zero over " + spec_.describe());
  switch (spec_.kind()) {
    case FieldKind::Rationals: return Scalar(spec_, mpq_class(1 / rational()));
    case FieldKind::PrimeField: return Scalar(spec_, mod_pow(residue(), spec_.modulus() - 2, spec_.modulus()));
    case FieldKind::ApproxReals: return Scalar(spec_, checked(1.0 / real()));
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_spec(rhs);
  return *this * rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.spec_ == b.spec_)) return false;
  switch (a.spec_.kind()) {
    case FieldKind::Rationals: return a.rational() == b.rational();
    case FieldKind::PrimeField: return a.residue() == b.residue();
    case FieldKind::ApproxReals: return std::abs(a.real() - b.real()) <= a.spec_.tol();
  }
  return false;
}

double Scalar::magnitude() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return std::abs(rational().get_d());
    case FieldKind::PrimeField: return static_cast<double>(residue());
    case FieldKind::ApproxReals: return std::abs(real());
  }
  return 0.0;
}

double Scalar::to_double() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return rational().get_d();
    case FieldKind::PrimeField: return static_cast<double>(residue());
    case FieldKind::ApproxReals: return real();
  }
  return 0.0;
}

std::string Scalar::render() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::ApproxReals: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", real());
      return buf;
    }
  }
  return "?";
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (!(a.spec() == b.spec()))
    raise(Errc::MixedFieldSpecs, "cannot order scalars from different fields");
  switch (a.spec().kind()) {
    case FieldKind::Rationals: return a.rational() < b.rational();
    case FieldKind::PrimeField: return a.residue() < b.residue();
    case FieldKind::ApproxReals: return a.real() < b.real();
  }
  return false;
}

// ---------------------------------------------------------------------------

LowDegreePoly::LowDegreePoly(Scalar c3_, Scalar c2_, Scalar c1_, Scalar c0_)
    : c3(std::move(c3_)), c2(std::move(c2_)), c1(std::move(c1_)), c0(std::move(c0_)) {
  const FieldSpec& s = c0.spec();
  if (!(c1.spec() == s) || !(c2.spec() == s) || !(c3.spec() == s))
    raise(Errc::MixedFieldSpecs, "polynomial coefficients from different fields");
}

Scalar LowDegreePoly::evaluate(const Scalar& x) const {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

bool LowDegreePoly::is_identically_zero() const {
  return c3.is_zero() && c2.is_zero() && c1.is_zero() && c0.is_zero();
}

double LowDegreePoly::scale() const {
  return std::max({c3.magnitude(), c2.magnitude(), c1.magnitude(), c0.magnitude()});
}

std::string LowDegreePoly::render(std::string_view var) const {
  const Scalar* coeffs[4] = {&c3, &c2, &c1, &c0};
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Scalar& c = *coeffs[k];
    const int degree = 3 - k;
    if (c.is_zero()) continue;
    const bool negative = c.is_negative();
    const Scalar mag = negative ? -c : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (degree == 0 || !mag.is_one()) out << mag.render();
    if (degree >= 1) out << var;
    if (degree >= 2) out << '^' << degree;
  }
  if (first) out << '0';
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  // Trial division up to sqrt(n); beyond this the candidate scan is not
  // worth attempting.
  static const mpz_class limit("1000000000000");
  if (n > limit) raise(Errc::TooLarge, "coefficient too large for rational root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      mpz_class other = n / d;
      if (other != d) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational root theorem on the integer polynomial obtained by clearing
// denominators and dividing out powers of x.
std::vector<Scalar> rational_nonzero_roots(const LowDegreePoly& poly) {
  const FieldSpec& spec = poly.spec();
  std::vector<mpq_class> q = {poly.c0.rational(), poly.c1.rational(), poly.c2.rational(),
                              poly.c3.rational()};
  mpz_class lcm_den = 1;
  for (const auto& c : q) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : q) ints.push_back(mpz_class(c * lcm_den));

  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  std::size_t high = 3;
  while (ints[high] == 0) --high;
  if (low == high) return {};

  std::vector<Scalar> roots;
  for (const auto& r : positive_divisors(ints[low])) {
    for (const auto& s : positive_divisors(ints[high])) {
      for (int sign : {1, -1}) {
        mpq_class candidate(sign * r, s);
        candidate.canonicalize();
        const Scalar x = Scalar::from_rational(spec, candidate);
        if (poly.evaluate(x).is_zero()) roots.push_back(x);
      }
    }
  }
  sort_unique(roots);
  return roots;
}

std::vector<Scalar> prime_field_nonzero_roots(const LowDegreePoly& poly) {
  const std::uint64_t p = poly.spec().modulus();
  if (p > kMaxExhaustivePrime) raise(Errc::TooLarge, "prime too large for exhaustive root scan");
  const std::uint64_t a3 = poly.c3.residue(), a2 = poly.c2.residue(), a1 = poly.c1.residue(),
                      a0 = poly.c0.residue();
  std::vector<Scalar> roots;
  for (std::uint64_t x = 1; x < p; ++x) {
    const std::uint64_t v = (((a3 * x + a2) % p * x + a1) % p * x + a0) % p;
    if (v == 0) roots.push_back(Scalar::from_int(poly.spec(), static_cast<long>(x)));
  }
  return roots;
}

double horner(const double c[4], double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }

// Sign-change bisection on [lo, hi] down to adjacent doubles.
double bisect(const double c[4], double lo, double hi) {
  double flo = horner(c, lo);
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = horner(c, mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RootScan real_nonzero_roots(const LowDegreePoly& poly) {
  const FieldSpec& spec = poly.spec();
  const double tol = spec.tol();
  const double full[4] = {poly.c0.real(), poly.c1.real(), poly.c2.real(), poly.c3.real()};

  // Effective coefficients: tolerance-zero entries are dropped and powers of
  // x that divide the polynomial are factored out.
  int high = 3;
  while (high >= 0 && std::abs(full[high]) <= tol) --high;
  int low = 0;
  while (low < high && std::abs(full[low]) <= tol) ++low;

  std::vector<double> candidates;
  if (high - low >= 1) {
    double c[4] = {0, 0, 0, 0};
    for (int k = low; k <= high; ++k) c[k - low] = full[k];
    const int degree = high - low;
    const double lead = c[degree];

    double bound = 0.0;
    for (int k = 0; k < degree; ++k) bound = std::max(bound, std::abs(c[k] / lead));
    bound += 1.0;

    // Critical points split the line into monotone pieces.
    std::vector<double> cuts = {-bound};
    if (degree == 3) {
      // derivative 3a x^2 + 2b x + c
      const double a = 3 * c[3], b = 2 * c[2], d = c[1];
      const double disc = b * b - 4 * a * d;
      if (disc >= 0) {
        const double sq = std::sqrt(disc);
        const double qq = -0.5 * (b + std::copysign(sq, b));
        std::vector<double> crit;
        if (qq != 0) {
          crit.push_back(qq / a);
          crit.push_back(d / qq);
        } else {
          crit.push_back(0.0);
        }
        std::sort(crit.begin(), crit.end());
        for (double x : crit)
          if (x > -bound && x < bound) {
            cuts.push_back(x);
            candidates.push_back(x);
          }
      }
    } else if (degree == 2) {
      const double x = -c[1] / (2 * c[2]);
      if (x > -bound && x < bound) {
        cuts.push_back(x);
        candidates.push_back(x);
      }
    }
    cuts.push_back(bound);

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double lo = cuts[k], hi = cuts[k + 1];
      const double flo = horner(c, lo), fhi = horner(c, hi);
      if (flo == 0.0) candidates.push_back(lo);
      if (fhi == 0.0) candidates.push_back(hi);
      if ((flo < 0) != (fhi < 0) && flo != 0.0 && fhi != 0.0) candidates.push_back(bisect(c, lo, hi));
    }
  }

  const double scale = poly.scale();
  RootScan scan;
  for (double x : candidates) {
    if (std::abs(x) <= tol) continue;
    const double residual = std::abs(horner(full, x));
    const Scalar root = Scalar::from_double(spec, x);
    if (residual <= tol * scale)
      scan.roots.push_back(root);
    else if (residual <= 10 * tol * scale)
      scan.near_misses.push_back(root);
  }
  sort_unique(scan.roots);
  sort_unique(scan.near_misses);
  // A near miss within tol of an accepted root is the same root.
  std::erase_if(scan.near_misses, [&](const Scalar& m) {
    return std::find(scan.roots.begin(), scan.roots.end(), m) != scan.roots.end();
  });
  return scan;
}

}  // namespace

RootScan scan_nonzero_roots(const LowDegreePoly& poly) {
  if (poly.is_identically_zero())
    raise(Errc::IdenticallyZeroPolynomial, "polynomial is identically zero; every scalar is a root");
  switch (poly.spec().kind()) {
    case FieldKind::Rationals: return {rational_nonzero_roots(poly), {}};
    case FieldKind::PrimeField: return {prime_field_nonzero_roots(poly), {}};
    case FieldKind::ApproxReals: return real_nonzero_roots(poly);
  }
  return {};
}

std::vector<Scalar> nonzero_roots(const LowDegreePoly& poly) { return scan_nonzero_roots(poly).roots; }

}  // namespace evoalg
