#ifndef EVOALG_FIELD_HPP
#define EVOALG_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "evoalg/error.hpp"

namespace evoalg {

enum class FieldKind { Rationals, PrimeField, ApproxReals };

// Which field the scalars live in. Prime fields are limited to p < 2^32 so
// that residue products fit in 64 bits.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0, 0.0); }
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec approx_reals(double tol);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return p_; }
  double tol() const noexcept { return tol_; }

  bool is_exact() const noexcept { return kind_ != FieldKind::ApproxReals; }
  bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField; }

  // "Q", "F_5" or "R(tol=1e-09)".
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p, double tol)
      : kind_(kind), p_(p), tol_(tol) {}

  FieldKind kind_;
  std::uint64_t p_;
  double tol_;
};

bool is_prime(std::uint64_t n) noexcept;

// An element of the field described by its FieldSpec. Rationals are kept in
// lowest terms, residues in [0, p), reals finite. Equality over ApproxReals
// means |a - b| <= tol.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar from_int(const FieldSpec& spec, long value);
  static Scalar from_rational(const FieldSpec& spec, const mpq_class& value);
  static Scalar from_double(const FieldSpec& spec, double value);

  // Accepts "12", "-3/4" for every field and decimals such as "1.5e-3" for
  // ApproxReals only.
  static Scalar parse(std::string_view text, const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const;
  bool is_one() const;
  // Sign as written by render(); residues are never negative.
  bool is_negative() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  // Tolerance-based over ApproxReals, exact otherwise. Different specs never
  // compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Magnitude as a double: |x| for Q and R, the residue for F_p.
  double magnitude() const;
  double to_double() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  double real() const { return std::get<double>(value_); }

  // Canonical text: reduced fraction, residue 0..p-1, or %.17g.
  std::string render() const;

 private:
  using Value = std::variant<mpq_class, std::uint64_t, double>;
  Scalar(FieldSpec spec, Value value) : spec_(spec), value_(std::move(value)) {}

  void require_same_spec(const Scalar& rhs) const;

  FieldSpec spec_;
  Value value_;
};

// Strict total order used for canonical sorting of vectors and subspaces.
// Over ApproxReals it compares raw values and ignores the tolerance.
bool canonical_less(const Scalar& a, const Scalar& b);

// c3*x^3 + c2*x^2 + c1*x + c0; leading coefficients may vanish.
struct LowDegreePoly {
  Scalar c3, c2, c1, c0;

  LowDegreePoly(Scalar c3_, Scalar c2_, Scalar c1_, Scalar c0_);

  const FieldSpec& spec() const { return c0.spec(); }
  Scalar evaluate(const Scalar& x) const;
  bool is_identically_zero() const;
  // Largest coefficient magnitude.
  double scale() const;
  // "x^3 - x - 1" style, with the variable name given.
  std::string render(std::string_view var = "x") const;
};

struct RootScan {
  std::vector<Scalar> roots;
  // ApproxReals only: candidates whose residual lies in (tol*scale, 10*tol*scale].
  std::vector<Scalar> near_misses;
};

// Largest prime for which nonzero_roots does an exhaustive residue scan.
inline constexpr std::uint64_t kMaxExhaustivePrime = std::uint64_t{1} << 24;

// All nonzero roots, deduplicated and sorted canonically. Throws
// IdenticallyZeroPolynomial when every scalar is a root.
std::vector<Scalar> nonzero_roots(const LowDegreePoly& poly);
RootScan scan_nonzero_roots(const LowDegreePoly& poly);

}  // namespace evoalg

#endif
