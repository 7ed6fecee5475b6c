#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace lck {

enum class Backend { exact, floating };

/// Comparison tolerance used by the floating backend. Initialised from the
/// LCK_TOL environment variable on first use, default 1e-9.
double tolerance();
void set_tolerance(double eps);

/// Backend requested through LCK_BACKEND (exact|float), default exact.
Backend backend_from_env();

/// A scalar that is either an exact rational or a double.
///
/// Exact values are always canonical (reduced, positive denominator). Mixing
/// an exact and a floating operand yields a floating result. Equality and
/// zero tests on floating values use tolerance().
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(int v) : value_(mpq_class(v)) {}                 // NOLINT
  Scalar(long v) : value_(mpq_class(v)) {}                // NOLINT
  Scalar(unsigned long v) : value_(mpq_class(v)) {}       // NOLINT
  Scalar(mpq_class q);                                    // NOLINT

  static Scalar rational(long num, long den);
  static Scalar floating(double v) { return Scalar(FloatTag{}, v); }
  /// Parses "p/q" or "p" (optionally signed). Throws ParseError.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const;
  double to_double() const;
  Scalar to_backend(Backend b) const;

  /// Canonical text: "p/q" or "p" for exact values, %.17g for floats.
  std::string str() const;

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  /// Exact square root when the value is a rational square, otherwise a
  /// floating result.
  Scalar sqrt() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Bitwise identity: same backend and identical stored value.
  bool identical(const Scalar& o) const;

 private:
  struct FloatTag {};
  Scalar(FloatTag, double v) : value_(v) {}

  std::variant<mpq_class, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lck
