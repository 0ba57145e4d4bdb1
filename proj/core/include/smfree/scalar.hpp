#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace smfree {

using Rational = mpq_class;

/// Arithmetic mode of a computation. Every scalar taking part in one
/// computation must share the mode.
enum class Mode : std::uint8_t { rational, floating };

std::string_view to_string(Mode mode);

/// Raised when values of different modes meet in one operation.
class ModeMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A number that is either an exact rational (always in lowest terms with a
/// positive denominator) or an IEEE double.
///
/// A default-constructed scalar is the rational zero.
class Scalar {
public:
    Scalar() = default;

    static Scalar rational(const Rational& q);
    static Scalar rational(long numerator, long denominator = 1);
    static Scalar floating(double x);

    static Scalar zero(Mode mode) { return from_int(0, mode); }
    static Scalar one(Mode mode) { return from_int(1, mode); }
    static Scalar from_int(long n, Mode mode);

    /// Parses "p", "p/q" (rational mode) or any decimal literal (floating mode).
    /// In rational mode decimals such as "0.25" are converted exactly.
    static Scalar parse(std::string_view text, Mode mode);

    Mode mode() const noexcept { return std::holds_alternative<Rational>(value_) ? Mode::rational : Mode::floating; }
    bool is_zero() const;

    /// Throws ModeMismatch unless the scalar is rational.
    const Rational& as_rational() const;
    /// Lossy for rationals.
    double to_double() const;

    /// Same value converted to `mode` (rational -> floating rounds; floating ->
    /// rational is exact in the binary expansion).
    Scalar converted(Mode mode) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws std::domain_error on division by an exact zero.
    Scalar& operator/=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Exact comparison; operands must share the mode.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Canonical text: "p" or "p/q" for rationals, shortest round-trip decimal
    /// for doubles.
    std::string to_string() const;

private:
    std::variant<Rational, double> value_{Rational(0)};
};

Scalar pow(Scalar base, unsigned exponent);

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, double tol);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace smfree
