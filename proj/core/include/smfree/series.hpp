#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smfree/scalar.hpp"

namespace smfree {

/// Formal power series known up to and including z^order.
///
/// Every binary operation keeps the smaller of the two orders; nothing is
/// extended or guessed past what the operands determine.
class TruncatedSeries {
public:
    /// Coefficients of z^0..z^N; must be non-empty and share one mode.
    explicit TruncatedSeries(std::vector<Scalar> coeffs);

    static TruncatedSeries zero(std::size_t order, Mode mode);
    static TruncatedSeries constant(const Scalar& c, std::size_t order);
    /// The series z.
    static TruncatedSeries identity(std::size_t order, Mode mode);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    Mode mode() const noexcept { return coeffs_.front().mode(); }
    const Scalar& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    /// Same series forgetting everything above z^order (order <= this->order()).
    TruncatedSeries truncated(std::size_t order) const;
    /// z * f, known one order further.
    TruncatedSeries shifted() const;
    /// (f - f(0)) / z, known one order less. Requires order >= 1.
    TruncatedSeries unshifted() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Scalar& c);
    TruncatedSeries operator-() const;

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
    friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }

    /// Coefficientwise up to the common order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string to_string() const;

private:
    std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

/// Relative agreement of every coefficient up to the common order.
bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b, double tol);

/// 1/f; f(0) must be nonzero.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// f(g(z)); g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// p(g(z)) for an exact polynomial p; g may have any constant term.
TruncatedSeries compose_polynomial(std::span<const Scalar> p, const TruncatedSeries& g);

/// Compositional inverse of f, where f(0) = 0 and f'(0) != 0.
TruncatedSeries reversion(const TruncatedSeries& f);

/// Coefficients b_0..b_order of B(z) = sum b_n z^(n+1), the inverse of
/// C(z) = 1/z + R(z). Needs R known to order - 1.
TruncatedSeries mult_inverse_c(const TruncatedSeries& regular_part, std::size_t order);

/// R(z) = 1/B(z) - 1/z from b_0..b_N (b_0 = 1); known to order N - 1.
TruncatedSeries regular_part_from_inverse(const TruncatedSeries& b);

/// R(z) = sum r(n) z^(n-1) from the moment series M(z) = sum M(n) z^n,
/// M(0) = 1. Known to one order below M.
TruncatedSeries r_from_moments(const TruncatedSeries& moments);

}  // namespace smfree
