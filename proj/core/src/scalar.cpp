#include "smfree/scalar.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace smfree {

namespace {

[[noreturn]] void throw_mismatch()
{
    throw ModeMismatch("scalars of different modes (rational/floating) cannot be mixed");
}

Rational canonical(Rational q)
{
    q.canonicalize();
    return q;
}

// Exact rational value of a decimal literal such as "-12.5e-3".
Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
        if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) {
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        }
        s = s.substr(0, e);
    }
    std::string digits;
    bool seen_point = false;
    for (char c : s) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) --exponent;
        } else {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");

    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace

std::string_view to_string(Mode mode)
{
    return mode == Mode::rational ? "rational" : "float";
}

Scalar Scalar::rational(const Rational& q)
{
    Scalar s;
    s.value_ = canonical(q);
    return s;
}

Scalar Scalar::rational(long numerator, long denominator)
{
    if (denominator == 0) throw std::domain_error("zero denominator");
    return rational(Rational(numerator, denominator));
}

Scalar Scalar::floating(double x)
{
    Scalar s;
    s.value_ = x;
    return s;
}

Scalar Scalar::from_int(long n, Mode mode)
{
    return mode == Mode::rational ? rational(n) : floating(static_cast<double>(n));
}

Scalar Scalar::parse(std::string_view text, Mode mode)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");

    Rational q;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash));
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
        q = num / den;
    } else {
        if (mode == Mode::floating) {
            double x = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
            if (ec == std::errc{} && ptr == text.data() + text.size()) return floating(x);
        }
        q = parse_decimal(text);
    }
    return mode == Mode::rational ? rational(q) : floating(q.get_d());
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& v) { return v == 0; }, value_);
}

const Rational& Scalar::as_rational() const
{
    if (const auto* q = std::get_if<Rational>(&value_)) return *q;
    throw ModeMismatch("scalar is not rational");
}

double Scalar::to_double() const
{
    if (const auto* q = std::get_if<Rational>(&value_)) return q->get_d();
    return std::get<double>(value_);
}

Scalar Scalar::converted(Mode mode) const
{
    if (mode == this->mode()) return *this;
    if (mode == Mode::floating) return floating(to_double());
    Rational q(std::get<double>(value_));
    return rational(q);
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    if (auto* q = std::get_if<Rational>(&value_)) {
        const auto* r = std::get_if<Rational>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        *q += *r;
    } else {
        const auto* r = std::get_if<double>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        std::get<double>(value_) += *r;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    if (auto* q = std::get_if<Rational>(&value_)) {
        const auto* r = std::get_if<Rational>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        *q -= *r;
    } else {
        const auto* r = std::get_if<double>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        std::get<double>(value_) -= *r;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    if (auto* q = std::get_if<Rational>(&value_)) {
        const auto* r = std::get_if<Rational>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        *q *= *r;
    } else {
        const auto* r = std::get_if<double>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        std::get<double>(value_) *= *r;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    if (auto* q = std::get_if<Rational>(&value_)) {
        const auto* r = std::get_if<Rational>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        if (*r == 0) throw std::domain_error("division by zero");
        *q /= *r;
    } else {
        const auto* r = std::get_if<double>(&rhs.value_);
        if (r == nullptr) throw_mismatch();
        std::get<double>(value_) /= *r;
    }
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    std::visit([](auto& v) { v = -v; }, out.value_);
    return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs)
{
    if (lhs.mode() != rhs.mode()) throw_mismatch();
    if (lhs.mode() == Mode::rational) return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
    return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::string Scalar::to_string() const
{
    if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::get<double>(value_));
    return std::string(buf.data(), ptr);
}

Scalar pow(Scalar base, unsigned exponent)
{
    Scalar result = Scalar::one(base.mode());
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol)
{
    const double x = a.to_double();
    const double y = b.to_double();
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

}  // namespace smfree
