#include "smfree/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace smfree {

namespace {

void require_same_mode(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.mode() != b.mode()) throw ModeMismatch("series of different modes");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
    const Mode m = coeffs_.front().mode();
    for (const auto& c : coeffs_) {
        if (c.mode() != m) throw ModeMismatch("series coefficients of different modes");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order, Mode mode)
{
    return TruncatedSeries(std::vector<Scalar>(order + 1, Scalar::zero(mode)));
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t order)
{
    auto s = zero(order, c.mode());
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order, Mode mode)
{
    auto s = zero(order, mode);
    if (order >= 1) s.coeffs_[1] = Scalar::one(mode);
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a series from order " + std::to_string(this->order()) + " to " +
                                    std::to_string(order));
    }
    return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

TruncatedSeries TruncatedSeries::shifted() const
{
    std::vector<Scalar> out;
    out.reserve(coeffs_.size() + 1);
    out.push_back(Scalar::zero(mode()));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::unshifted() const
{
    if (order() == 0) throw std::invalid_argument("unshift needs order >= 1");
    return TruncatedSeries(std::vector<Scalar>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    require_same_mode(*this, rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    require_same_mode(*this, rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs)
{
    require_same_mode(*this, rhs);
    const std::size_t len = std::min(coeffs_.size(), rhs.coeffs_.size());
    std::vector<Scalar> out(len, Scalar::zero(mode()));
    for (std::size_t i = 0; i < len; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c)
{
    if (c.mode() != mode()) throw ModeMismatch("scalar and series of different modes");
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    auto out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_mode(a, b);
    const std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<long>(len), b.coeffs_.begin());
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t n = 0; n < coeffs_.size(); ++n) os << (n ? ", " : "") << coeffs_[n];
    os << "] + O(z^" << coeffs_.size() << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    return os << s.to_string();
}

bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b, double tol)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) {
        if (!approx_equal(a[k], b[k], tol)) return false;
    }
    return true;
}

TruncatedSeries reciprocal(const TruncatedSeries& f)
{
    if (f[0].is_zero()) throw std::domain_error("reciprocal of a series with zero constant term");
    const Mode mode = f.mode();
    const std::size_t n = f.order();
    std::vector<Scalar> g(n + 1, Scalar::zero(mode));
    const Scalar inv0 = Scalar::one(mode) / f[0];
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc = Scalar::zero(mode);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!f[j].is_zero()) acc += f[j] * g[k - j];
        }
        g[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g)
{
    require_same_mode(f, g);
    if (!g[0].is_zero()) throw std::domain_error("compose: inner series must have zero constant term");
    const std::size_t order = std::min(f.order(), g.order());
    const auto inner = g.truncated(order);
    // Horner from the top coefficient; each step multiplies by g, which
    // raises the valuation, so order `order` is exact.
    auto acc = TruncatedSeries::constant(f[order], order);
    for (std::size_t k = order; k-- > 0;) {
        acc *= inner;
        acc += TruncatedSeries::constant(f[k], order);
    }
    return acc;
}

TruncatedSeries compose_polynomial(std::span<const Scalar> p, const TruncatedSeries& g)
{
    if (p.empty()) return TruncatedSeries::zero(g.order(), g.mode());
    auto acc = TruncatedSeries::constant(p.back(), g.order());
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        acc *= g;
        acc += TruncatedSeries::constant(p[k], g.order());
    }
    return acc;
}

TruncatedSeries reversion(const TruncatedSeries& f)
{
    if (f.order() == 0) return TruncatedSeries::zero(0, f.mode());
    if (!f[0].is_zero()) throw std::domain_error("reversion needs zero constant term");
    if (f[1].is_zero()) throw std::domain_error("reversion needs a nonzero linear term");
    const Mode mode = f.mode();
    const std::size_t n = f.order();
    std::vector<Scalar> h(n + 1, Scalar::zero(mode));
    h[1] = Scalar::one(mode) / f[1];
    // Fix h_k so that the z^k coefficient of f(h) vanishes; h_k enters that
    // coefficient only through f_1 h_k.
    for (std::size_t k = 2; k <= n; ++k) {
        const auto partial = compose(f.truncated(k), TruncatedSeries(std::vector<Scalar>(h.begin(), h.begin() + static_cast<long>(k) + 1)));
        h[k] = -partial[k] / f[1];
    }
    return TruncatedSeries(std::move(h));
}

TruncatedSeries mult_inverse_c(const TruncatedSeries& regular_part, std::size_t order)
{
    const Mode mode = regular_part.mode();
    if (order == 0) return TruncatedSeries::constant(Scalar::one(mode), 0);
    if (regular_part.order() + 1 < order) {
        throw std::invalid_argument("mult_inverse_c: R known to order " + std::to_string(regular_part.order()) +
                                    ", need " + std::to_string(order - 1));
    }
    // B(z) = z / (1 + z R(z)); we return B(z)/z.
    auto denom = regular_part.truncated(order - 1).shifted();
    denom += TruncatedSeries::constant(Scalar::one(mode), order);
    return reciprocal(denom);
}

TruncatedSeries regular_part_from_inverse(const TruncatedSeries& b)
{
    const Mode mode = b.mode();
    if (!(b[0] == Scalar::one(mode))) throw std::domain_error("inverse of 1/z + R must start with b_0 = 1");
    if (b.order() == 0) throw std::invalid_argument("regular_part_from_inverse needs order >= 1");
    auto c = reciprocal(b);
    c -= TruncatedSeries::constant(Scalar::one(mode), b.order());
    return c.unshifted();
}

TruncatedSeries r_from_moments(const TruncatedSeries& moments)
{
    const Mode mode = moments.mode();
    if (!(moments[0] == Scalar::one(mode))) throw std::domain_error("moment series must start with M(0) = 1");
    if (moments.order() == 0) throw std::invalid_argument("r_from_moments needs order >= 1");
    // y = w M(w) is inverted to w(y); then y/w(y) = 1 + y R(y).
    const auto w_of_y = reversion(moments.shifted());
    const auto c = reciprocal(w_of_y.unshifted());
    return (c - TruncatedSeries::constant(Scalar::one(mode), c.order())).unshifted();
}

}  // namespace smfree
