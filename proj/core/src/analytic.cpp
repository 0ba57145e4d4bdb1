#include "smfree/analytic.hpp"

#include <stdexcept>

namespace smfree {

namespace {

/// w R(w X(w)) to order n, the moment-variable form of R(G(z)) / z.
TruncatedSeries subordinated(const TruncatedSeries& r, const TruncatedSeries& x, std::size_t n)
{
    const auto inner = x.truncated(n - 1).shifted();
    return compose(r.truncated(n), inner).truncated(n - 1).shifted();
}

TruncatedSeries one_minus_inverse(const TruncatedSeries& s)
{
    return reciprocal(TruncatedSeries::constant(Scalar::one(s.mode()), s.order()) - s);
}

bool series_agree(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.mode() == Mode::rational) return a == b;
    return approx_equal(a, b, 1e-10);
}

}  // namespace

NamedLaw::NamedLaw(Kind kind, std::vector<Scalar> cumulants, Mode mode)
    : kind_(kind), cumulants_(std::move(cumulants)), mode_(mode)
{
    for (const auto& c : cumulants_) {
        if (c.mode() != mode_) throw ModeMismatch("law cumulants of different modes");
    }
}

NamedLaw NamedLaw::semicircle(const Scalar& a)
{
    return NamedLaw(Kind::semicircle, {Scalar::zero(a.mode()), a}, a.mode());
}

NamedLaw NamedLaw::point_mass(const Scalar& b)
{
    return NamedLaw(Kind::point_mass, {b}, b.mode());
}

NamedLaw NamedLaw::custom(std::vector<Scalar> cumulants)
{
    const Mode mode = cumulants.empty() ? Mode::rational : cumulants.front().mode();
    return NamedLaw(Kind::custom, std::move(cumulants), mode);
}

Mode NamedLaw::mode() const
{
    return mode_;
}

TruncatedSeries NamedLaw::r_transform(std::size_t order) const
{
    std::vector<Scalar> coeffs(order + 1, Scalar::zero(mode_));
    for (std::size_t n = 0; n <= order && n < cumulants_.size(); ++n) coeffs[n] = cumulants_[n];
    return TruncatedSeries(std::move(coeffs));
}

SubordinateFamily solve_subordination(const DistributionArray& d, std::size_t order)
{
    const Mode mode = d.mode();
    const std::size_t n = order;
    std::vector<TruncatedSeries> r;
    for (Cell c : kAllCells) r.push_back(d.r_transform(c, n));

    SubordinateFamily fam;
    fam.m_star.assign(4, TruncatedSeries::constant(Scalar::one(mode), n));
    fam.h.assign(4, TruncatedSeries::zero(n, mode));
    if (n == 0) return fam;

    auto other = [](int j) { return 3 - j; };
    // Coefficient k of the next iterate uses only coefficients below k of
    // the current one, so n + 1 rounds reach the fixed point exactly.
    for (std::size_t round = 1; round <= n + 2; ++round) {
        for (Cell c : kAllCells) fam.h[c.index()] = subordinated(r[c.index()], fam.m_star[c.index()], n);
        std::vector<TruncatedSeries> next;
        for (Cell c : kAllCells) {
            const int j = c.col;
            const Cell first = c;
            const Cell second = c.diagonal() ? Cell{other(j), j} : Cell{c.col, c.row};
            next.push_back(one_minus_inverse(fam.h[first.index()] + fam.h[second.index()]));
        }
        bool stable = true;
        for (std::size_t k = 0; k < 4; ++k) stable = stable && next[k] == fam.m_star[k];
        fam.m_star = std::move(next);
        fam.rounds = round;
        if (stable) return fam;
    }
    throw std::logic_error("subordination iteration did not stabilize");
}

TruncatedSeries master_cauchy(const DistributionArray& d, std::size_t order)
{
    const auto fam = solve_subordination(d, order);
    if (order == 0) return TruncatedSeries::constant(Scalar::one(d.mode()), 0);
    return one_minus_inverse(fam.h[Cell{1, 1}.index()] + fam.h[Cell{2, 2}.index()]);
}

TruncatedSeries moments_from_r(const TruncatedSeries& r, std::size_t order)
{
    auto m = TruncatedSeries::constant(Scalar::one(r.mode()), order);
    if (order == 0) return m;
    for (std::size_t round = 0; round <= order + 1; ++round) {
        auto next = one_minus_inverse(subordinated(r, m, order));
        if (next == m) return m;
        m = std::move(next);
    }
    throw std::logic_error("moment iteration did not stabilize");
}

std::string_view to_string(ConvolutionKind kind)
{
    switch (kind) {
    case ConvolutionKind::free:
        return "free";
    case ConvolutionKind::monotone:
        return "monotone";
    case ConvolutionKind::boolean:
        return "boolean";
    case ConvolutionKind::s_free:
        return "s_free";
    case ConvolutionKind::orthogonal:
        return "orthogonal";
    }
    return "free";
}

ConvolutionKind parse_convolution_kind(std::string_view text)
{
    for (auto kind : {ConvolutionKind::free, ConvolutionKind::monotone, ConvolutionKind::boolean,
                      ConvolutionKind::s_free, ConvolutionKind::orthogonal}) {
        if (text == to_string(kind)) return kind;
    }
    if (text == "s-free") return ConvolutionKind::s_free;
    throw std::invalid_argument("unknown convolution kind '" + std::string(text) + "'");
}

Shape shape_for(ConvolutionKind kind)
{
    switch (kind) {
    case ConvolutionKind::free:
        return Shape::square();
    case ConvolutionKind::monotone:
        return Shape::lower_triangular();
    case ConvolutionKind::boolean:
        return Shape::diagonal();
    case ConvolutionKind::s_free:
        return Shape::upper_anti_triangular();
    case ConvolutionKind::orthogonal:
        return Shape::column();
    }
    return Shape::square();
}

DistributionArray convolution_array(const NamedLaw& mu1, const NamedLaw& mu2, ConvolutionKind kind)
{
    if (mu1.mode() != mu2.mode()) throw ModeMismatch("laws of different modes");
    DistributionArray d(shape_for(kind), mu1.mode());
    for (Cell c : d.shape().cells()) d.set(c, c.row == 1 ? mu1.cumulants() : mu2.cumulants());
    return d;
}

ConvolutionResult binary_convolution(const NamedLaw& mu1, const NamedLaw& mu2, ConvolutionKind kind,
                                     std::size_t order)
{
    if (order == 0) throw std::invalid_argument("binary_convolution needs order >= 1");
    auto array = convolution_array(mu1, mu2, kind);
    auto moments = master_cauchy(array, order);
    const auto r1 = mu1.r_transform(order);
    const auto r2 = mu2.r_transform(order);
    const std::size_t n = order;

    TruncatedSeries rhs = moments;
    switch (kind) {
    case ConvolutionKind::free:
        rhs = one_minus_inverse(subordinated(r1, moments, n) + subordinated(r2, moments, n));
        break;
    case ConvolutionKind::monotone:
        rhs = one_minus_inverse(subordinated(r1, moments, n) + subordinated(r2, moments_from_r(r2, n), n));
        break;
    case ConvolutionKind::boolean:
        rhs = one_minus_inverse(subordinated(r1, moments_from_r(r1, n), n) +
                                subordinated(r2, moments_from_r(r2, n), n));
        break;
    case ConvolutionKind::s_free: {
        const auto free = binary_convolution(mu1, mu2, ConvolutionKind::free, order).moments;
        rhs = one_minus_inverse(subordinated(r1, free, n));
        break;
    }
    case ConvolutionKind::orthogonal: {
        const auto mono = binary_convolution(mu1, mu2, ConvolutionKind::monotone, order).moments;
        rhs = one_minus_inverse(subordinated(r1, mono, n));
        break;
    }
    }
    const bool holds = series_agree(moments, rhs);
    return {std::move(array), std::move(moments), std::move(rhs), holds};
}

}  // namespace smfree
