#include "smfree/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

namespace smfree {

namespace {

using cplx = std::complex<double>;

/// Cauchy transform of the semicircle of variance v centred at m, on the
/// branch that behaves like 1/z at infinity. The product of two principal
/// roots keeps the cut on [m - 2 sqrt v, m + 2 sqrt v].
cplx shifted_semicircle(cplx z, double m, double v)
{
    if (v == 0.0) return 1.0 / (z - m);
    const double r = 2.0 * std::sqrt(v);
    const cplx s = std::sqrt(z - m - r) * std::sqrt(z - m + r);
    return ((z - m) - s) / (2.0 * v);
}

/// R(g) = sum r(n) g^(n-1) and its derivative.
std::pair<cplx, cplx> r_eval(const std::vector<double>& r, cplx g)
{
    cplx value = 0.0, deriv = 0.0;
    for (std::size_t n = r.size(); n-- > 0;) {
        deriv = deriv * g + value;
        value = value * g + r[n];
    }
    return {value, deriv};
}

/// Solves a x = b in place by Gaussian elimination with partial pivoting.
bool solve4(std::array<std::array<cplx, 4>, 4> a, std::array<cplx, 4>& b)
{
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < 4; ++row) {
            const cplx f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    for (std::size_t col = 4; col-- > 0;) {
        for (std::size_t k = col + 1; k < 4; ++k) b[col] -= a[col][k] * b[k];
        b[col] /= a[col][col];
    }
    return true;
}

}  // namespace

MeixnerArray::MeixnerArray(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d)
{
    if (!(a >= 0.0) || !(d >= 0.0)) throw std::invalid_argument("semicircle variances must be non-negative");
}

std::optional<MeixnerArray> MeixnerArray::from_array(const DistributionArray& arr)
{
    if (arr.mode() != Mode::floating) return std::nullopt;
    auto tail_zero = [&](Cell c, std::size_t from) {
        const auto& r = arr.cumulants(c);
        for (std::size_t n = from; n < r.size(); ++n) {
            if (!r[n].is_zero()) return false;
        }
        return true;
    };
    // Diagonal cells: r = (0, v); off-diagonal: r = (m).
    for (Cell c : {Cell{1, 1}, Cell{2, 2}}) {
        if (!arr.cumulant(c, 1).is_zero() || !tail_zero(c, 2) || arr.cumulant(c, 2).to_double() < 0.0) return std::nullopt;
    }
    for (Cell c : {Cell{1, 2}, Cell{2, 1}}) {
        if (!tail_zero(c, 1)) return std::nullopt;
    }
    return MeixnerArray(arr.cumulant({1, 1}, 2).to_double(), arr.cumulant({1, 2}, 1).to_double(),
                        arr.cumulant({2, 1}, 1).to_double(), arr.cumulant({2, 2}, 2).to_double());
}

cplx MeixnerArray::g11(cplx z) const
{
    return shifted_semicircle(z, c_, a_);
}

cplx MeixnerArray::g22(cplx z) const
{
    return shifted_semicircle(z, b_, d_);
}

cplx MeixnerArray::cauchy(cplx z) const
{
    return 1.0 / (z - a_ * g11(z) - d_ * g22(z));
}

cplx MeixnerArray::symmetric_closed_form(cplx z) const
{
    if (!symmetric()) throw std::logic_error("closed form needs a = d and b = c");
    const double r = 2.0 * std::sqrt(a_);
    const cplx s = std::sqrt(z - b_ - r) * std::sqrt(z - b_ + r);
    return (b_ - s) / (4.0 * a_ + 2.0 * b_ * z - z * z);
}

std::vector<Atom> MeixnerArray::symmetric_pole_residues() const
{
    if (!symmetric()) throw std::logic_error("closed form needs a = d and b = c");
    std::vector<Atom> out;
    const double root = std::sqrt(b_ * b_ + 4.0 * a_);
    const double r = 2.0 * std::sqrt(a_);
    for (double x0 : {b_ - root, b_ + root}) {
        // The real branch of the root off the cut, as in the closed form.
        const cplx s = std::sqrt(cplx(x0 - b_ - r, 0.0)) * std::sqrt(cplx(x0 - b_ + r, 0.0));
        out.push_back({x0, ((b_ - s) / (2.0 * b_ - 2.0 * x0)).real()});
    }
    return out;
}

double MeixnerArray::density(double x) const
{
    return std::max(0.0, -cauchy(cplx(x, 0.0)).imag() / std::numbers::pi);
}

std::vector<std::pair<double, double>> MeixnerArray::support() const
{
    std::vector<std::pair<double, double>> parts;
    if (a_ > 0.0) parts.emplace_back(c_ - 2.0 * std::sqrt(a_), c_ + 2.0 * std::sqrt(a_));
    if (d_ > 0.0) parts.emplace_back(b_ - 2.0 * std::sqrt(d_), b_ + 2.0 * std::sqrt(d_));
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& p : parts) {
        if (!merged.empty() && p.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, p.second);
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

double MeixnerArray::h(double x) const
{
    return x - (a_ * g11(cplx(x, 0.0))).real() - (d_ * g22(cplx(x, 0.0))).real();
}

double MeixnerArray::h_prime(double x) const
{
    // G*' = -G*^2 / (1 - v G*^2) for G* = 1/(z - m - v G*).
    auto deriv = [](cplx g, double v) { return -g * g / (1.0 - v * g * g); };
    const cplx x1(x, 0.0);
    return 1.0 - (a_ * deriv(g11(x1), a_)).real() - (d_ * deriv(g22(x1), d_)).real();
}

std::vector<Atom> MeixnerArray::atoms(double min_weight) const
{
    const auto supp = support();
    const double span = 4.0 + std::abs(b_) + std::abs(c_) + 2.0 * (std::sqrt(a_) + std::sqrt(d_)) + a_ + d_;
    double lo = -span, hi = span;
    for (const auto& s : supp) {
        lo = std::min(lo, s.first - span);
        hi = std::max(hi, s.second + span);
    }
    auto inside = [&](double x) {
        return std::any_of(supp.begin(), supp.end(),
                           [&](const auto& s) { return x >= s.first - 1e-12 && x <= s.second + 1e-12; });
    };

    std::vector<Atom> out;
    constexpr std::size_t kSteps = 20000;
    const double step = (hi - lo) / static_cast<double>(kSteps);
    double prev_x = lo;
    double prev_h = h(lo);
    for (std::size_t k = 1; k <= kSteps; ++k) {
        const double x = lo + step * static_cast<double>(k);
        if (inside(x) || inside(prev_x)) {
            prev_x = x;
            prev_h = inside(x) ? 0.0 : h(x);
            continue;
        }
        const double hx = h(x);
        if (hx == 0.0 || (prev_h < 0.0) != (hx < 0.0)) {
            double root = x;
            if (hx != 0.0 && prev_h != 0.0) {
                std::uintmax_t iters = 200;
                auto bracket = boost::math::tools::toms748_solve([this](double t) { return h(t); }, prev_x, x, prev_h, hx,
                                                                 boost::math::tools::eps_tolerance<double>(52), iters);
                root = 0.5 * (bracket.first + bracket.second);
            }
            const double w = 1.0 / h_prime(root);
            if (w > min_weight) out.push_back({root, w});
        }
        prev_x = x;
        prev_h = hx;
    }
    return out;
}

std::vector<double> MeixnerArray::moments(std::size_t max_k) const
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    std::vector<double> out(max_k + 1, 0.0);
    for (const auto& [lo, hi] : support()) {
        for (std::size_t k = 0; k <= max_k; ++k) {
            out[k] += integrator.integrate(
                [&](double x) { return std::pow(x, static_cast<double>(k)) * density(x); }, lo, hi);
        }
    }
    for (const auto& atom : atoms()) {
        for (std::size_t k = 0; k <= max_k; ++k) out[k] += atom.weight * std::pow(atom.location, static_cast<double>(k));
    }
    return out;
}

std::complex<double> array_cauchy(const DistributionArray& d, std::complex<double> z)
{
    if (d.mode() != Mode::floating) throw std::invalid_argument("array_cauchy needs a floating-mode array");
    if (!(z.imag() > 0.0)) throw std::invalid_argument("array_cauchy needs Im z > 0");

    std::array<std::vector<double>, 4> r;
    double scale = 1.0;
    for (Cell c : kAllCells) {
        for (const auto& x : d.cumulants(c)) {
            r[c.index()].push_back(x.to_double());
            scale += std::abs(x.to_double());
        }
    }
    // Partner of each cell in its subordination equation.
    auto partner = [](Cell c) { return c.diagonal() ? Cell{3 - c.col, c.col} : Cell{c.col, c.row}; };

    std::array<cplx, 4> g{};
    auto newton = [&](cplx w) {
        for (int it = 0; it < 100; ++it) {
            // F_c = g_c (w - R_c(g_c) - R_p(g_p)) - 1
            std::array<std::array<cplx, 4>, 4> jac{};
            std::array<cplx, 4> f{};
            for (Cell c : kAllCells) {
                const Cell p = partner(c);
                const auto [rc, drc] = r_eval(r[c.index()], g[c.index()]);
                const auto [rp, drp] = r_eval(r[p.index()], g[p.index()]);
                const cplx denom = w - rc - rp;
                f[c.index()] = -(g[c.index()] * denom - 1.0);
                jac[c.index()][c.index()] = denom - g[c.index()] * drc;
                jac[c.index()][p.index()] += -g[c.index()] * drp;
            }
            if (!solve4(jac, f)) return;
            double size = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                g[k] += f[k];
                size = std::max(size, std::abs(f[k]));
            }
            if (size < 1e-15) return;
        }
    };

    const double top = 20.0 * scale + z.imag();
    for (auto& x : g) x = 1.0 / cplx(z.real(), top);
    constexpr int kSteps = 400;
    for (int s = 0; s <= kSteps; ++s) {
        const double t = static_cast<double>(s) / kSteps;
        const double im = top * std::pow(z.imag() / top, t);
        newton(cplx(z.real(), im));
    }
    const auto [r11, d11] = r_eval(r[0], g[0]);
    const auto [r22, d22] = r_eval(r[3], g[3]);
    (void)d11;
    (void)d22;
    return 1.0 / (z - r11 - r22);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points)
{
    if (points == 0) return {};
    if (points == 1) return {lo};
    std::vector<double> out(points);
    for (std::size_t k = 0; k < points; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return out;
}

std::vector<DensitySample> stieltjes_density(const std::function<std::complex<double>(std::complex<double>)>& g,
                                             const std::vector<double>& grid, double eps)
{
    if (!(eps > 0.0)) throw std::invalid_argument("density needs eps > 0");
    std::vector<DensitySample> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back({x, -g(cplx(x, eps)).imag() / std::numbers::pi});
    return out;
}

DensityResult stieltjes_density(const DistributionArray& d, const std::vector<double>& grid, double eps)
{
    if (d.mode() != Mode::floating) throw std::invalid_argument("density needs floating precision");
    if (!(eps > 0.0)) throw std::invalid_argument("density needs eps > 0");
    DensityResult out;
    if (auto meixner = MeixnerArray::from_array(d)) {
        out.samples = stieltjes_density([&](cplx z) { return meixner->cauchy(z); }, grid, eps);
        out.atoms = meixner->atoms();
        out.closed_form = true;
    } else {
        out.samples = stieltjes_density([&](cplx z) { return array_cauchy(d, z); }, grid, eps);
    }
    return out;
}

}  // namespace smfree
