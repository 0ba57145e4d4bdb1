#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "smfree/distribution_array.hpp"

namespace smfree {

struct DensitySample {
    double x = 0.0;
    double density = 0.0;
};

struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

/// Square array with semicircle diagonal cells and point-mass off-diagonal
/// cells: R_{1,1} = a z, R_{1,2} = b, R_{2,1} = c, R_{2,2} = d z, a, d >= 0.
/// The diagonal subordinate transforms are shifted semicircles,
///   G*_{1,1} = 1/(z - c - a G*_{1,1}),  G*_{2,2} = 1/(z - b - d G*_{2,2}),
/// and G = 1/(z - a G*_{1,1} - d G*_{2,2}).
class MeixnerArray {
public:
    MeixnerArray(double a, double b, double c, double d);

    /// Recognizes arrays of this form (cells may be absent); floating mode only.
    static std::optional<MeixnerArray> from_array(const DistributionArray& d);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    std::complex<double> g11(std::complex<double> z) const;
    std::complex<double> g22(std::complex<double> z) const;
    std::complex<double> cauchy(std::complex<double> z) const;

    /// For a = d, b = c: G = (b - sqrt((b - z)^2 - 4a)) / (4a + 2bz - z^2).
    bool symmetric() const { return a_ == d_ && b_ == c_; }
    std::complex<double> symmetric_closed_form(std::complex<double> z) const;
    /// Both roots of 4a + 2bz - z^2 with the residues of the closed form there.
    std::vector<Atom> symmetric_pole_residues() const;

    /// Density on the real line, -Im G(x + i0) / pi.
    double density(double x) const;
    /// Closed intervals carrying the continuous part, merged and sorted.
    std::vector<std::pair<double, double>> support() const;
    /// Real poles of G outside the support with weight above min_weight.
    std::vector<Atom> atoms(double min_weight = 1e-12) const;

    /// Integral of x^k against the measure for k = 0..max_k, by tanh-sinh
    /// quadrature over the support plus the atoms.
    std::vector<double> moments(std::size_t max_k) const;

private:
    double h(double x) const;
    double h_prime(double x) const;

    double a_, b_, c_, d_;
};

/// G of the convolution of a floating-mode array at a point of the upper
/// half-plane, by Newton continuation of the subordination system from
/// far above the real axis.
std::complex<double> array_cauchy(const DistributionArray& d, std::complex<double> z);

/// `points` equally spaced values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// -Im G(x + i eps) / pi on the grid; eps must be positive.
std::vector<DensitySample> stieltjes_density(const std::function<std::complex<double>(std::complex<double>)>& g,
                                             const std::vector<double>& grid, double eps);

struct DensityResult {
    std::vector<DensitySample> samples;
    std::vector<Atom> atoms;
    /// True when the closed form (and hence atom detection) was used.
    bool closed_form = false;
};

/// Density of the convolution of a floating-mode array on the grid. Arrays
/// of Meixner form use the closed form and report atoms; others use
/// array_cauchy and report none.
DensityResult stieltjes_density(const DistributionArray& d, const std::vector<double>& grid, double eps);

}  // namespace smfree
