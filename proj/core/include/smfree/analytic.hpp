#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smfree/distribution_array.hpp"
#include "smfree/series.hpp"

namespace smfree {

/// A law given by its free cumulants.
class NamedLaw {
public:
    enum class Kind { semicircle, point_mass, custom };

    /// Centred semicircle of variance a: R(z) = a z.
    static NamedLaw semicircle(const Scalar& a);
    /// Dirac mass at b: R(z) = b.
    static NamedLaw point_mass(const Scalar& b);
    /// r(1), r(2), ...
    static NamedLaw custom(std::vector<Scalar> cumulants);

    Kind kind() const noexcept { return kind_; }
    Mode mode() const;
    /// r(1..p), finitely supported.
    const std::vector<Scalar>& cumulants() const noexcept { return cumulants_; }
    TruncatedSeries r_transform(std::size_t order) const;

private:
    NamedLaw(Kind kind, std::vector<Scalar> cumulants, Mode mode);
    Kind kind_;
    std::vector<Scalar> cumulants_;
    Mode mode_;
};

/// Subordinate transforms of an array in moment-series form. With w = 1/z,
///   m_star[c](w) = z G*_{c}(z)   and   h[c](w) = w K_{c}(z),
/// where K_{c} = R_{c} o G*_{c}. Indexed by Cell::index().
struct SubordinateFamily {
    std::vector<TruncatedSeries> m_star;
    std::vector<TruncatedSeries> h;
    /// Rounds until the coefficient-triangular iteration stopped changing.
    std::size_t rounds = 0;
};

/// Solves G*_{j,j} = 1/(z - K_{j,j} - K_{j',j}) and
/// G*_{j,j'} = 1/(z - K_{j,j'} - K_{j',j}) (j' the other index) to z^order
/// in the moment variable.
SubordinateFamily solve_subordination(const DistributionArray& d, std::size_t order);

/// Moments M(0..order) of the convolution of the array from
/// G = 1/(z - sum_j K_{j,j}).
TruncatedSeries master_cauchy(const DistributionArray& d, std::size_t order);

/// Moments of the single law with R-transform r, from M = 1/(1 - w R(w M)).
TruncatedSeries moments_from_r(const TruncatedSeries& r, std::size_t order);

enum class ConvolutionKind { free, monotone, boolean, s_free, orthogonal };

std::string_view to_string(ConvolutionKind kind);
ConvolutionKind parse_convolution_kind(std::string_view text);

/// Shape realizing the kind: square, lower triangular, diagonal, upper
/// anti-triangular, column.
Shape shape_for(ConvolutionKind kind);

/// The array realizing the kind, row-identical where the kind needs it.
DistributionArray convolution_array(const NamedLaw& mu1, const NamedLaw& mu2, ConvolutionKind kind);

struct ConvolutionResult {
    DistributionArray array;
    TruncatedSeries moments;
    /// The kind's own fixed-point equation evaluated at `moments`.
    TruncatedSeries closed_form;
    bool closed_form_holds = false;
};

/// Moments of the binary convolution through master_cauchy, checked
/// against the kind's fixed-point equation in the moment variable:
///   free        M = 1/(1 - wR1(wM) - wR2(wM))
///   monotone    M = 1/(1 - wR1(wM) - wR2(wM2))
///   boolean     M = 1/(1 - wR1(wM1) - wR2(wM2))
///   s-free      M = 1/(1 - wR1(w M_free))
///   orthogonal  M = 1/(1 - wR1(w M_monotone))
/// where M_free and M_monotone come from the free and monotone kinds.
ConvolutionResult binary_convolution(const NamedLaw& mu1, const NamedLaw& mu2, ConvolutionKind kind,
                                     std::size_t order);

}  // namespace smfree
