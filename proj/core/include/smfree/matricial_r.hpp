#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "smfree/distribution_array.hpp"
#include "smfree/fock.hpp"
#include "smfree/series.hpp"
#include "smfree/unit_element.hpp"

namespace smfree {

/// Power series with coefficients in the unit algebra, held as one scalar
/// series per q-projection.
class UnitSeries {
public:
    /// Components in q order (1,1), (1,2), (2,1), (2,2); orders are cut to
    /// the smallest.
    explicit UnitSeries(std::vector<TruncatedSeries> components);

    static UnitSeries zero(std::size_t order, Mode mode);
    /// s times the identity.
    static UnitSeries scalar(const TruncatedSeries& s);

    std::size_t order() const { return components_.front().order(); }
    Mode mode() const { return components_.front().mode(); }
    const TruncatedSeries& component(Cell q) const { return components_[q.index()]; }
    UnitElement coefficient(std::size_t n) const;
    UnitSeries truncated(std::size_t order) const;

    friend bool operator==(const UnitSeries& a, const UnitSeries& b) { return a.components_ == b.components_; }

private:
    std::vector<TruncatedSeries> components_;
};

/// sum over the shape of R_{i,j}(z) 1_{i,j}, known to z^order.
UnitSeries assemble_matricial_r(const DistributionArray& d, std::size_t order);

/// Coefficients b_0..b_order of the inverse of 1/z + R, componentwise.
UnitSeries invert_c(const UnitSeries& r, std::size_t order);

/// Inverse of invert_c: the regular part from b_0..b_N, known to N - 1.
UnitSeries regular_part_from_inverse(const UnitSeries& b);

/// S_m = sum over k and n_1 + ... + n_k = m - k of
///       phi(b_{n_1} A b_{n_2} A ... A b_{n_k}),  m = 1..m_max.
/// The linearization property holds iff S = (1, 0, 0, ...).
std::vector<Scalar> linearization_residuals(const FockModel& model, const UnitSeries& b, std::size_t m_max);

/// The same sums with A replaced by the compression P A P to cell (i,j) and
/// the vacuum replaced by e_{i,i}, for every cell of the shape.
std::map<Cell, std::vector<Scalar>> compressed_linearization_residuals(const FockModel& model, const UnitSeries& b,
                                                                      std::size_t m_max);

/// Rebuilds the matricial R-transform to z^order from moments of the model
/// alone: the vacuum and the two compressed conjugate recursions fix the
/// q_{1,1}, q_{2,1}, q_{1,2} parts of each b_n, and the q_{2,2} part follows
/// from Q_{2,2} = Q_{2,1} + Q_{1,2} - Q_{1,1}. Needs depth >= order + 2.
UnitSeries reconstruct_unique(const FockModel& model, std::size_t order);

}  // namespace smfree
