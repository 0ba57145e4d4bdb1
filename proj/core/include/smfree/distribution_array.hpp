#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "smfree/nc_partitions.hpp"
#include "smfree/scalar.hpp"
#include "smfree/series.hpp"

namespace smfree {

/// A 2x2 array of distributions given by free cumulants r_{i,j}(1..p) on the
/// cells of a shape J. Sequences are finitely supported: r(n) = 0 past the
/// stored length, and every cell outside J is identically zero.
class DistributionArray {
public:
    DistributionArray(Shape shape, Mode mode);

    /// r[0] = r(1). The cell must lie in the shape.
    void set(Cell cell, std::vector<Scalar> cumulants);

    /// Row i of the array gets `row1` or `row2` on every cell of the shape in
    /// that row. On a square shape this is the array whose convolution is the
    /// free convolution of the two rows.
    static DistributionArray row_identical(const Shape& shape, const std::vector<Scalar>& row1,
                                           const std::vector<Scalar>& row2);

    const Shape& shape() const noexcept { return shape_; }
    Mode mode() const noexcept { return mode_; }

    /// r_{cell}(n) for n >= 1; zero outside the shape or the stored range.
    Scalar cumulant(Cell cell, std::size_t n) const;
    const std::vector<Scalar>& cumulants(Cell cell) const { return r_[cell.index()]; }
    /// Longest stored sequence.
    std::size_t cumulant_order() const;
    bool all_zero() const;

    /// R_{cell}(z) = sum r(n) z^(n-1), known to z^order.
    TruncatedSeries r_transform(Cell cell, std::size_t order) const;

private:
    Shape shape_;
    Mode mode_;
    std::array<std::vector<Scalar>, 4> r_;
};

}  // namespace smfree
