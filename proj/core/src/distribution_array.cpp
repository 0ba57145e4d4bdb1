#include "smfree/distribution_array.hpp"

#include <algorithm>
#include <stdexcept>

namespace smfree {

DistributionArray::DistributionArray(Shape shape, Mode mode) : shape_(shape), mode_(mode) {}

void DistributionArray::set(Cell cell, std::vector<Scalar> cumulants)
{
    if (!shape_.contains(cell)) throw std::invalid_argument("cell " + cell.to_string() + " is not in the shape");
    for (const auto& c : cumulants) {
        if (c.mode() != mode_) throw ModeMismatch("cumulant of cell " + cell.to_string() + " has the wrong mode");
    }
    r_[cell.index()] = std::move(cumulants);
}

DistributionArray DistributionArray::row_identical(const Shape& shape, const std::vector<Scalar>& row1,
                                                   const std::vector<Scalar>& row2)
{
    const Mode mode = !row1.empty() ? row1.front().mode() : !row2.empty() ? row2.front().mode() : Mode::rational;
    DistributionArray d(shape, mode);
    for (Cell c : shape.cells()) d.set(c, c.row == 1 ? row1 : row2);
    return d;
}

Scalar DistributionArray::cumulant(Cell cell, std::size_t n) const
{
    const auto& r = r_[cell.index()];
    if (n == 0 || n > r.size()) return Scalar::zero(mode_);
    return r[n - 1];
}

std::size_t DistributionArray::cumulant_order() const
{
    std::size_t p = 0;
    for (const auto& r : r_) p = std::max(p, r.size());
    return p;
}

bool DistributionArray::all_zero() const
{
    return std::all_of(r_.begin(), r_.end(), [](const auto& r) {
        return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
    });
}

TruncatedSeries DistributionArray::r_transform(Cell cell, std::size_t order) const
{
    std::vector<Scalar> coeffs;
    coeffs.reserve(order + 1);
    for (std::size_t n = 1; n <= order + 1; ++n) coeffs.push_back(cumulant(cell, n));
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace smfree
