#include "smfree/unit_element.hpp"

#include <algorithm>

namespace smfree {

UnitElement::UnitElement(Mode mode)
    : beta_{Scalar::zero(mode), Scalar::zero(mode), Scalar::zero(mode), Scalar::zero(mode)}
{
}

UnitElement::UnitElement(Scalar q11, Scalar q12, Scalar q21, Scalar q22)
    : beta_{std::move(q11), std::move(q12), std::move(q21), std::move(q22)}
{
    for (const auto& b : beta_) {
        if (b.mode() != beta_[0].mode()) throw ModeMismatch("unit element coefficients of different modes");
    }
}

UnitElement UnitElement::identity(Mode mode)
{
    const auto one = Scalar::one(mode);
    return {one, one, one, one};
}

UnitElement UnitElement::q(Cell cell, Mode mode)
{
    UnitElement u(mode);
    u[cell] = Scalar::one(mode);
    return u;
}

UnitElement UnitElement::unit(Cell cell, Mode mode)
{
    // 1_{j,j} projects onto the vacuum and words starting (j,j); 1_{i,j} off
    // the diagonal is the complement of 1_{i,i}.
    if (cell == Cell{1, 1}) return q({1, 1}, mode) + q({2, 1}, mode);
    if (cell == Cell{2, 2}) return q({1, 1}, mode) + q({1, 2}, mode);
    if (cell == Cell{1, 2}) return q({1, 2}, mode) + q({2, 2}, mode);
    return q({2, 1}, mode) + q({2, 2}, mode);
}

UnitElement UnitElement::compression(Cell cell, Mode mode)
{
    const auto one = identity(mode);
    if (cell.diagonal()) return one - unit({1, 1}, mode) * unit({2, 2}, mode);
    return one - unit({cell.col, cell.col}, mode);
}

bool UnitElement::is_projection() const
{
    return std::all_of(beta_.begin(), beta_.end(), [](const Scalar& b) { return b * b == b; });
}

UnitElement& UnitElement::operator+=(const UnitElement& rhs)
{
    for (std::size_t k = 0; k < 4; ++k) beta_[k] += rhs.beta_[k];
    return *this;
}

UnitElement& UnitElement::operator-=(const UnitElement& rhs)
{
    for (std::size_t k = 0; k < 4; ++k) beta_[k] -= rhs.beta_[k];
    return *this;
}

UnitElement& UnitElement::operator*=(const UnitElement& rhs)
{
    for (std::size_t k = 0; k < 4; ++k) beta_[k] *= rhs.beta_[k];
    return *this;
}

UnitElement& UnitElement::operator*=(const Scalar& c)
{
    for (auto& b : beta_) b *= c;
    return *this;
}

std::string UnitElement::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) out += " + ";
        out += beta_[k].to_string() + "*q" + std::to_string(Cell::from_index(k).row) +
               std::to_string(Cell::from_index(k).col);
    }
    return out;
}

}  // namespace smfree
