#pragma once

#include <array>
#include <string>

#include "smfree/nc_partitions.hpp"
#include "smfree/scalar.hpp"

namespace smfree {

/// Element of the commutative algebra generated by the internal units,
/// written as sum beta_{i,j} q_{i,j} over the orthogonal projections
///   q_{1,1}: vacuum, q_{1,2}: words starting (2,2),
///   q_{2,1}: words starting (1,1), q_{2,2}: words starting off-diagonal.
/// Sums and products are componentwise.
class UnitElement {
public:
    explicit UnitElement(Mode mode = Mode::rational);
    UnitElement(Scalar q11, Scalar q12, Scalar q21, Scalar q22);

    static UnitElement zero(Mode mode) { return UnitElement(mode); }
    static UnitElement identity(Mode mode);
    /// The projection q_{i,j}.
    static UnitElement q(Cell cell, Mode mode);
    /// The internal unit 1_{i,j}.
    static UnitElement unit(Cell cell, Mode mode);
    /// Projection used to compress the sum to cell (i,j): 1 - 1_{1,1}1_{2,2}
    /// on the diagonal, 1 - 1_{j,j} off it.
    static UnitElement compression(Cell cell, Mode mode);

    Mode mode() const { return beta_[0].mode(); }
    /// Coefficient of q_{cell}.
    const Scalar& operator[](Cell cell) const { return beta_[cell.index()]; }
    Scalar& operator[](Cell cell) { return beta_[cell.index()]; }

    bool is_projection() const;

    UnitElement& operator+=(const UnitElement& rhs);
    UnitElement& operator-=(const UnitElement& rhs);
    UnitElement& operator*=(const UnitElement& rhs);
    UnitElement& operator*=(const Scalar& c);
    friend UnitElement operator+(UnitElement a, const UnitElement& b) { return a += b; }
    friend UnitElement operator-(UnitElement a, const UnitElement& b) { return a -= b; }
    friend UnitElement operator*(UnitElement a, const UnitElement& b) { return a *= b; }
    friend UnitElement operator*(UnitElement a, const Scalar& c) { return a *= c; }
    friend UnitElement operator*(const Scalar& c, UnitElement a) { return a *= c; }
    friend bool operator==(const UnitElement& a, const UnitElement& b) { return a.beta_ == b.beta_; }

    /// Values of the vacuum state and the two conjugate states:
    /// phi -> beta_{1,1}, phi_1 -> beta_{2,1}, phi_2 -> beta_{1,2}.
    const Scalar& phi() const { return beta_[0]; }
    const Scalar& phi1() const { return beta_[2]; }
    const Scalar& phi2() const { return beta_[1]; }

    std::string to_string() const;

private:
    std::array<Scalar, 4> beta_;
};

}  // namespace smfree
