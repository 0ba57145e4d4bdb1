#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smfree/distribution_array.hpp"
#include "smfree/nc_partitions.hpp"
#include "smfree/series.hpp"
#include "smfree/unit_element.hpp"

namespace smfree {

/// A word of letters (i,j); the first letter is the outermost tensor factor
/// and the empty word is the vacuum.
using FockWord = std::vector<Cell>;

/// "(i,j)(i,j)..." or "Omega".
std::string to_string(const FockWord& w);

/// Whether w is a basis word: the last letter is diagonal, a diagonal letter
/// is only followed by itself, and (a,b)(c,d) with distinct letters needs
/// a != b and c = b.
bool valid_word(const FockWord& w);

/// Sparse vector over the word basis.
using FockVector = std::map<std::size_t, Scalar>;

/// Raised when a product could reach words longer than the model holds.
class DepthExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear operator on the truncated space, stored as sparse columns.
class FockOperator {
public:
    FockOperator() = default;
    explicit FockOperator(std::size_t dimension) : columns_(dimension) {}

    std::size_t dimension() const noexcept { return columns_.size(); }
    void add(std::size_t row, std::size_t col, const Scalar& value);
    const std::vector<std::pair<std::size_t, Scalar>>& column(std::size_t col) const { return columns_.at(col); }

    FockVector apply(const FockVector& v) const;
    /// this * rhs
    FockOperator compose(const FockOperator& rhs) const;
    FockOperator& operator+=(const FockOperator& rhs);
    FockOperator& operator*=(const Scalar& c);

    /// Entry (row, col), zero when absent.
    Scalar entry(std::size_t row, std::size_t col, Mode mode) const;
    /// Exact equality of all entries restricted to the given columns.
    bool equals_on(const FockOperator& rhs, const std::vector<std::size_t>& cols, Mode mode) const;

private:
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns_;
};

/// A factor in a product evaluated by a state.
struct Factor {
    enum class Kind : std::uint8_t { sum, toeplitz, compressed, creation, annihilation, unit };
    Kind kind = Kind::sum;
    Cell cell{};
    UnitElement element;

    static Factor A() { return {Kind::sum, {}, UnitElement()}; }
    static Factor a(Cell c) { return {Kind::toeplitz, c, UnitElement()}; }
    static Factor compressed_sum(Cell c) { return {Kind::compressed, c, UnitElement()}; }
    static Factor creation(Cell c) { return {Kind::creation, c, UnitElement()}; }
    static Factor annihilation(Cell c) { return {Kind::annihilation, c, UnitElement()}; }
    static Factor u(UnitElement e) { return {Kind::unit, {}, std::move(e)}; }

    /// How far the factor can lengthen a word.
    std::size_t creation_degree() const { return kind == Kind::annihilation || kind == Kind::unit ? 0 : 1; }
};

enum class State : std::uint8_t { phi, phi1, phi2 };

/// Truncated Fock space with one-dimensional cells, the creation and
/// annihilation operators of each cell in the shape, the Toeplitz operators
///   a_{i,j} = l_{i,j} + sum_k s(k) (l*_{i,j})^(k-1),  (l*)^0 = 1_{i,j},
/// with s(k) alpha^(2(k-1)) = r_{i,j}(k), and their sum A.
class FockModel {
public:
    /// alphas default to 1 on every cell; they must be positive.
    static FockModel build(const DistributionArray& d, std::size_t depth,
                           std::optional<std::array<Scalar, 4>> alphas = std::nullopt);

    const Shape& shape() const noexcept { return shape_; }
    Mode mode() const noexcept { return mode_; }
    std::size_t depth() const noexcept { return depth_; }
    std::size_t dimension() const noexcept { return words_.size(); }
    const FockWord& word(std::size_t id) const { return words_.at(id); }
    std::optional<std::size_t> find(const FockWord& w) const;
    const Scalar& alpha(Cell c) const { return alpha_[c.index()]; }

    const FockOperator& creation(Cell c) const;
    const FockOperator& annihilation(Cell c) const;
    const FockOperator& toeplitz(Cell c) const;
    const FockOperator& sum() const { return sum_; }
    /// P A P with P = UnitElement::compression(c).
    const FockOperator& compressed(Cell c) const;
    /// Diagonal operator of a unit element.
    FockOperator unit_operator(const UnitElement& u) const;
    /// The internal unit built directly from its range: vacuum plus words
    /// starting (j,j) on the diagonal, the complement of 1_{i,i} off it.
    FockOperator direct_unit(Cell c) const;

    FockVector basis_vector(const FockWord& w) const;
    FockVector vacuum() const { return basis_vector({}); }
    /// Omega, e_{1,1}, e_{2,2}.
    FockVector state_vector(State s) const;
    /// Vector of the cell state: Omega on the diagonal, e_{j,j} for (i,j), i != j.
    FockVector cell_state_vector(Cell c) const;
    /// Vector paired with the compression to cell (i,j): e_{i,i}.
    FockVector compression_state_vector(Cell c) const;

    FockVector apply(const Factor& f, const FockVector& v) const;
    /// <x_1 ... x_n v, v> for a basis vector v; x_n acts first.
    Scalar moment(const FockVector& v, std::span<const Factor> factors) const;
    Scalar state_moment(State s, std::span<const Factor> factors) const;

    /// One basis word per line; with operators, also the action of A and
    /// every creation operator.
    void dump(std::ostream& os, bool with_operators = false) const;

private:
    FockModel() = default;
    std::size_t length_of(const FockVector& v) const;

    Shape shape_;
    Mode mode_ = Mode::rational;
    std::size_t depth_ = 0;
    std::vector<FockWord> words_;
    std::map<std::vector<std::uint8_t>, std::size_t> index_;
    std::array<Scalar, 4> alpha_;
    std::array<FockOperator, 4> creation_, annihilation_, toeplitz_, compressed_;
    FockOperator sum_;
};

/// phi(A^n) for n = 0..m, applying A to the vacuum once per order.
/// Throws DepthExceeded when m exceeds the depth.
TruncatedSeries fock_moments(const FockModel& model, std::size_t m);

/// R-transform of cell c recovered from the moments of a_{c} in its cell
/// state; known to order - 1 (r(1..order)).
TruncatedSeries single_cell_r(const FockModel& model, Cell c, std::size_t order);

struct AxiomReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Unit normalizations, l* l = alpha^2 1 below the truncation boundary,
/// q-projection and unit identities, factorization through units, and
/// `trials` random alternating products of centred elements.
AxiomReport axiom_check(const FockModel& model, std::size_t trials, std::uint64_t seed = 1);

}  // namespace smfree
