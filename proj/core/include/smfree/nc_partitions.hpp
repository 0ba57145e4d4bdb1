#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smfree {

/// Position (row, col) in a 2x2 array, 1-based.
struct Cell {
    int row = 1;
    int col = 1;

    constexpr std::size_t index() const { return static_cast<std::size_t>((row - 1) * 2 + (col - 1)); }
    constexpr bool diagonal() const { return row == col; }
    static constexpr Cell from_index(std::size_t i) { return {static_cast<int>(i / 2) + 1, static_cast<int>(i % 2) + 1}; }

    /// "i,j"
    std::string to_string() const;
    /// Accepts "i,j" or "ij" with i, j in {1, 2}.
    static Cell parse(std::string_view text);

    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr auto operator<=>(Cell a, Cell b) { return a.index() <=> b.index(); }
};

inline constexpr std::array<Cell, 4> kAllCells{Cell{1, 1}, Cell{1, 2}, Cell{2, 1}, Cell{2, 2}};

/// The set J of occupied cells.
class Shape {
public:
    Shape() = default;

    static Shape square();
    static Shape diagonal();
    /// {(1,1), (2,1), (2,2)}
    static Shape lower_triangular();
    /// {(1,1), (1,2), (2,1)}
    static Shape upper_anti_triangular();
    /// {(1,1), (2,1)}
    static Shape column();
    static Shape custom(const std::vector<Cell>& cells);
    /// One of the names above, or "custom" (which then needs explicit cells).
    static Shape named(std::string_view name);

    bool contains(Cell c) const { return bits_.test(c.index()); }
    std::vector<Cell> cells() const;
    bool empty() const { return bits_.none(); }
    /// Name of the matching preset, or "custom".
    std::string name() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::bitset<4> bits_;
};

/// A non-crossing partition of {1..m}. Blocks are numbered by increasing
/// minimum, which makes the representation canonical.
class NCPartition {
public:
    /// Validates coverage and non-crossing; block and element order do not matter.
    NCPartition(std::size_t m, const std::vector<std::vector<int>>& blocks);

    std::size_t size() const noexcept { return m_; }
    std::size_t block_count() const noexcept { return sizes_.size(); }
    /// Block index of point p (1-based).
    std::size_t block_of(int p) const { return block_of_.at(static_cast<std::size_t>(p - 1)); }
    std::size_t block_size(std::size_t b) const { return sizes_.at(b); }
    std::vector<int> block(std::size_t b) const;
    std::vector<std::vector<int>> blocks() const;
    /// Innermost block enclosing b, or nullopt for a covering block.
    std::optional<std::size_t> nearest_outer(std::size_t b) const;

    friend bool operator==(const NCPartition&, const NCPartition&) = default;

private:
    NCPartition() = default;
    void finish();
    friend std::vector<NCPartition> build_nc(std::size_t m);

    std::size_t m_ = 0;
    std::vector<std::uint8_t> block_of_;
    std::vector<std::uint8_t> sizes_;
    std::vector<std::int8_t> parent_;
};

inline constexpr std::size_t kMaxPartitionSize = 14;

/// All non-crossing partitions of {1..m}, 1 <= m <= 14. Cached per m and
/// safe to call concurrently.
const std::vector<NCPartition>& enumerate_nc(std::size_t m);

/// A partition together with block colours in {1, 2} and the induced labels.
struct ColoredNCPartition {
    NCPartition partition;
    std::vector<int> colors;
    std::vector<Cell> labels;
};

/// Labels each block: a covering block of colour c gets (c, c); a block of
/// the same colour as its nearest outer block inherits that block's label;
/// otherwise it gets (own colour, outer colour). Rejects when a label falls
/// outside `shape`.
std::optional<ColoredNCPartition> label_and_admit(const NCPartition& p, const std::vector<int>& colors,
                                                  const Shape& shape);

/// Every admitted (partition, colouring) pair for m points.
std::vector<ColoredNCPartition> enumerate_admissible(std::size_t m, const Shape& shape);

}  // namespace smfree
