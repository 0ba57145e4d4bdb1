#include "smfree/nc_partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace smfree {

std::string Cell::to_string() const
{
    return std::to_string(row) + "," + std::to_string(col);
}

Cell Cell::parse(std::string_view text)
{
    std::string digits;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')') continue;
        digits.push_back(c);
    }
    if (digits.size() != 2 || (digits[0] != '1' && digits[0] != '2') || (digits[1] != '1' && digits[1] != '2')) {
        throw std::invalid_argument("bad cell '" + std::string(text) + "', expected \"i,j\" with i, j in {1,2}");
    }
    return Cell{digits[0] - '0', digits[1] - '0'};
}

Shape Shape::square()
{
    return custom({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

Shape Shape::diagonal()
{
    return custom({{1, 1}, {2, 2}});
}

Shape Shape::lower_triangular()
{
    return custom({{1, 1}, {2, 1}, {2, 2}});
}

Shape Shape::upper_anti_triangular()
{
    return custom({{1, 1}, {1, 2}, {2, 1}});
}

Shape Shape::column()
{
    return custom({{1, 1}, {2, 1}});
}

Shape Shape::custom(const std::vector<Cell>& cells)
{
    Shape s;
    for (Cell c : cells) {
        if (c.row < 1 || c.row > 2 || c.col < 1 || c.col > 2) throw std::invalid_argument("cell out of the 2x2 array");
        s.bits_.set(c.index());
    }
    return s;
}

Shape Shape::named(std::string_view name)
{
    if (name == "square") return square();
    if (name == "diagonal") return diagonal();
    if (name == "lower_triangular") return lower_triangular();
    if (name == "upper_anti_triangular") return upper_anti_triangular();
    if (name == "column") return column();
    throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

std::vector<Cell> Shape::cells() const
{
    std::vector<Cell> out;
    for (Cell c : kAllCells) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

std::string Shape::name() const
{
    for (const char* n : {"square", "diagonal", "lower_triangular", "upper_anti_triangular", "column"}) {
        if (named(n) == *this) return n;
    }
    return "custom";
}

NCPartition::NCPartition(std::size_t m, const std::vector<std::vector<int>>& blocks) : m_(m)
{
    if (m == 0 || m > 120) throw std::invalid_argument("partition size out of range");
    std::vector<int> owner(m, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int p : blocks[b]) {
            if (p < 1 || static_cast<std::size_t>(p) > m) throw std::invalid_argument("point outside {1..m}");
            if (owner[static_cast<std::size_t>(p - 1)] != -1) throw std::invalid_argument("point in two blocks");
            owner[static_cast<std::size_t>(p - 1)] = static_cast<int>(b);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) throw std::invalid_argument("blocks do not cover {1..m}");

    // Renumber blocks by first appearance, i.e. by minimum.
    std::vector<int> renum(blocks.size(), -1);
    int next = 0;
    block_of_.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
        auto& r = renum[static_cast<std::size_t>(owner[p])];
        if (r == -1) r = next++;
        block_of_[p] = static_cast<std::uint8_t>(r);
    }

    // a < b < c < d with a, c in one block and b, d in another.
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (block_of_[b] == block_of_[a]) continue;
            for (std::size_t c = b + 1; c < m; ++c) {
                if (block_of_[c] != block_of_[a]) continue;
                for (std::size_t d = c + 1; d < m; ++d) {
                    if (block_of_[d] == block_of_[b]) throw std::invalid_argument("blocks cross");
                }
            }
        }
    }
    finish();
}

void NCPartition::finish()
{
    std::size_t k = 0;
    for (auto b : block_of_) k = std::max<std::size_t>(k, b + 1U);
    sizes_.assign(k, 0);
    std::vector<std::size_t> lo(k, m_), hi(k, 0);
    for (std::size_t p = 0; p < m_; ++p) {
        const auto b = block_of_[p];
        ++sizes_[b];
        lo[b] = std::min(lo[b], p);
        hi[b] = std::max(hi[b], p);
    }
    // Enclosing blocks form a chain; the innermost has the largest minimum.
    parent_.assign(k, -1);
    for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = b; c-- > 0;) {
            if (hi[c] > hi[b]) {
                parent_[b] = static_cast<std::int8_t>(c);
                break;
            }
        }
    }
}

std::vector<int> NCPartition::block(std::size_t b) const
{
    std::vector<int> out;
    for (std::size_t p = 0; p < m_; ++p) {
        if (block_of_[p] == b) out.push_back(static_cast<int>(p + 1));
    }
    return out;
}

std::vector<std::vector<int>> NCPartition::blocks() const
{
    std::vector<std::vector<int>> out(block_count());
    for (std::size_t p = 0; p < m_; ++p) out[block_of_[p]].push_back(static_cast<int>(p + 1));
    return out;
}

std::optional<std::size_t> NCPartition::nearest_outer(std::size_t b) const
{
    const auto p = parent_.at(b);
    if (p < 0) return std::nullopt;
    return static_cast<std::size_t>(p);
}

std::vector<NCPartition> build_nc(std::size_t m)
{
    std::vector<NCPartition> out;
    std::vector<std::uint8_t> assign(m);
    std::vector<std::uint8_t> open;  // stack of blocks that may still grow
    std::uint8_t count = 0;

    // Point p either opens a new block or joins an open block; joining
    // closes every block opened after it, which is exactly non-crossing.
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == m) {
            NCPartition part;
            part.m_ = m;
            part.block_of_ = assign;
            part.finish();
            out.push_back(std::move(part));
            return;
        }
        assign[p] = count;
        open.push_back(count++);
        self(self, p + 1);
        open.pop_back();
        --count;

        for (std::size_t depth = open.size(); depth-- > 0;) {
            const auto saved = std::vector<std::uint8_t>(open.begin() + static_cast<long>(depth) + 1, open.end());
            open.resize(depth + 1);
            assign[p] = open.back();
            self(self, p + 1);
            open.insert(open.end(), saved.begin(), saved.end());
        }
    };
    rec(rec, 0);
    return out;
}

const std::vector<NCPartition>& enumerate_nc(std::size_t m)
{
    if (m < 1 || m > kMaxPartitionSize) {
        throw std::out_of_range("enumerate_nc: m must be in 1.." + std::to_string(kMaxPartitionSize));
    }
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<const std::vector<NCPartition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<const std::vector<NCPartition>>(build_nc(m));
    return *slot;
}

std::optional<ColoredNCPartition> label_and_admit(const NCPartition& p, const std::vector<int>& colors,
                                                  const Shape& shape)
{
    const std::size_t k = p.block_count();
    if (colors.size() != k) throw std::invalid_argument("one colour per block required");
    std::vector<Cell> labels(k);
    // Outer blocks have smaller indices, so a forward pass sees parents first.
    for (std::size_t b = 0; b < k; ++b) {
        const int c = colors[b];
        if (c != 1 && c != 2) throw std::invalid_argument("colours must be 1 or 2");
        const auto outer = p.nearest_outer(b);
        if (!outer) {
            labels[b] = Cell{c, c};
        } else if (colors[*outer] == c) {
            labels[b] = labels[*outer];
        } else {
            labels[b] = Cell{c, colors[*outer]};
        }
        if (!shape.contains(labels[b])) return std::nullopt;
    }
    return ColoredNCPartition{p, colors, std::move(labels)};
}

std::vector<ColoredNCPartition> enumerate_admissible(std::size_t m, const Shape& shape)
{
    std::vector<ColoredNCPartition> out;
    for (const auto& p : enumerate_nc(m)) {
        const std::size_t k = p.block_count();
        std::vector<int> colors(k);
        for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
            for (std::size_t b = 0; b < k; ++b) colors[b] = ((mask >> b) & 1U) ? 2 : 1;
            if (auto cp = label_and_admit(p, colors, shape)) out.push_back(std::move(*cp));
        }
    }
    return out;
}

}  // namespace smfree
