#include "smfree/moment_engine.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace smfree {

TruncatedSeries moments_from_cumulants(const std::vector<Scalar>& r, std::size_t m, Mode mode)
{
    std::vector<Scalar> out(m + 1, Scalar::zero(mode));
    out[0] = Scalar::one(mode);
    auto cumulant = [&](std::size_t n) { return n <= r.size() ? r[n - 1] : Scalar::zero(mode); };
    for (std::size_t n = 1; n <= m; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            Scalar term = Scalar::one(mode);
            for (std::size_t b = 0; b < p.block_count() && !term.is_zero(); ++b) term *= cumulant(p.block_size(b));
            out[n] += term;
        }
    }
    return TruncatedSeries(std::move(out));
}

Scalar partition_contribution(const ColoredNCPartition& p, const DistributionArray& d)
{
    Scalar term = Scalar::one(d.mode());
    for (std::size_t b = 0; b < p.labels.size(); ++b) {
        if (!d.shape().contains(p.labels[b])) return Scalar::zero(d.mode());
        term *= d.cumulant(p.labels[b], p.partition.block_size(b));
    }
    return term;
}

Scalar coloring_sum(const NCPartition& p, const DistributionArray& d)
{
    const Mode mode = d.mode();
    const Shape& shape = d.shape();
    const std::size_t k = p.block_count();

    std::vector<std::vector<std::size_t>> children(k);
    std::vector<std::size_t> roots;
    for (std::size_t b = 0; b < k; ++b) {
        if (auto outer = p.nearest_outer(b)) {
            children[*outer].push_back(b);
        } else {
            roots.push_back(b);
        }
    }

    // value[b][L]: sum over colourings of the subtree under b, given that b
    // carries label L. A child of colour c inherits L when c is L's row and
    // otherwise gets (c, L.row).
    std::vector<std::array<std::optional<Scalar>, 4>> value(k);
    for (std::size_t b = k; b-- > 0;) {
        for (Cell label : shape.cells()) {
            Scalar v = d.cumulant(label, p.block_size(b));
            for (std::size_t ch : children[b]) {
                if (v.is_zero()) break;
                Scalar sum = Scalar::zero(mode);
                for (int c = 1; c <= 2; ++c) {
                    const Cell child_label = c == label.row ? label : Cell{c, label.row};
                    if (shape.contains(child_label)) sum += *value[ch][child_label.index()];
                }
                v *= sum;
            }
            value[b][label.index()] = v;
        }
    }

    Scalar total = Scalar::one(mode);
    for (std::size_t b : roots) {
        Scalar sum = Scalar::zero(mode);
        for (int c = 1; c <= 2; ++c) {
            const Cell label{c, c};
            if (shape.contains(label)) sum += *value[b][label.index()];
        }
        total *= sum;
    }
    return total;
}

TruncatedSeries smf_moments(const DistributionArray& d, std::size_t m)
{
    std::vector<Scalar> out(m + 1, Scalar::zero(d.mode()));
    out[0] = Scalar::one(d.mode());
    for (std::size_t n = 1; n <= m; ++n) {
        for (const auto& p : enumerate_nc(n)) out[n] += coloring_sum(p, d);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries smf_moments_enumerated(const DistributionArray& d, std::size_t m)
{
    std::vector<Scalar> out(m + 1, Scalar::zero(d.mode()));
    out[0] = Scalar::one(d.mode());
    for (std::size_t n = 1; n <= m; ++n) {
        for (const auto& cp : enumerate_admissible(n, d.shape())) out[n] += partition_contribution(cp, d);
    }
    return TruncatedSeries(std::move(out));
}

}  // namespace smfree
