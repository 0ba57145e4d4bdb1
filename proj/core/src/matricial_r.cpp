#include "smfree/matricial_r.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace smfree {

namespace {

constexpr Cell kQ11{1, 1};
constexpr Cell kQ12{1, 2};
constexpr Cell kQ21{2, 1};
constexpr Cell kQ22{2, 2};

/// All compositions (n_1, ..., n_k) with sum n_i + k = m, i.e. every
/// product b_{n_1} X b_{n_2} ... X b_{n_k} of total weight m.
void for_each_composition(std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> parts;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        // Each part n costs n + 1.
        for (std::size_t n = 0; n + 1 <= remaining; ++n) {
            parts.push_back(n);
            if (n + 1 == remaining) {
                visit(parts);
            } else {
                self(self, remaining - n - 1);
            }
            parts.pop_back();
        }
    };
    rec(rec, m);
}

std::vector<Scalar> residuals(const FockModel& model, const UnitSeries& b, std::size_t m_max, const FockVector& v,
                              const Factor& x)
{
    if (m_max >= 1 && b.order() + 1 < m_max) {
        throw std::invalid_argument("residuals up to m = " + std::to_string(m_max) + " need b_0..b_" +
                                    std::to_string(m_max - 1));
    }
    std::vector<Scalar> out;
    std::vector<Factor> factors;
    for (std::size_t m = 1; m <= m_max; ++m) {
        Scalar s = Scalar::zero(model.mode());
        for_each_composition(m, [&](const std::vector<std::size_t>& parts) {
            factors.clear();
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (k) factors.push_back(x);
                factors.push_back(Factor::u(b.coefficient(parts[k])));
            }
            s += model.moment(v, factors);
        });
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

UnitSeries::UnitSeries(std::vector<TruncatedSeries> components) : components_(std::move(components))
{
    if (components_.size() != 4) throw std::invalid_argument("a unit series has four components");
    std::size_t order = components_.front().order();
    for (const auto& c : components_) {
        order = std::min(order, c.order());
        if (c.mode() != components_.front().mode()) throw ModeMismatch("unit series components of different modes");
    }
    for (auto& c : components_) c = c.truncated(order);
}

UnitSeries UnitSeries::zero(std::size_t order, Mode mode)
{
    return scalar(TruncatedSeries::zero(order, mode));
}

UnitSeries UnitSeries::scalar(const TruncatedSeries& s)
{
    return UnitSeries({s, s, s, s});
}

UnitElement UnitSeries::coefficient(std::size_t n) const
{
    return UnitElement(components_[0][n], components_[1][n], components_[2][n], components_[3][n]);
}

UnitSeries UnitSeries::truncated(std::size_t order) const
{
    std::vector<TruncatedSeries> out;
    for (const auto& c : components_) out.push_back(c.truncated(order));
    return UnitSeries(std::move(out));
}

UnitSeries assemble_matricial_r(const DistributionArray& d, std::size_t order)
{
    const Mode mode = d.mode();
    std::vector<std::vector<Scalar>> coeffs(4, std::vector<Scalar>(order + 1, Scalar::zero(mode)));
    for (Cell c : d.shape().cells()) {
        const UnitElement unit = UnitElement::unit(c, mode);
        const auto r = d.r_transform(c, order);
        for (std::size_t n = 0; n <= order; ++n) {
            const UnitElement term = unit * r[n];
            for (Cell q : kAllCells) coeffs[q.index()][n] += term[q];
        }
    }
    std::vector<TruncatedSeries> components;
    for (auto& c : coeffs) components.emplace_back(std::move(c));
    return UnitSeries(std::move(components));
}

UnitSeries invert_c(const UnitSeries& r, std::size_t order)
{
    std::vector<TruncatedSeries> out;
    for (Cell q : kAllCells) out.push_back(mult_inverse_c(r.component(q), order));
    return UnitSeries(std::move(out));
}

UnitSeries regular_part_from_inverse(const UnitSeries& b)
{
    std::vector<TruncatedSeries> out;
    for (Cell q : kAllCells) out.push_back(regular_part_from_inverse(b.component(q)));
    return UnitSeries(std::move(out));
}

std::vector<Scalar> linearization_residuals(const FockModel& model, const UnitSeries& b, std::size_t m_max)
{
    return residuals(model, b, m_max, model.vacuum(), Factor::A());
}

std::map<Cell, std::vector<Scalar>> compressed_linearization_residuals(const FockModel& model, const UnitSeries& b,
                                                                      std::size_t m_max)
{
    std::map<Cell, std::vector<Scalar>> out;
    for (Cell c : model.shape().cells()) {
        out.emplace(c, residuals(model, b, m_max, model.compression_state_vector(c), Factor::compressed_sum(c)));
    }
    return out;
}

UnitSeries reconstruct_unique(const FockModel& model, std::size_t order)
{
    const Mode mode = model.mode();
    if (model.depth() < order + 2) {
        throw DepthExceeded("reconstruct_unique to order " + std::to_string(order) + " needs depth " +
                            std::to_string(order + 2));
    }
    const std::size_t nb = order + 1;  // b_0..b_{order+1}
    std::vector<std::vector<Scalar>> b(4, std::vector<Scalar>(nb + 1, Scalar::zero(mode)));
    for (auto& comp : b) comp[0] = Scalar::one(mode);

    auto current = [&](std::size_t upto) {
        std::vector<TruncatedSeries> comps;
        for (auto& comp : b) comps.emplace_back(std::vector<Scalar>(comp.begin(), comp.begin() + static_cast<long>(upto) + 1));
        return UnitSeries(std::move(comps));
    };

    for (std::size_t m = 2; m <= nb + 1; ++m) {
        // b_{m-1} enters S_m only through the single term phi(b_{m-1}), so
        // with b_{m-1} = 0 the residual equals minus the unknown part.
        const auto partial = current(m - 1);
        const Scalar s_phi = residuals(model, partial, m, model.vacuum(), Factor::A()).back();
        const Scalar s_phi1 =
            residuals(model, partial, m, model.compression_state_vector({1, 1}), Factor::compressed_sum({1, 1})).back();
        const Scalar s_phi2 =
            residuals(model, partial, m, model.compression_state_vector({2, 2}), Factor::compressed_sum({2, 2})).back();
        b[kQ11.index()][m - 1] = -s_phi;
        b[kQ21.index()][m - 1] = -s_phi1;
        b[kQ12.index()][m - 1] = -s_phi2;

        // Q_{2,2} = Q_{2,1} + Q_{1,2} - Q_{1,1} through order m - 2, then
        // its inverse supplies the last component of b_{m-1}.
        auto known = [&](Cell q) {
            return regular_part_from_inverse(
                TruncatedSeries(std::vector<Scalar>(b[q.index()].begin(), b[q.index()].begin() + static_cast<long>(m))));
        };
        const auto q22 = known(kQ21) + known(kQ12) - known(kQ11);
        b[kQ22.index()][m - 1] = mult_inverse_c(q22, m - 1)[m - 1];
    }
    return regular_part_from_inverse(current(nb));
}

}  // namespace smfree
