#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "smfree/distribution_array.hpp"
#include "smfree/series.hpp"

namespace testing_support {

inline oracle::Poly to_poly(const smfree::TruncatedSeries& s)
{
    oracle::Poly out;
    for (const auto& c : s.coeffs()) out.push_back(c.as_rational());
    return out;
}

inline std::vector<smfree::Scalar> to_scalars(const std::vector<oracle::Q>& v)
{
    std::vector<smfree::Scalar> out;
    for (const auto& q : v) out.push_back(smfree::Scalar::rational(q));
    return out;
}

inline std::vector<oracle::Q> to_rationals(const std::vector<smfree::Scalar>& v)
{
    std::vector<oracle::Q> out;
    for (const auto& s : v) out.push_back(s.as_rational());
    return out;
}

/// Integer cumulants uniform in [-3, 3], between 1 and max_order of them.
inline std::vector<oracle::Q> random_cumulants(std::mt19937_64& rng, std::size_t max_order = 6)
{
    std::uniform_int_distribution<std::size_t> len(1, max_order);
    std::uniform_int_distribution<int> value(-3, 3);
    std::vector<oracle::Q> out(len(rng));
    for (auto& q : out) q = value(rng);
    return out;
}

inline smfree::DistributionArray random_array(std::mt19937_64& rng, const smfree::Shape& shape,
                                             std::size_t max_order = 6)
{
    smfree::DistributionArray d(shape, smfree::Mode::rational);
    for (auto c : shape.cells()) d.set(c, to_scalars(random_cumulants(rng, max_order)));
    return d;
}

inline const std::vector<smfree::Shape>& named_shapes()
{
    static const std::vector<smfree::Shape> shapes{smfree::Shape::square(), smfree::Shape::diagonal(),
                                                   smfree::Shape::lower_triangular(),
                                                   smfree::Shape::upper_anti_triangular(), smfree::Shape::column()};
    return shapes;
}

}  // namespace testing_support
