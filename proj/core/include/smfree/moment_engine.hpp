#pragma once

#include <cstddef>
#include <vector>

#include "smfree/distribution_array.hpp"
#include "smfree/nc_partitions.hpp"
#include "smfree/series.hpp"

namespace smfree {

/// M(n) = sum over NC(n) of the product of r(|block|), n <= m; M(0) = 1.
/// r[0] = r(1), finitely supported.
TruncatedSeries moments_from_cumulants(const std::vector<Scalar>& r, std::size_t m, Mode mode);

/// Product of r_{label}(|block|) over the blocks; zero if a label is not in
/// the array's shape.
Scalar partition_contribution(const ColoredNCPartition& p, const DistributionArray& d);

/// Sum of partition_contribution over every admissible colouring of p,
/// computed by dynamic programming over the nesting forest.
Scalar coloring_sum(const NCPartition& p, const DistributionArray& d);

/// Moments of the convolution of the array, M(0..m), in the state of the
/// vacuum. Uses coloring_sum per partition.
TruncatedSeries smf_moments(const DistributionArray& d, std::size_t m);

/// Same moments by literal enumeration of admissible coloured partitions.
/// Exponentially slower; kept as a cross-check.
TruncatedSeries smf_moments_enumerated(const DistributionArray& d, std::size_t m);

}  // namespace smfree
