#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "smfree/distribution_array.hpp"

namespace smfree::job {

/// Bad input: malformed JSON, unknown fields, inconsistent cells, order or
/// depth out of range. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxOrder = 12;

struct DensityBlock {
    double grid_min = -3.0;
    double grid_max = 3.0;
    std::size_t points = 121;
    double eps = 1e-6;
};

struct JobConfig {
    Shape shape;
    Mode precision = Mode::rational;
    /// Cumulant text per cell, parsed once the precision is final.
    std::vector<std::pair<Cell, std::vector<std::string>>> cells;
    std::size_t order = 6;
    std::set<std::string> engines{"partition", "fock", "analytic"};
    std::set<std::string> checks;
    std::optional<DensityBlock> density;

    DistributionArray array() const;
};

/// Parses a version-1 job document.
JobConfig parse_config(const nlohmann::json& doc);

/// Command-line overrides; empty fields leave the config alone.
struct Overrides {
    std::optional<std::size_t> order;
    std::optional<std::string> engines;
    std::optional<std::string> precision;
    std::optional<std::string> checks;
    std::optional<double> density_eps;
};

void apply(JobConfig& config, const Overrides& overrides);

/// Rejects combinations that cannot run (order range, density in rational
/// mode, empty engine list).
void validate(const JobConfig& config);

struct Report {
    nlohmann::json json;
    /// 0 all good, 1 disagreement or failed check.
    int exit_code = 0;
};

Report run(const JobConfig& config);

/// Moments table, then density samples and atoms when present.
void write_csv(std::ostream& os, const Report& report);

/// Basis and operator action of the Fock model the job would use.
void dump_fock(std::ostream& os, const JobConfig& config);

}  // namespace smfree::job
