#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "job.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;

}  // namespace

int main(int argc, char** argv)
{
    using smfree::job::ConfigError;

    CLI::App app{"Moments, transforms and densities of convolutions of 2x2 distribution arrays"};
    std::string config_path;
    std::string out = "json";
    std::string dump_path;
    smfree::job::Overrides overrides;
    std::size_t order = 0;
    std::string engines;
    std::string precision;
    std::string checks;
    double eps = 0.0;

    app.add_option("--config", config_path, "Job file; stdin when absent");
    auto* order_opt = app.add_option("--order", order, "Highest moment order (1..12)");
    auto* engines_opt = app.add_option("--engines", engines, "Comma list of partition,fock,analytic");
    auto* precision_opt = app.add_option("--precision", precision, "rational or float");
    auto* checks_opt = app.add_option("--checks", checks, "Comma list of axioms,eq56,eq611,uniqueness");
    app.add_option("--out", out, "Output format")->check(CLI::IsMember({"json", "csv"}));
    auto* eps_opt = app.add_option("--density-eps", eps, "Distance above the real axis for the density");
    app.add_option("--dump-fock", dump_path, "Write the Fock basis and operators to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (*order_opt) overrides.order = order;
    if (*engines_opt) overrides.engines = engines;
    if (*precision_opt) overrides.precision = precision;
    if (*checks_opt) overrides.checks = checks;
    if (*eps_opt) overrides.density_eps = eps;

    try {
        std::string text;
        if (config_path.empty()) {
            text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        } else {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read " + config_path);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("invalid JSON: ") + e.what());
        }
        auto config = smfree::job::parse_config(doc);
        smfree::job::apply(config, overrides);
        smfree::job::validate(config);

        if (!dump_path.empty()) {
            std::ofstream dump(dump_path);
            if (!dump) throw ConfigError("cannot write " + dump_path);
            smfree::job::dump_fock(dump, config);
        }

        const auto report = smfree::job::run(config);
        if (out == "csv") {
            smfree::job::write_csv(std::cout, report);
        } else {
            std::cout << report.json.dump(2) << '\n';
        }
        if (report.exit_code != 0) {
            std::cerr << "smfree: " << report.json.at("status").get<std::string>() << '\n';
        }
        return report.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "smfree: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "smfree: " << e.what() << '\n';
        return kInputError;
    }
}
