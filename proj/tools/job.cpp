#include "job.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "smfree/analytic.hpp"
#include "smfree/density.hpp"
#include "smfree/fock.hpp"
#include "smfree/matricial_r.hpp"
#include "smfree/moment_engine.hpp"

namespace smfree::job {

using nlohmann::json;

namespace {

const std::set<std::string> kEngines{"partition", "fock", "analytic"};
const std::set<std::string> kChecks{"axioms", "eq56", "eq611", "uniqueness"};
const std::set<std::string> kTopKeys{"version", "shape", "cells", "distributions", "rows", "order",
                                     "engines", "precision", "checks", "density"};

/// Largest order at which the uniqueness reconstruction runs; it needs a
/// model two levels deeper and grows quickly.
constexpr std::size_t kUniquenessOrder = 8;
constexpr std::size_t kAxiomDepth = 6;
constexpr std::size_t kAxiomTrials = 50;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

std::string number_text(const json& v, const std::string& where)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer() || v.is_number_unsigned() || v.is_number_float()) return v.dump();
    fail(where + ": expected a number or a numeric string");
}

std::vector<std::string> law_cumulants(const json& law_doc, const std::string& where)
{
    std::vector<std::string> out;
    if (law_doc.is_array()) {
        for (const auto& v : law_doc) out.push_back(number_text(v, where));
        return out;
    }
    if (!law_doc.is_object()) fail(where + ": expected a law object or a cumulant list");
    if (law_doc.contains("cumulants")) {
        if (law_doc.size() != 1) fail(where + ": \"cumulants\" takes no other fields");
        if (!law_doc.at("cumulants").is_array()) fail(where + ": \"cumulants\" must be a list");
        return law_cumulants(law_doc.at("cumulants"), where);
    }
    const auto law = law_doc.value("law", std::string());
    if (law == "semicircle") {
        for (const auto& [key, _] : law_doc.items()) {
            if (key != "law" && key != "variance") fail(where + ": unknown field \"" + key + "\"");
        }
        return {"0", number_text(law_doc.value("variance", json(1)), where)};
    }
    if (law == "point_mass") {
        for (const auto& [key, _] : law_doc.items()) {
            if (key != "law" && key != "at") fail(where + ": unknown field \"" + key + "\"");
        }
        if (!law_doc.contains("at")) fail(where + ": point_mass needs \"at\"");
        return {number_text(law_doc.at("at"), where)};
    }
    fail(where + ": unknown law \"" + law + "\" (semicircle, point_mass or cumulants)");
}

std::set<std::string> name_list(const std::string& text, const std::set<std::string>& allowed, const std::string& what)
{
    std::set<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!allowed.count(item)) fail("unknown " + what + " \"" + item + "\"");
        out.insert(item);
    }
    return out;
}

std::set<std::string> name_list(const json& v, const std::set<std::string>& allowed, const std::string& what)
{
    if (!v.is_array()) fail(what + "s must be a list");
    std::string joined;
    for (const auto& item : v) {
        if (!item.is_string()) fail(what + "s must be strings");
        joined += item.get<std::string>() + ",";
    }
    return name_list(joined, allowed, what);
}

Mode parse_precision(const std::string& text)
{
    if (text == "rational") return Mode::rational;
    if (text == "float") return Mode::floating;
    fail("precision must be \"rational\" or \"float\"");
}

DensityBlock parse_density(const json& v)
{
    if (!v.is_object()) fail("density must be an object");
    DensityBlock d;
    for (const auto& [key, value] : v.items()) {
        if (key == "grid_min" && value.is_number()) {
            d.grid_min = value.get<double>();
        } else if (key == "grid_max" && value.is_number()) {
            d.grid_max = value.get<double>();
        } else if (key == "points" && value.is_number_unsigned()) {
            d.points = value.get<std::size_t>();
        } else if (key == "eps" && value.is_number()) {
            d.eps = value.get<double>();
        } else {
            fail("density: bad or unknown field \"" + key + "\"");
        }
    }
    return d;
}

json scalar_json(const Scalar& s)
{
    if (s.mode() == Mode::rational) return s.to_string();
    return s.to_double();
}

json series_json(const TruncatedSeries& s)
{
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(scalar_json(c));
    return out;
}

json scalars_json(const std::vector<Scalar>& v)
{
    json out = json::array();
    for (const auto& c : v) out.push_back(scalar_json(c));
    return out;
}

bool same(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order()) return false;
    if (a.mode() == Mode::rational) return a == b;
    return approx_equal(a, b, 1e-9);
}

/// Exact copy of the array; floating cumulants convert to their binary value.
DistributionArray exact_copy(const DistributionArray& d)
{
    if (d.mode() == Mode::rational) return d;
    DistributionArray out(d.shape(), Mode::rational);
    for (Cell c : d.shape().cells()) {
        std::vector<Scalar> r;
        for (const auto& x : d.cumulants(c)) r.push_back(x.converted(Mode::rational));
        out.set(c, std::move(r));
    }
    return out;
}

std::vector<Scalar> unit_residual(std::size_t m)
{
    std::vector<Scalar> out(m, Scalar::zero(Mode::rational));
    if (m) out[0] = Scalar::one(Mode::rational);
    return out;
}

json unit_series_json(const UnitSeries& s)
{
    json out = json::object();
    for (Cell q : kAllCells) out["q" + std::to_string(q.row) + std::to_string(q.col)] = series_json(s.component(q));
    return out;
}

}  // namespace

DistributionArray JobConfig::array() const
{
    DistributionArray d(shape, precision);
    for (const auto& [cell, texts] : cells) {
        std::vector<Scalar> r;
        for (const auto& t : texts) {
            try {
                r.push_back(Scalar::parse(t, precision));
            } catch (const std::exception& e) {
                fail("cell " + cell.to_string() + ": " + e.what());
            }
        }
        d.set(cell, std::move(r));
    }
    return d;
}

JobConfig parse_config(const json& doc)
{
    if (!doc.is_object()) fail("the job must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (!kTopKeys.count(key)) fail("unknown field \"" + key + "\"");
    }
    if (!doc.contains("version") || doc.at("version") != json(1)) fail("\"version\": 1 is required");

    JobConfig cfg;
    if (!doc.contains("shape") || !doc.at("shape").is_string()) fail("\"shape\" must name a shape");
    const auto shape_name = doc.at("shape").get<std::string>();
    if (shape_name == "custom") {
        if (!doc.contains("cells") || !doc.at("cells").is_array()) fail("a custom shape needs a \"cells\" list");
        std::vector<Cell> cells;
        for (const auto& c : doc.at("cells")) {
            if (!c.is_string()) fail("cells are strings \"i,j\"");
            try {
                cells.push_back(Cell::parse(c.get<std::string>()));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        cfg.shape = Shape::custom(cells);
        if (cfg.shape.empty()) fail("a custom shape needs at least one cell");
    } else {
        if (doc.contains("cells")) fail("\"cells\" only goes with the custom shape");
        try {
            cfg.shape = Shape::named(shape_name);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    if (doc.contains("precision")) {
        if (!doc.at("precision").is_string()) fail("precision must be a string");
        cfg.precision = parse_precision(doc.at("precision").get<std::string>());
    }
    if (doc.contains("order")) {
        if (!doc.at("order").is_number_unsigned()) fail("order must be a positive integer");
        cfg.order = doc.at("order").get<std::size_t>();
    }
    if (doc.contains("engines")) cfg.engines = name_list(doc.at("engines"), kEngines, "engine");
    if (doc.contains("checks")) cfg.checks = name_list(doc.at("checks"), kChecks, "check");
    if (doc.contains("density")) cfg.density = parse_density(doc.at("density"));

    const bool by_cell = doc.contains("distributions");
    const bool by_row = doc.contains("rows");
    if (by_cell == by_row) fail("give exactly one of \"distributions\" (per cell) or \"rows\"");
    std::map<Cell, std::vector<std::string>> given;
    if (by_cell) {
        const auto& dist = doc.at("distributions");
        if (!dist.is_object()) fail("\"distributions\" maps \"i,j\" to a law");
        for (const auto& [key, law_doc] : dist.items()) {
            Cell c;
            try {
                c = Cell::parse(key);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            if (!cfg.shape.contains(c)) fail("cell " + c.to_string() + " is not in the shape");
            given[c] = law_cumulants(law_doc, "cell " + c.to_string());
        }
    } else {
        const auto& rows = doc.at("rows");
        if (!rows.is_object()) fail("\"rows\" maps \"1\" and \"2\" to a law");
        std::map<int, std::vector<std::string>> by;
        for (const auto& [key, law_doc] : rows.items()) {
            if (key != "1" && key != "2") fail("rows are \"1\" and \"2\"");
            by[key == "1" ? 1 : 2] = law_cumulants(law_doc, "row " + key);
        }
        for (Cell c : cfg.shape.cells()) {
            if (!by.count(c.row)) fail("row " + std::to_string(c.row) + " has cells but no law");
            given[c] = by.at(c.row);
        }
    }
    for (Cell c : cfg.shape.cells()) {
        if (!given.count(c)) fail("cell " + c.to_string() + " of the shape has no law");
    }
    for (auto& [c, r] : given) cfg.cells.emplace_back(c, std::move(r));
    return cfg;
}

void apply(JobConfig& config, const Overrides& o)
{
    if (o.order) config.order = *o.order;
    if (o.engines) config.engines = name_list(*o.engines, kEngines, "engine");
    if (o.precision) config.precision = parse_precision(*o.precision);
    if (o.checks) config.checks = name_list(*o.checks, kChecks, "check");
    if (o.density_eps) {
        if (!config.density) fail("--density-eps needs a density block in the job");
        config.density->eps = *o.density_eps;
    }
}

void validate(const JobConfig& config)
{
    if (config.order < 1 || config.order > kMaxOrder) {
        fail("order must be between 1 and " + std::to_string(kMaxOrder));
    }
    if (config.engines.empty()) fail("no engine selected");
    if (config.density) {
        const auto& d = *config.density;
        if (config.precision != Mode::floating) fail("a density needs float precision");
        if (!(d.eps > 0)) fail("density eps must be positive");
        if (d.points < 2 || !(d.grid_min < d.grid_max)) fail("density grid needs grid_min < grid_max and points >= 2");
    }
    (void)config.array();
}

Report run(const JobConfig& config)
{
    validate(config);
    const DistributionArray d = config.array();
    const std::size_t n = config.order;

    Report report;
    json& out = report.json;
    out["version"] = 1;
    out["shape"] = config.shape.name();
    json cells = json::object();
    for (const auto& [c, _] : config.cells) cells[c.to_string()] = scalars_json(d.cumulants(c));
    out["cumulants"] = cells;
    out["precision"] = std::string(to_string(config.precision));
    out["order"] = n;

    std::map<std::string, TruncatedSeries> moments;
    try {
        if (config.engines.count("partition")) moments.emplace("partition", smf_moments(d, n));
        if (config.engines.count("fock")) moments.emplace("fock", fock_moments(FockModel::build(d, n), n));
        if (config.engines.count("analytic")) moments.emplace("analytic", master_cauchy(d, n));
    } catch (const DepthExceeded& e) {
        fail(e.what());
    }
    json mj = json::object();
    bool agree = true;
    for (const auto& [name, m] : moments) {
        mj[name] = series_json(m);
        agree = agree && same(m, moments.begin()->second);
    }
    out["moments"] = mj;
    out["agreement"] = agree;

    bool checks_ok = true;
    json cj = json::object();
    if (!config.checks.empty()) {
        const DistributionArray exact = exact_copy(d);
        if (config.checks.count("axioms")) {
            const auto report_ax = axiom_check(FockModel::build(exact, std::min(n, kAxiomDepth)), kAxiomTrials);
            json v = json::array();
            for (const auto& s : report_ax.violations) v.push_back(s);
            cj["axioms"] = {{"checks", report_ax.checks}, {"violations", v}, {"pass", report_ax.ok()}};
            checks_ok = checks_ok && report_ax.ok();
        }
        if (config.checks.count("eq56") || config.checks.count("eq611")) {
            const auto model = FockModel::build(exact, n);
            const auto b = invert_c(assemble_matricial_r(exact, n - 1), n);
            if (config.checks.count("eq56")) {
                const auto s = linearization_residuals(model, b, n);
                const bool pass = s == unit_residual(n);
                cj["eq56"] = {{"residuals", scalars_json(s)}, {"pass", pass}};
                checks_ok = checks_ok && pass;
            }
            if (config.checks.count("eq611")) {
                json cells_j = json::object();
                bool pass = true;
                for (const auto& [cell, s] : compressed_linearization_residuals(model, b, n)) {
                    cells_j[cell.to_string()] = scalars_json(s);
                    pass = pass && s == unit_residual(n);
                }
                cj["eq611"] = {{"residuals", cells_j}, {"pass", pass}};
                checks_ok = checks_ok && pass;
            }
        }
        if (config.checks.count("uniqueness")) {
            const std::size_t u = std::min(n, kUniquenessOrder);
            const auto rebuilt = reconstruct_unique(FockModel::build(exact, u + 2), u);
            const auto assembled = assemble_matricial_r(exact, u);
            const bool pass = rebuilt == assembled;
            cj["uniqueness"] = {{"order", u},
                                {"reconstructed", unit_series_json(rebuilt)},
                                {"assembled", unit_series_json(assembled)},
                                {"pass", pass}};
            checks_ok = checks_ok && pass;
        }
        out["checks"] = cj;
    }

    if (config.density) {
        const auto& blk = *config.density;
        const auto result = stieltjes_density(d, uniform_grid(blk.grid_min, blk.grid_max, blk.points), blk.eps);
        json samples = json::array();
        for (const auto& s : result.samples) samples.push_back({{"x", s.x}, {"density", s.density}});
        json atoms = json::array();
        for (const auto& a : result.atoms) atoms.push_back({{"location", a.location}, {"weight", a.weight}});
        out["density"] = {{"eps", blk.eps}, {"closed_form", result.closed_form}, {"samples", samples}, {"atoms", atoms}};
    }

    out["status"] = !agree ? "disagreement" : (!checks_ok ? "check_failed" : "ok");
    report.exit_code = agree && checks_ok ? 0 : 1;
    return report;
}

void write_csv(std::ostream& os, const Report& report)
{
    const auto& j = report.json;
    auto cell = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    const auto& m = j.at("moments");
    os << "n";
    for (const auto& [name, _] : m.items()) os << ',' << name;
    os << '\n';
    const std::size_t n = j.at("order").get<std::size_t>();
    for (std::size_t k = 0; k <= n; ++k) {
        os << k;
        for (const auto& [_, series] : m.items()) os << ',' << cell(series.at(k));
        os << '\n';
    }
    if (j.contains("density")) {
        os << "\nx,density\n";
        for (const auto& s : j.at("density").at("samples")) os << s.at("x").dump() << ',' << s.at("density").dump() << '\n';
        os << "\natom_location,atom_weight\n";
        for (const auto& a : j.at("density").at("atoms")) {
            os << a.at("location").dump() << ',' << a.at("weight").dump() << '\n';
        }
    }
}

void dump_fock(std::ostream& os, const JobConfig& config)
{
    validate(config);
    FockModel::build(config.array(), config.order).dump(os, true);
}

}  // namespace smfree::job
