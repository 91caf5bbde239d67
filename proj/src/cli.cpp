#include "minkflow/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "minkflow/closed_form.hpp"
#include "minkflow/errors.hpp"
#include "minkflow/flow.hpp"
#include "minkflow/inequalities.hpp"
#include "minkflow/io.hpp"
#include "minkflow/parallel.hpp"
#include "minkflow/svg.hpp"

namespace minkflow::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kVersion = "0.1.0";

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Verify: return "verify";
        case Command::Flow: return "flow";
        case Command::Counterexample: return "counterexample";
        case Command::SphereTable: return "sphere-table";
        case Command::Sweep: return "sweep";
    }
    return "verify";
}

void prepare_output_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw InputError("output directory '" + dir.string() + "' is not writable");
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ostringstream os;
    table.write(os);
    write_text_file(path, os.str());
}

void write_metadata(const RunConfig& config, const Json& extra = Json::object()) {
    Json meta;
    meta["command"] = std::string(command_name(config.command));
    meta["version"] = kVersion;
    meta["threads"] = worker_count();
    if (config.input_path) meta["input"] = config.input_path->string();
    if (config.subdivision) meta["subdivision"] = *config.subdivision;
    if (config.grid) meta["grid"] = {config.grid->start, config.grid->stop, config.grid->count};
    if (config.tolerance) meta["tolerance"] = *config.tolerance;
    if (config.command == Command::Counterexample) meta["scan"] = {config.rmin, config.rmax, config.step};
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["created_utc"] = stamp;
    meta["details"] = extra;
    write_text_file(config.output_dir / "metadata.json", dump(meta));
}

int resolve_subdivision(const RunConfig& config, const RadialGraphSpec& spec) {
    const int n = config.subdivision.value_or(spec.subdivision);
    if (n < 2 || n > 8) throw InputError("subdivision must be in [2, 8]");
    return n;
}

RadialGraphSpec require_spec(const RunConfig& config) {
    if (!config.input_path) throw InputError("--input is required");
    return load_spec(*config.input_path);
}

// Discretization scale for mesh deficits: the space's Minkowski deficit of the
// discrete sphere with the same base radius vanishes analytically, so its
// measured value is pure discretization error.
double discretization_tolerance(const RadialGraphSpec& spec, int subdivision) {
    const SurfaceMesh sphere = build_radial_graph(sphere_spec(spec.space, spec.base_radius), subdivision);
    const double err = std::abs(minkowski_deficit(spec.space, summarize(sphere)).deficit);
    return std::max(kAnalyticTolerance, 10.0 * err);
}

SvgSeries series(std::string label, std::vector<double> x, std::vector<double> y, std::string color,
                 bool dashed = false, bool markers = false) {
    SvgSeries s;
    s.label = std::move(label);
    s.x = std::move(x);
    s.y = std::move(y);
    s.color = std::move(color);
    s.dashed = dashed;
    s.markers = markers;
    return s;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    char c1 = 0, c2 = 0;
    if (!(is >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' || !is.eof()) {
        throw InputError("grid must look like start:stop:count, got '" + text + "'");
    }
    if (g.count < 2 || !(g.stop > g.start) || g.start < 0.0) {
        throw InputError("grid needs 0 <= start < stop and count >= 2");
    }
    return g;
}

std::vector<double> sphere_table_radii(SpaceKind space) {
    switch (space) {
        case SpaceKind::Euclidean: return {0.5, 1.0, 2.0};
        case SpaceKind::Hyperbolic: return {0.25, 0.5, 1.0, 2.0};
        case SpaceKind::Spherical: return {kPi / 12.0, kPi / 6.0, kPi / 4.0, kPi / 3.0};
    }
    return {};
}

int cmd_verify(const RunConfig& config) {
    const RadialGraphSpec spec = require_spec(config);
    const int n = resolve_subdivision(config, spec);
    prepare_output_dir(config.output_dir);

    const SurfaceMesh mesh = build_radial_graph(spec, n);
    const ConvexityReport convexity = convexity_report(mesh);
    const GeometricSummary summary = summarize(mesh);
    const double tol = config.tolerance.value_or(discretization_tolerance(spec, n));

    std::vector<DeficitReport> reports{minkowski_deficit(spec.space, summary, tol)};
    Json extra = Json::object();
    if (spec.space == SpaceKind::Hyperbolic) {
        for (auto& r : weaker_inequalities_hyperbolic(summary, tol)) reports.push_back(std::move(r));
        extra["asymptotic_isoperimetric_deficit"] = hyperbolic_asymptotic_deficit(summary);
    }
    if (spec.space == SpaceKind::Spherical) extra["rigidity_indicator"] = spherical_rigidity_indicator(summary);
    try {
        extra["equal_area_radius_rate"] = equal_area_radius_rate(spec.space, summary);
    } catch (const DegenerateError&) {
        extra["equal_area_radius_rate"] = nullptr;
    }

    bool violated = false;
    Json jreports = Json::array();
    for (const auto& r : reports) {
        if (r.asserted && !r.holds) violated = true;
        jreports.push_back(deficit_report_to_json(r));
    }
    int code = exit_code::kOk;
    if (!convexity.is_plausibly_convex) {
        code = exit_code::kNotConvex;
    } else if (violated) {
        code = exit_code::kViolation;
    }
    if (convexity.skipped_vertices > 0) {
        std::cerr << "warning: convexity fit skipped " << convexity.skipped_vertices << " low-valence vertices\n";
    }

    Json out;
    out["spec"] = spec_to_json(spec);
    out["subdivision"] = n;
    out["convexity"] = {{"min_principal_curvature_estimate", convexity.min_principal_curvature_estimate},
                        {"is_plausibly_convex", convexity.is_plausibly_convex},
                        {"tolerance", convexity.tolerance},
                        {"skipped_vertices", convexity.skipped_vertices}};
    out["summary"] = summary_to_json(summary);
    out["tolerance"] = tol;
    out["inequalities_asserted"] = convexity.is_plausibly_convex;
    out["reports"] = jreports;
    out["extra"] = extra;
    out["exit_code"] = code;
    write_text_file(config.output_dir / "verify_report.json", dump(out));
    write_metadata(config);
    return code;
}

int cmd_flow(const RunConfig& config) {
    const RadialGraphSpec spec = require_spec(config);
    const int n = resolve_subdivision(config, spec);
    std::vector<double> grid;
    if (config.grid) {
        grid = uniform_grid(config.grid->start, config.grid->stop, config.grid->count);
    } else {
        grid = default_comparison_grid(spec.space);
    }
    if (!validity_window(spec.space).contains(grid.back())) {
        throw InputError("grid leaves the flow's validity window");
    }
    prepare_output_dir(config.output_dir);

    const SurfaceMesh mesh = build_radial_graph(spec, n);
    const ComparisonReport report = compare_analytic(mesh, grid);
    const SeriesCoefficients coeffs = series_for(spec.space, report.summary);

    {
        std::ostringstream a, d;
        write_flow_series_csv(a, report.analytic);
        write_flow_series_csv(d, report.discrete);
        write_text_file(config.output_dir / "analytic_series.csv", a.str());
        write_text_file(config.output_dir / "discrete_series.csv", d.str());
    }

    CsvTable table({"t", "area_analytic", "area_discrete", "volume_analytic", "volume_discrete",
                    "equal_area_radius", "isoperimetric_gap"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double radius = std::nan("");
        double gap = std::nan("");
        try {
            radius = equal_area_radius(spec.space, report.analytic.areas[i]);
            gap = isoperimetric_gap(coeffs, grid[i]);
        } catch (const DomainError&) {
            // spherical area above 4 pi has no equal-area sphere
        }
        table.cell(grid[i]).cell(report.analytic.areas[i]).cell(report.discrete.areas[i]);
        table.cell(report.analytic.volumes[i]).cell(report.discrete.volumes[i]).cell(radius).cell(gap);
        table.end_row();
    }
    write_csv(config.output_dir / "flow_table.csv", table);

    if (grid.size() >= 3) {
        const auto ra = ode_residual(report.analytic, spec.space);
        const auto rd = ode_residual(report.discrete, spec.space);
        CsvTable res({"t", "residual_analytic", "residual_discrete"});
        for (std::size_t i = 0; i < ra.size(); ++i) {
            res.cell(grid[i + 1]).cell(ra[i]).cell(rd[i]);
            res.end_row();
        }
        write_csv(config.output_dir / "ode_residual.csv", res);
    }

    Json comparison = comparison_to_json(report);
    comparison["space"] = std::string(space_name(spec.space));
    comparison["subdivision"] = n;
    Json coeff_json = {{"degenerate", coeffs.degenerate}};
    if (spec.space == SpaceKind::Hyperbolic) {
        coeff_json["R"] = coeffs.r_hyp;
        coeff_json["T"] = coeffs.t_hyp;
        comparison["asymptotic_isoperimetric_deficit"] = hyperbolic_asymptotic_deficit(report.summary);
    }
    if (spec.space == SpaceKind::Spherical) {
        coeff_json["R"] = coeffs.r_sph;
        coeff_json["theta"] = coeffs.theta;
        const AreaPeak peak = spherical_area_peak(coeffs);
        comparison["area_peak"] = {{"t", peak.t}, {"area", peak.area}};
    }
    comparison["coefficients"] = coeff_json;
    write_text_file(config.output_dir / "comparison.json", dump(comparison));

    const auto fine = uniform_grid(grid.front(), grid.back(), 200);
    const FlowSeries smooth = sample_series(coeffs, fine);
    std::vector<SvgPanel> panels(2);
    panels[0] = {"Area of parallel surfaces", "t", "A(t)",
                 {series("closed form", fine, smooth.areas, "#1f77b4", true),
                  series("discrete mesh", grid, report.discrete.areas, "#d62728", false, true)}};
    panels[1] = {"Enclosed volume", "t", "V(t)",
                 {series("closed form", fine, smooth.volumes, "#1f77b4", true),
                  series("discrete mesh", grid, report.discrete.volumes, "#d62728", false, true)}};
    write_text_file(config.output_dir / "flow.svg", render_svg_chart(panels));
    write_metadata(config);
    return exit_code::kOk;
}

int cmd_counterexample(const RunConfig& config) {
    const CounterexampleResult scan = counterexample_scan(config.rmin, config.rmax, config.step);
    prepare_output_dir(config.output_dir);

    CsvTable table({"R", "area", "total_mean_curvature", "deficit_false", "deficit_minkowski", "deficit_mean_vs_volume",
                    "deficit_mean_vs_area"});
    for (std::size_t i = 0; i < scan.radii.size(); ++i) {
        const GeometricSummary s = geodesic_disk_limits(scan.radii[i]);
        table.cell(scan.radii[i]).cell(s.area).cell(s.total_mean_curvature).cell(scan.false_deficits[i]);
        table.cell(scan.minkowski_deficits[i]).cell(scan.weak_volume_deficits[i]).cell(scan.weak_area_deficits[i]);
        table.end_row();
    }
    write_csv(config.output_dir / "counterexample.csv", table);

    Json out;
    out["scan"] = {{"rmin", config.rmin}, {"rmax", config.rmax}, {"step", config.step}};
    out["first_violation_R"] = scan.first_violation_radius ? Json(*scan.first_violation_radius) : Json(nullptr);
    out["bisected_threshold"] = scan.bisected_threshold ? Json(*scan.bisected_threshold) : Json(nullptr);
    if (scan.bisected_threshold) {
        const double t = *scan.bisected_threshold;
        out["deficit_below_threshold"] = false_inequality_eval(geodesic_disk_limits(t - 1e-6)).deficit;
        out["deficit_above_threshold"] = false_inequality_eval(geodesic_disk_limits(t + 1e-6)).deficit;
    }
    out["min_asserted_deficit"] = scan.min_asserted_deficit;
    out["asserted_inequalities_hold"] = scan.asserted_inequalities_hold;
    write_text_file(config.output_dir / "counterexample.json", dump(out));

    std::vector<SvgPanel> panels(1);
    panels[0] = {"Geodesic disk limits in H^3", "R", "deficit",
                 {series("false inequality", scan.radii, scan.false_deficits, "#d62728"),
                  series("hyperbolic Minkowski", scan.radii, scan.minkowski_deficits, "#1f77b4", true)}};
    write_text_file(config.output_dir / "counterexample.svg", render_svg_chart(panels));
    write_metadata(config);

    if (!scan.asserted_inequalities_hold) return exit_code::kViolation;
    return scan.first_violation_radius ? exit_code::kOk : exit_code::kNoFinding;
}

int cmd_sphere_table(const RunConfig& config) {
    prepare_output_dir(config.output_dir);
    CsvTable table({"space", "r", "area", "area_rate", "volume", "deficit_minkowski", "deficit_asymptotic",
                    "equal_area_radius_rate", "rigidity_indicator"});
    bool all_zero = true;
    for (SpaceKind space : {SpaceKind::Euclidean, SpaceKind::Hyperbolic, SpaceKind::Spherical}) {
        for (double r : sphere_table_radii(space)) {
            const GeometricSummary s = sphere_geometry(space, r);
            const DeficitReport d = minkowski_deficit(space, s);
            all_zero = all_zero && d.equality;
            double asymptotic = 0.0;
            double rigidity = std::nan("");
            if (space == SpaceKind::Hyperbolic) {
                asymptotic = hyperbolic_asymptotic_deficit(s);
                all_zero = all_zero && std::abs(asymptotic) <= kAnalyticTolerance;
            }
            if (space == SpaceKind::Spherical) rigidity = spherical_rigidity_indicator(s);
            table.cell(std::string(space_name(space))).cell(r).cell(s.area).cell(s.total_mean_curvature);
            table.cell(s.volume).cell(d.deficit).cell(asymptotic).cell(equal_area_radius_rate(space, s)).cell(rigidity);
            table.end_row();
        }
    }
    write_csv(config.output_dir / "sphere_table.csv", table);
    write_metadata(config);
    return all_zero ? exit_code::kOk : exit_code::kViolation;
}

namespace {

Json default_families() {
    return Json::parse(R"({"families": [
      {"id": "spheres", "type": "sphere", "radii": [0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0]},
      {"id": "disks", "type": "disk", "radii": [0.1, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0]},
      {"id": "prolate", "type": "radial_graph", "base_radius": 1.0, "basis": 8,
       "amplitudes": [-0.05, -0.025, 0.0, 0.025, 0.05], "subdivision": 4},
      {"id": "twisted", "type": "radial_graph", "base_radius": 0.5, "basis": 7,
       "amplitudes": [0.0, 0.02, 0.04], "subdivision": 4}
    ]})");
}

}  // namespace

int cmd_sweep(const RunConfig& config) {
    Json doc;
    if (config.input_path) {
        std::ifstream in(*config.input_path);
        if (!in) throw InputError("cannot open family file '" + config.input_path->string() + "'");
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("family file is not valid JSON: ") + e.what());
        }
    } else {
        doc = default_families();
    }
    if (!doc.contains("families") || !doc["families"].is_array()) {
        throw InputError("family file needs a 'families' array");
    }
    prepare_output_dir(config.output_dir);

    CsvTable table({"family_id", "params", "deficit_thm1", "deficit_euclidean_form"});
    Json summary = Json::object();
    try {
        for (const Json& fam : doc["families"]) {
            const std::string id = fam.at("id").get<std::string>();
            const std::string type = fam.at("type").get<std::string>();
            double min_mink = std::numeric_limits<double>::infinity();
            double min_euc = std::numeric_limits<double>::infinity();
            int members = 0;
            int skipped = 0;
            auto record = [&](const std::string& params, const GeometricSummary& s) {
                const double mink = minkowski_deficit_hyperbolic(s).deficit;
                const double euc = weaker_inequalities_hyperbolic(s)[2].deficit;
                table.cell(id).cell(params).cell(mink).cell(euc);
                table.end_row();
                min_mink = std::min(min_mink, mink);
                min_euc = std::min(min_euc, euc);
                ++members;
            };
            if (type == "sphere" || type == "disk") {
                for (const Json& jr : fam.at("radii")) {
                    const double r = jr.get<double>();
                    const GeometricSummary s =
                        type == "sphere" ? sphere_geometry(SpaceKind::Hyperbolic, r) : geodesic_disk_limits(r);
                    record((type == "sphere" ? "r=" : "R=") + format_double(r), s);
                }
            } else if (type == "radial_graph") {
                RadialGraphSpec spec = sphere_spec(SpaceKind::Hyperbolic, fam.at("base_radius").get<double>());
                const int basis = fam.at("basis").get<int>();
                const int n = config.subdivision.value_or(fam.value("subdivision", 4));
                for (const Json& ja : fam.at("amplitudes")) {
                    const double a = ja.get<double>();
                    spec.perturbations = {{basis, a}};
                    const SurfaceMesh mesh = build_radial_graph(spec, n);
                    if (!convexity_report(mesh).is_plausibly_convex) {
                        ++skipped;
                        continue;
                    }
                    record("base=" + format_double(spec.base_radius) + ";basis=" + std::to_string(basis) +
                               ";amplitude=" + format_double(a) + ";subdivision=" + std::to_string(n),
                           summarize(mesh));
                }
            } else {
                throw InputError("unknown family type '" + type + "'");
            }
            summary[id] = {{"members", members},
                           {"skipped_nonconvex", skipped},
                           {"min_deficit_thm1", members ? Json(min_mink) : Json(nullptr)},
                           {"min_deficit_euclidean_form", members ? Json(min_euc) : Json(nullptr)}};
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed family entry: ") + e.what());
    }
    write_csv(config.output_dir / "sweep.csv", table);
    write_text_file(config.output_dir / "sweep_summary.json", dump(summary));
    write_metadata(config);
    return exit_code::kOk;
}

int run(const RunConfig& config) {
    try {
        switch (config.command) {
            case Command::Verify: return cmd_verify(config);
            case Command::Flow: return cmd_flow(config);
            case Command::Counterexample: return cmd_counterexample(config);
            case Command::SphereTable: return cmd_sphere_table(config);
            case Command::Sweep: return cmd_sweep(config);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const SpecError& e) {
        std::cerr << "error: invalid surface spec: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_code::kInternal;
    }
    return exit_code::kInternal;
}

int main(int argc, char** argv) {
    CLI::App app{"Parallel-surface flow and Minkowski-type inequalities in constant-curvature 3-spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig config;
    std::string out_dir = ".";
    std::string input;
    std::string grid;
    int subdivision = kDefaultSubdivision;
    double tolerance = 0.0;

    auto* verify = app.add_subcommand("verify", "Check the Minkowski-type inequality of a surface spec");
    verify->add_option("--input", input, "surface spec JSON")->required();
    verify->add_option("--subdivision", subdivision, "icosphere subdivision level (2-8)");
    verify->add_option("--tolerance", tolerance, "override the deficit tolerance");
    verify->add_option("--out", out_dir, "output directory");

    auto* flow = app.add_subcommand("flow", "Compare closed-form and discrete parallel-surface flow");
    flow->add_option("--input", input, "surface spec JSON")->required();
    flow->add_option("--grid", grid, "t grid start:stop:count");
    flow->add_option("--subdivision", subdivision, "icosphere subdivision level (2-8)");
    flow->add_option("--out", out_dir, "output directory");

    auto* counter = app.add_subcommand("counterexample", "Scan geodesic-disk limits for the false inequality");
    counter->add_option("--rmin", config.rmin, "smallest disk radius");
    counter->add_option("--rmax", config.rmax, "largest disk radius");
    counter->add_option("--step", config.step, "radius step");
    counter->add_option("--out", out_dir, "output directory");

    auto* table = app.add_subcommand("sphere-table", "Regression table of geodesic-sphere data");
    table->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "Empirical sweep of the Euclidean-form inequality in H^3");
    sweep->add_option("--family", input, "family definition JSON (built-in families if omitted)");
    sweep->add_option("--subdivision", subdivision, "subdivision for radial-graph families");
    sweep->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_code::kOk : exit_code::kUsage;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        if (active == verify) config.command = Command::Verify;
        if (active == flow) config.command = Command::Flow;
        if (active == counter) config.command = Command::Counterexample;
        if (active == table) config.command = Command::SphereTable;
        if (active == sweep) config.command = Command::Sweep;
        config.output_dir = out_dir;
        if (!input.empty()) config.input_path = input;
        auto given = [active](const char* name) {
            const CLI::Option* opt = active->get_option_no_throw(name);
            return opt != nullptr && opt->count() > 0;
        };
        if (given("--subdivision")) config.subdivision = subdivision;
        if (given("--tolerance")) config.tolerance = tolerance;
        if (!grid.empty()) config.grid = parse_grid(grid);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
    return run(config);
}

}  // namespace minkflow::cli
