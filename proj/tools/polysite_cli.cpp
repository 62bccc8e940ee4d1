// Command-line front end: solve placements from region + congestion files,
// cross-check them against the brute-force grid oracle, export GeoJSON, and
// reproduce the bundled case study.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polysite/case_study.hpp"
#include "polysite/errors.hpp"
#include "polysite/geometry.hpp"
#include "polysite/grid_search.hpp"
#include "polysite/serialize.hpp"
#include "polysite/traffic.hpp"
#include "polysite/wls.hpp"

namespace {

// 0 success, 1 input/parse error, 2 numerical error, 3 verification mismatch.
int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const polysite::SingularNormalMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

std::vector<polysite::PlacementReport> load_and_plan(const std::string& region_path,
                                                     const std::string& congestion_path,
                                                     polysite::PolygonRegion* region_out) {
    polysite::PolygonRegion region = polysite::load_region_file(region_path);
    const auto records = polysite::load_congestion_file(congestion_path);
    auto reports = polysite::plan_stations(region, records);
    if (region_out != nullptr) {
        *region_out = std::move(region);
    }
    return reports;
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    out << text;
    if (!out || !out.flush()) {
        throw polysite::IoError("cannot write output file: " + output_path);
    }
}

int cmd_solve(const std::string& region_path, const std::string& congestion_path,
              const std::string& window, const std::string& output_path, bool pretty) {
    auto reports = load_and_plan(region_path, congestion_path, nullptr);
    if (!window.empty()) {
        std::vector<polysite::PlacementReport> selected;
        for (auto& report : reports) {
            if (report.window == window) {
                selected.push_back(std::move(report));
            }
        }
        if (selected.empty()) {
            throw polysite::UnknownWindow("no report for window '" + window + "'");
        }
        reports = std::move(selected);
    }
    if (pretty) {
        std::cout << polysite::reports_to_table(reports);
        if (!output_path.empty()) {
            write_output(polysite::reports_to_json(reports), output_path);
        }
    } else {
        write_output(polysite::reports_to_json(reports), output_path);
    }
    return 0;
}

int cmd_verify(const std::string& region_path, const std::string& congestion_path,
               double tolerance) {
    polysite::PolygonRegion region;
    const auto reports = load_and_plan(region_path, congestion_path, &region);
    const polysite::LineSystem system = polysite::assemble(region.lines);
    const polysite::SearchBox box = polysite::default_search_box();

    bool all_ok = true;
    for (const auto& report : reports) {
        polysite::WeightVector weights;
        for (const auto& seg : report.per_segment) {
            weights.w.push_back(seg.weight);
            weights.labels.push_back(seg.segment_id);
        }
        const auto objective_at = [&](const polysite::Point2& p) {
            return polysite::objective(system, weights, p);
        };
        const polysite::OracleResult oracle = polysite::grid_minimize(objective_at, box);
        const double dx = std::abs(oracle.point.x - report.location.x);
        const double dy = std::abs(oracle.point.y - report.location.y);
        const bool ok = dx <= tolerance && dy <= tolerance;
        all_ok = all_ok && ok;
        std::printf("%-12s solver=(%.6f, %.6f) oracle=(%.6f, %.6f) delta=(%.2e, %.2e) %s\n",
                    report.window.c_str(), report.location.x, report.location.y, oracle.point.x,
                    oracle.point.y, dx, dy, ok ? "PASS" : "FAIL");
    }
    return all_ok ? 0 : 3;
}

int cmd_export_geojson(const std::string& region_path, const std::string& congestion_path,
                       const std::string& output_path) {
    polysite::PolygonRegion region;
    const auto reports = load_and_plan(region_path, congestion_path, &region);
    write_output(polysite::to_geojson(region, reports), output_path);
    return 0;
}

void print_demo_row(const char* label, const char* published, const polysite::Point2* printed,
                    const polysite::Point2& recomputed, const char* note) {
    char printed_buf[48] = "-";
    if (printed != nullptr) {
        std::snprintf(printed_buf, sizeof(printed_buf), "(%.4f, %.4f)", printed->x, printed->y);
    }
    char recomputed_buf[48];
    std::snprintf(recomputed_buf, sizeof(recomputed_buf), "(%.4f, %.4f)", recomputed.x,
                  recomputed.y);
    std::printf("%-12s %-20s %-20s %-20s %s\n", label, published, printed_buf, recomputed_buf,
                note);
}

// Reproduces the bundled case study and annotates where the published
// figures differ from what the data yields.
int cmd_demo() {
    namespace cs = polysite::case_study;
    const polysite::PolygonRegion district = cs::district();
    const polysite::LineSystem derived = polysite::assemble(district.lines);
    const auto records = cs::rush_hour();

    const polysite::Solution triangle = polysite::solve_ls(cs::triangle_system());
    const polysite::Solution printed = polysite::solve_ls(cs::printed_system());
    const polysite::Solution unweighted = polysite::solve_ls(derived);
    const polysite::Solution morning = polysite::solve_wls(
        derived, polysite::weights_for_window(records, district, "morning"));
    const polysite::Solution afternoon = polysite::solve_wls(
        derived, polysite::weights_for_window(records, district, "afternoon"));

    std::printf("%-12s %-20s %-20s %-20s %s\n", "computation", "published", "as-printed",
                "recomputed", "note");
    print_demo_row("triangle", "(0.9753, 1.2190)", nullptr, triangle.point,
                   "published value rounds the closed-form solution");
    print_demo_row("unweighted", "(3.5500, 5.7100)", &printed.point, unweighted.point,
                   "as-printed row EF disagrees with the segment geometry; "
                   "recomputed uses lines derived from the vertices");
    print_demo_row("morning", "(3.3000, 3.7000)", nullptr, morning.point,
                   "published arithmetic not reproducible from its own matrices");
    print_demo_row("afternoon", "(15.9608, 7.8570)", nullptr, afternoon.point,
                   "published arithmetic not reproducible from its own matrices");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal station placement from congestion-weighted boundary-line distances"};
    app.require_subcommand(1);

    std::string region_path;
    std::string congestion_path;
    std::string window;
    std::string output_path;
    double tolerance = 0.01;
    bool pretty = false;

    CLI::App* solve = app.add_subcommand(
        "solve", "Solve the weighted placement for every window (or one with --window)");
    solve->add_option("--region", region_path, "Region document (JSON)")->required();
    solve->add_option("--congestion", congestion_path, "Congestion table (CSV)")->required();
    solve->add_option("--window", window, "Only report this window");
    solve->add_option("--output", output_path, "Write the report document here instead of stdout");
    solve->add_flag("--pretty", pretty, "Print a human-readable table");

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check every placement against the brute-force grid oracle");
    verify->add_option("--region", region_path, "Region document (JSON)")->required();
    verify->add_option("--congestion", congestion_path, "Congestion table (CSV)")->required();
    verify->add_option("--tolerance", tolerance, "Max |solver - oracle| per axis (map units)")
        ->check(CLI::PositiveNumber);

    CLI::App* demo = app.add_subcommand(
        "demo", "Reproduce the bundled case study and annotate discrepancies");

    CLI::App* export_geojson = app.add_subcommand(
        "export-geojson", "Write the region and all placements as a GeoJSON FeatureCollection");
    export_geojson->add_option("--region", region_path, "Region document (JSON)")->required();
    export_geojson->add_option("--congestion", congestion_path, "Congestion table (CSV)")
        ->required();
    export_geojson->add_option("--output", output_path, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*solve) {
        return run_guarded(
            [&] { return cmd_solve(region_path, congestion_path, window, output_path, pretty); });
    }
    if (*verify) {
        return run_guarded([&] { return cmd_verify(region_path, congestion_path, tolerance); });
    }
    if (*demo) {
        return run_guarded([] { return cmd_demo(); });
    }
    if (*export_geojson) {
        return run_guarded(
            [&] { return cmd_export_geojson(region_path, congestion_path, output_path); });
    }
    return 1;
}
