// Command-line driver: every verification battery as a subcommand, with
// config file, CSV/JSON reports, and exit codes 0 (all pass), 1 (some check
// failed), 2 (usage/config error).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "htri/config.hpp"
#include "htri/errors.hpp"
#include "htri/report.hpp"
#include "htri/schur.hpp"
#include "htri/suites.hpp"

namespace {

using namespace htri;

int write_output(const std::string& text, const RunConfig& cfg) {
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << cfg.out << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
    const std::string text = cfg.format == "json" ? to_json(reports, cfg.stable_output)
                                                  : to_csv(reports, cfg.stable_output);
    if (const int rc = write_output(text, cfg)) return rc;
    return all_passed(reports) ? 0 : 1;
}

std::string bounds_csv(const std::vector<schur::BoundsRow>& rows) {
    std::string text = "check_id,p,q,lower,upper\n";
    for (const auto& r : rows) {
        text += "bounds," + format_double(r.p) + "," + format_double(r.q) + "," +
                format_double(r.lower) + "," +
                (r.upper ? format_double(*r.upper) : "inf") + "\n";
    }
    return text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification toolkit for the Bergman projection "
                 "norm bounds on the Hartogs triangle"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string config_path, format, out_path;
    std::vector<std::string> tol_overrides;
    std::optional<int> radial, panels, angular, depth_opt, series_cap;
    std::optional<double> grading;
    bool stable = false;

    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_flag("--stable-output", stable, "zero runtime_ms for byte-identical runs");
    app.add_option("--radial-nodes", radial, "GL nodes per radial panel");
    app.add_option("--panels", panels, "graded panels toward each endpoint");
    app.add_option("--angular-nodes", angular, "baseline angular node count");
    app.add_option("--grading", grading, "geometric mesh ratio");
    app.add_option("--series-cap", series_cap, "factor-series coefficient cap");
    app.add_option("--tol", tol_overrides,
                   "tolerance override check_id=value (repeatable)");

    auto* cmd_identities = app.add_subcommand("identities", "gamma/2F1 identity corpus");

    auto* cmd_lemma = app.add_subcommand("lemma", "named verification suite");
    std::string lemma_id;
    std::optional<double> l_a, l_r2, l_c, l_t2, l_t;
    cmd_lemma->add_option("--id", lemma_id, "one of 2.1 2.2 2.3 2.4 2.5")->required();
    cmd_lemma->add_option("--a", l_a, "torus exponent (2.1)");
    cmd_lemma->add_option("--r2", l_r2, "|z|^2 (2.1)");
    cmd_lemma->add_option("--c", l_c, "weight exponent c (2.2)");
    cmd_lemma->add_option("--t2", l_t2, "weight exponent t (2.2)");
    cmd_lemma->add_option("--t", l_t, "Schur exponent (2.3)");
    cmd_lemma->add_option("--depth", depth_opt, "boundary path depth");

    auto* cmd_bounds = app.add_subcommand("bounds", "two-sided norm bound table");
    std::optional<double> b_p, b_pmin, b_pmax;
    std::optional<int> b_steps;
    cmd_bounds->add_option("--p", b_p, "single exponent");
    cmd_bounds->add_option("--pmin", b_pmin, "grid start");
    cmd_bounds->add_option("--pmax", b_pmax, "grid end");
    cmd_bounds->add_option("--steps", b_steps, "grid size");

    auto* cmd_lower = app.add_subcommand("lower-estimate", "ratio path toward the lower bound");
    double lo_p = 3.0;
    cmd_lower->add_option("--p", lo_p, "exponent in (4/3,4)")->required();
    cmd_lower->add_option("--depth", depth_opt, "boundary path depth");

    auto* cmd_rem = app.add_subcommand("remainder", "remainder-term ratios along the path");
    double rem_p = 3.0;
    cmd_rem->add_option("--p", rem_p, "exponent in (4/3,4)")->required();
    cmd_rem->add_option("--depth", depth_opt, "boundary path depth");

    auto* cmd_project = app.add_subcommand("project", "reproducing-property check");
    int pj = 0, pk = 0;
    cmd_project->add_option("--j", pj, "power of z1")->required();
    cmd_project->add_option("--k", pk, "power of z2")->required();

    auto* cmd_report = app.add_subcommand("report", "full verification run");
    bool report_all_flag = false;
    cmd_report->add_flag("--all", report_all_flag, "run every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
        if (!format.empty()) cfg.format = format;
        if (!out_path.empty()) cfg.out = out_path;
        if (stable) cfg.stable_output = true;
        if (radial) cfg.spec.radial_nodes = *radial;
        if (panels) cfg.spec.panels = *panels;
        if (angular) cfg.spec.angular_nodes = *angular;
        if (grading) cfg.spec.grading = *grading;
        if (series_cap) cfg.series_cap = *series_cap;
        if (depth_opt) cfg.depth = *depth_opt;
        cfg.spec.validate();
        for (const auto& ov : tol_overrides) {
            const auto eq = ov.find('=');
            if (eq == std::string::npos)
                throw DomainError("--tol expects check_id=value");
            cfg.set("tol." + ov.substr(0, eq), ov.substr(eq + 1));
        }

        if (*cmd_identities) return emit_reports(suites::identities(cfg), cfg);
        if (*cmd_lemma) {
            std::vector<VerificationReport> reports;
            if (lemma_id == "2.1") reports = suites::lemma21(cfg, l_a, l_r2);
            else if (lemma_id == "2.2") reports = suites::lemma22(cfg, l_c, l_t2);
            else if (lemma_id == "2.3") reports = suites::lemma23(cfg, l_t, depth_opt);
            else if (lemma_id == "2.4") reports = suites::lemma24(cfg);
            else if (lemma_id == "2.5") reports = suites::lemma25(cfg);
            else throw DomainError("unknown lemma id '" + lemma_id + "'");
            return emit_reports(reports, cfg);
        }
        if (*cmd_bounds) {
            std::vector<double> grid;
            if (b_p) {
                grid.push_back(*b_p);
            } else {
                const double lo = b_pmin.value_or(1.4), hi = b_pmax.value_or(3.9);
                const int n = b_steps.value_or(11);
                if (n < 1) throw DomainError("bounds: steps must be positive");
                for (int i = 0; i < n; ++i)
                    grid.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0));
            }
            const auto rows = schur::bounds_table(grid);
            if (cfg.format == "json")
                return write_output(to_json(suites::bounds_reports(rows),
                                            cfg.stable_output),
                                    cfg);
            return write_output(bounds_csv(rows), cfg);
        }
        if (*cmd_lower) return emit_reports(suites::lower_estimate(cfg, lo_p, depth_opt), cfg);
        if (*cmd_rem) return emit_reports(suites::remainder(cfg, rem_p, depth_opt), cfg);
        if (*cmd_project) return emit_reports(suites::project_check(cfg, pj, pk), cfg);
        if (*cmd_report) {
            if (!report_all_flag) throw DomainError("report: pass --all");
            return emit_reports(suites::report_all(cfg), cfg);
        }
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
