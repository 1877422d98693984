// Command-line front end: parameter ranges, validity checks, dependence
// measures, sampling, region sweeps, and the falsification reproduction.
//
// Exit codes: 0 success, 2 invalid input, 3 admissibility/validity failure,
// 4 I/O failure, 5 falsification not confirmed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "extfgm/copula.hpp"
#include "extfgm/oracle.hpp"
#include "extfgm/sampler.hpp"
#include "extfgm/serialize.hpp"
#include "extfgm/validity.hpp"

namespace {

using nlohmann::json;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 6 significant digits for humans, 17 for machine output.
std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string interval_text(const extfgm::AdmissibleRange& range) {
    std::string s = "[" + fmt6(range.lower) + ", " + fmt6(range.upper) + "]";
    if (range.empty)
        s += " (EMPTY)";
    return s;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_range(double b, bool ebaid_min, bool ebaid_online, const std::string& format) {
    const extfgm::AdmissibleRange corrected = extfgm::corrected_range(b);
    extfgm::AdmissibleRange shown = corrected;
    if (ebaid_min)
        shown = extfgm::ebaid_range(b, extfgm::EbaidVariant::MinForm);
    else if (ebaid_online)
        shown = extfgm::ebaid_range(b, extfgm::EbaidVariant::OnlineForm);

    const bool published = ebaid_min || ebaid_online;
    if (published) {
        std::ostream& warn = format == "json" ? std::cerr : std::cout;
        warn << "WARNING: the " << (ebaid_min ? "min-form" : "online-form")
             << " published range is not a valid admissible range; the corrected range for b = "
             << fmt6(b) << " is " << interval_text(corrected) << "\n";
    }
    if (format == "json") {
        emit(json(shown));
    } else {
        std::cout << (published ? "published" : "corrected") << " range for b = " << fmt6(b)
                  << ": " << interval_text(shown) << "\n";
    }
    return 0;
}

int run_validate(double a, double b, const std::string& format) {
    const extfgm::CopulaParams params(a, b);
    const extfgm::AdmissibleRange corrected = extfgm::corrected_range(b);
    const bool ok = extfgm::is_admissible(params);
    if (format == "json") {
        emit(json{{"a", a}, {"b", b}, {"admissible", ok}, {"corrected", corrected}});
    } else if (ok) {
        std::cout << "ADMISSIBLE\n";
    } else {
        std::cout << "NOT ADMISSIBLE (corrected range " << interval_text(corrected) << ")\n";
    }
    return ok ? 0 : 3;
}

int run_measures(double a, double b, bool numeric, const std::string& format) {
    const extfgm::CopulaParams params(a, b);
    const auto measures = extfgm::closed_form_measures(params);
    const bool ok = extfgm::is_admissible(params);

    std::optional<extfgm::QuadratureResult> rho_q, tau_q;
    if (numeric) {
        rho_q = extfgm::rho_numeric(params, extfgm::kDefaultQuadNodes);
        tau_q = extfgm::tau_numeric(params, extfgm::kDefaultQuadNodes);
    }

    if (format == "json") {
        json j{{"a", a},
               {"b", b},
               {"admissible", ok},
               {"rho", measures.rho},
               {"tau", measures.tau}};
        if (numeric) {
            j["rho_numeric"] = rho_q->value;
            j["tau_numeric"] = tau_q->value;
            j["rho_abs_diff"] = std::abs(measures.rho - rho_q->value);
            j["tau_abs_diff"] = std::abs(measures.tau - tau_q->value);
            j["nodes_per_axis"] = rho_q->nodes_per_axis;
        }
        emit(j);
        return 0;
    }

    if (!ok) {
        std::cout << "WARNING: parameters lie outside the corrected admissible range "
                  << interval_text(extfgm::corrected_range(b))
                  << "; rho and tau below are formal values\n";
    }
    std::cout << "rho = " << fmt6(measures.rho) << "\n";
    std::cout << "tau = " << fmt6(measures.tau) << "\n";
    if (numeric) {
        std::cout << "rho_numeric = " << fmt6(rho_q->value)
                  << " (|diff| = " << fmt6(std::abs(measures.rho - rho_q->value)) << ")\n";
        std::cout << "tau_numeric = " << fmt6(tau_q->value)
                  << " (|diff| = " << fmt6(std::abs(measures.tau - tau_q->value)) << ")\n";
    }
    return 0;
}

void print_report(const char* label, const extfgm::GridReport& report) {
    std::cout << label << ": worst = " << fmt6(report.worst_value) << " at (u = "
              << fmt6(report.worst_u) << ", v = " << fmt6(report.worst_v) << "), grid "
              << report.grid_n << " -> " << (report.passed ? "PASS" : "FAIL") << "\n";
}

int run_check(double a, double b, int n, const std::string& format) {
    const extfgm::CopulaParams params(a, b);
    const extfgm::GridReport boundary = extfgm::boundary_check(params, n);
    const extfgm::GridReport dens = extfgm::density_min_scan(params, n);
    const extfgm::GridReport volume = extfgm::volume_check(params, n);
    const bool ok = boundary.passed && dens.passed && volume.passed;

    if (format == "json") {
        emit(json{{"a", a},
                  {"b", b},
                  {"passed", ok},
                  {"reports", json::array({boundary, dens, volume})}});
    } else {
        print_report("boundary    ", boundary);
        print_report("density sign", dens);
        print_report("cell volume ", volume);
        std::cout << (ok ? "all checks passed" : "checks FAILED") << "\n";
    }
    return ok ? 0 : 3;
}

int run_sample(double a, double b, std::size_t count, std::uint64_t seed,
               const std::string& out_path, const std::string& format) {
    const extfgm::CopulaParams params(a, b);
    const extfgm::SampleBatch batch = extfgm::sample(params, count, seed);

    const bool to_file = !out_path.empty();
    if (to_file) {
        std::ofstream out(out_path);
        if (!out)
            throw IoFailure("cannot open '" + out_path + "' for writing");
        extfgm::write_csv(out, batch);
        out.flush();
        if (!out)
            throw IoFailure("write to '" + out_path + "' failed");
    } else {
        extfgm::write_csv(std::cout, batch);
    }

    if (format == "csv")
        return 0;
    const double rho = extfgm::empirical_rho(batch);
    const double tau = extfgm::empirical_tau(batch);
    // Keep stdout machine-readable when the CSV itself went there.
    std::ostream& stats = to_file ? std::cout : std::cerr;
    if (format == "json") {
        json j{{"count", count},
               {"seed", seed},
               {"empirical_rho", rho},
               {"empirical_tau", tau}};
        if (to_file)
            j["out"] = out_path;
        stats << j.dump() << "\n";
    } else {
        stats << "empirical rho = " << fmt6(rho) << "\n";
        stats << "empirical tau = " << fmt6(tau) << "\n";
    }
    return 0;
}

int run_region(int steps, const std::string& out_path, const std::string& format) {
    if (steps < 2)
        throw extfgm::DomainViolation("region sweep needs at least 2 steps");

    struct Extreme {
        double value, a, b;
    };
    std::optional<Extreme> rho_min, rho_max, tau_min, tau_max;
    auto keep_min = [](std::optional<Extreme>& slot, double value, double a, double b) {
        if (!slot || value < slot->value)
            slot = Extreme{value, a, b};
    };
    auto keep_max = [](std::optional<Extreme>& slot, double value, double a, double b) {
        if (!slot || value > slot->value)
            slot = Extreme{value, a, b};
    };

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw IoFailure("cannot open '" + out_path + "' for writing");
    }
    std::ostream& csv = out_path.empty() ? std::cout : file;

    csv << "b,a_lower,a_upper,rho_min,rho_max,tau_min,tau_max\n";
    for (int i = 0; i < steps; ++i) {
        const double b = 2.0 * i / (steps - 1);
        const extfgm::AdmissibleRange range = extfgm::corrected_range(b);
        const auto lo = extfgm::closed_form_measures(extfgm::CopulaParams(range.lower, b));
        const auto hi = extfgm::closed_form_measures(extfgm::CopulaParams(range.upper, b));
        csv << fmt17(b) << ',' << fmt17(range.lower) << ',' << fmt17(range.upper) << ','
            << fmt17(lo.rho) << ',' << fmt17(hi.rho) << ',' << fmt17(lo.tau) << ','
            << fmt17(hi.tau) << "\n";
        keep_min(rho_min, lo.rho, range.lower, b);
        keep_max(rho_max, hi.rho, range.upper, b);
        keep_min(tau_min, lo.tau, range.lower, b);
        keep_max(tau_max, hi.tau, range.upper, b);
    }
    if (!out_path.empty()) {
        file.flush();
        if (!file)
            throw IoFailure("write to '" + out_path + "' failed");
    }

    if (format == "csv")
        return 0;
    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    if (format == "json") {
        summary << json{{"steps", steps},
                        {"rho_min", rho_min->value},
                        {"rho_min_a", rho_min->a},
                        {"rho_min_b", rho_min->b},
                        {"rho_max", rho_max->value},
                        {"rho_max_a", rho_max->a},
                        {"rho_max_b", rho_max->b},
                        {"tau_min", tau_min->value},
                        {"tau_min_a", tau_min->a},
                        {"tau_min_b", tau_min->b},
                        {"tau_max", tau_max->value},
                        {"tau_max_a", tau_max->a},
                        {"tau_max_b", tau_max->b}}
                       .dump()
                << "\n";
    } else {
        summary << "rho min = " << fmt6(rho_min->value) << " at (a = " << fmt6(rho_min->a)
                << ", b = " << fmt6(rho_min->b) << ")\n";
        summary << "rho max = " << fmt6(rho_max->value) << " at (a = " << fmt6(rho_max->a)
                << ", b = " << fmt6(rho_max->b) << ")\n";
        summary << "tau min = " << fmt6(tau_min->value) << " at (a = " << fmt6(tau_min->a)
                << ", b = " << fmt6(tau_min->b) << ")\n";
        summary << "tau max = " << fmt6(tau_max->value) << " at (a = " << fmt6(tau_max->a)
                << ", b = " << fmt6(tau_max->b) << ")\n";
    }
    return 0;
}

int run_falsify(const std::string& format) {
    const extfgm::FalsificationReport report = extfgm::falsify_published_ranges();
    if (format == "json") {
        emit(json(report));
    } else {
        const auto& one = report.empty_range;
        std::cout << "[1] min-form published range is empty at b = " << fmt6(one.b) << "\n";
        std::cout << "    published: " << interval_text(one.published) << "\n";
        std::cout << "    corrected: " << interval_text(one.corrected) << "\n";
        std::cout << "    density scan at corrected upper bound: min = "
                  << fmt6(one.corrected_upper_scan.worst_value) << " -> "
                  << (one.corrected_upper_scan.passed ? "PASS" : "FAIL") << "\n";
        std::cout << "    => " << (one.confirmed ? "CONFIRMED" : "NOT CONFIRMED") << "\n";

        const auto& two = report.rho_exceeds_one;
        std::cout << "[2] online-form published range admits (a = " << fmt6(two.a)
                  << ", b = " << fmt6(two.b) << "), which is not a copula\n";
        std::cout << "    published: " << interval_text(two.published) << "\n";
        std::cout << "    corrected: " << interval_text(two.corrected) << "\n";
        std::cout << "    formal rho (closed form) = " << fmt6(two.rho_formal)
                  << (two.rho_formal > 1.0 ? "  (> 1)" : "") << "\n";
        std::cout << "    rho (quadrature)         = " << fmt6(two.rho_quadrature.value) << "\n";
        std::cout << "    min density = " << fmt6(two.density.worst_value) << " at (u = "
                  << fmt6(two.density.worst_u) << ", v = " << fmt6(two.density.worst_v)
                  << ") -> " << (two.density.passed ? "PASS" : "FAIL") << "\n";
        std::cout << "    => " << (two.confirmed ? "CONFIRMED" : "NOT CONFIRMED") << "\n";
        std::cout << "falsification: " << (report.all_confirmed ? "2/2" : "NOT all")
                  << " confirmed\n";
    }
    return report.all_confirmed ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended FGM copula toolkit (corrected admissible ranges, dependence "
                 "measures, brute-force validity oracles, sampling)"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, std::string& slot,
                         std::vector<std::string> allowed) {
        cmd->add_option("--format", slot, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    double a = 0.0, b = 0.0;
    std::string fmt_range = "text", fmt_validate = "text", fmt_measures = "text",
                fmt_check = "text", fmt_sample = "text", fmt_region = "text",
                fmt_falsify = "text";
    bool ebaid_min = false, ebaid_online = false, numeric = false;
    int grid_n = 500, steps = 0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string out_path;

    CLI::App* range_cmd = app.add_subcommand("range", "admissible range of a for a given b");
    range_cmd->add_option("--b", b, "shape parameter")->required();
    auto* opt_min = range_cmd->add_flag("--ebaid-min", ebaid_min,
                                        "show the published min-form range (not valid)");
    auto* opt_online = range_cmd->add_flag("--ebaid-online", ebaid_online,
                                           "show the published online-form range (not valid)");
    opt_min->excludes(opt_online);
    add_format(range_cmd, fmt_range, {"text", "json"});

    CLI::App* validate_cmd = app.add_subcommand("validate", "is (a, b) an admissible pair");
    validate_cmd->add_option("--a", a, "dependence parameter")->required();
    validate_cmd->add_option("--b", b, "shape parameter")->required();
    add_format(validate_cmd, fmt_validate, {"text", "json"});

    CLI::App* measures_cmd = app.add_subcommand("measures", "Spearman rho and Kendall tau");
    measures_cmd->add_option("--a", a, "dependence parameter")->required();
    measures_cmd->add_option("--b", b, "shape parameter")->required();
    measures_cmd->add_flag("--numeric", numeric, "also compute quadrature values");
    add_format(measures_cmd, fmt_measures, {"text", "json"});

    CLI::App* check_cmd = app.add_subcommand("check", "brute-force copula checks on a grid");
    check_cmd->add_option("--a", a, "dependence parameter")->required();
    check_cmd->add_option("--b", b, "shape parameter")->required();
    check_cmd->add_option("--grid", grid_n, "grid resolution")->capture_default_str();
    add_format(check_cmd, fmt_check, {"text", "json"});

    CLI::App* sample_cmd = app.add_subcommand("sample", "draw pairs by conditional inversion");
    sample_cmd->add_option("--a", a, "dependence parameter")->required();
    sample_cmd->add_option("--b", b, "shape parameter")->required();
    sample_cmd->add_option("-n,--count", count, "number of pairs")->required();
    sample_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sample_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
    add_format(sample_cmd, fmt_sample, {"text", "json", "csv"});

    CLI::App* region_cmd = app.add_subcommand("region", "sweep b and tabulate range and measures");
    region_cmd->add_option("--steps", steps, "number of b values in [0,2]")->required();
    region_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
    add_format(region_cmd, fmt_region, {"text", "json", "csv"});

    CLI::App* falsify_cmd =
        app.add_subcommand("falsify", "reproduce both published-range counterexamples");
    add_format(falsify_cmd, fmt_falsify, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(range_cmd))
            return run_range(b, ebaid_min, ebaid_online, fmt_range);
        if (app.got_subcommand(validate_cmd))
            return run_validate(a, b, fmt_validate);
        if (app.got_subcommand(measures_cmd))
            return run_measures(a, b, numeric, fmt_measures);
        if (app.got_subcommand(check_cmd))
            return run_check(a, b, grid_n, fmt_check);
        if (app.got_subcommand(sample_cmd))
            return run_sample(a, b, count, seed, out_path, fmt_sample);
        if (app.got_subcommand(region_cmd))
            return run_region(steps, out_path, fmt_region);
        if (app.got_subcommand(falsify_cmd))
            return run_falsify(fmt_falsify);
    } catch (const extfgm::InadmissibleParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
