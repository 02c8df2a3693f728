// numrad: numerical range, numerical radius and Crawford number toolkit.
//
// Subcommands: radius, bounds, diagnose, commutator, range, fuzz.
// Exit codes: 0 success, 1 invariant violation or computation failure,
// 2 usage or input errors.

#include "numrad/bounds.hpp"
#include "numrad/commutator.hpp"
#include "numrad/diagnostics.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/fuzz.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/report_json.hpp"
#include "numrad/support.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace numrad;

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_kv(const char* key, const std::string& value) {
    std::printf("%-16s = %s\n", key, value.c_str());
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

int cmd_radius(const std::string& file, std::size_t grid, const std::string& json_path) {
    const ComplexMatrix a = parse_matrix(file);
    const RadiusResult r = numerical_radius(a, grid);
    const CrawfordResult c = crawford_number(a, grid);
    print_kv("dim", std::to_string(a.dim()));
    print_kv("w", fmt9(r.value));
    print_kv("theta_star", fmt9(r.theta_star));
    print_kv("crawford", fmt9(c.value));
    print_kv("origin_inside", c.origin_inside ? "true" : "false");

    nlohmann::ordered_json doc = to_json(r);
    doc["crawford"] = c.value;
    doc["origin_inside"] = c.origin_inside;
    write_json(json_path, doc);
    return 0;
}

int cmd_bounds(const std::string& file, std::size_t grid, const std::string& json_path) {
    const ComplexMatrix a = parse_matrix(file);
    const BoundsReport r = bounds_report(a, grid);
    print_kv("dim", std::to_string(a.dim()));
    print_kv("norm", fmt9(r.norm));
    print_kv("w", fmt9(r.w));
    print_kv("re_norm", fmt9(r.re_norm));
    print_kv("im_norm", fmt9(r.im_norm));
    print_kv("c_re", fmt9(r.c_re));
    print_kv("c_im", fmt9(r.c_im));
    print_kv("classical_lo", fmt9(r.classical_lo));
    print_kv("b_gap", fmt9(r.b_gap));
    std::printf("%-16s = %-15s sqrt = %s\n", "kittaneh_sq", fmt9(r.kittaneh_sq).c_str(),
                fmt9(std::sqrt(r.kittaneh_sq)).c_str());
    std::printf("%-16s = %-15s sqrt = %s\n", "b_sq_gap", fmt9(r.b_sq_gap).c_str(),
                fmt9(std::sqrt(r.b_sq_gap)).c_str());
    std::printf("%-16s = %-15s sqrt = %s\n", "b_bp", fmt9(r.b_bp).c_str(),
                fmt9(std::sqrt(r.b_bp)).c_str());
    std::printf("%-16s = %-15s sqrt = %s\n", "b_crawford", fmt9(r.b_crawford).c_str(),
                fmt9(std::sqrt(r.b_crawford)).c_str());
    std::printf("%-16s = %-15s root4 = %s\n", "b4_first", fmt9(r.b4_first).c_str(),
                fmt9(std::pow(r.b4_first, 0.25)).c_str());
    std::printf("%-16s = %-15s root4 = %s\n", "b4_second", fmt9(r.b4_second).c_str(),
                fmt9(std::pow(r.b4_second, 0.25)).c_str());
    std::printf("%-16s = %-15s root4 = %s\n", "b4_bag5", fmt9(r.b4_bag5).c_str(),
                fmt9(std::pow(r.b4_bag5, 0.25)).c_str());
    std::printf("%-16s = %-15s root4 = %s\n", "b4_bhunia", fmt9(r.b4_bhunia).c_str(),
                fmt9(std::pow(r.b4_bhunia, 0.25)).c_str());
    print_kv("chain_ok", r.chain_ok ? "true" : "false");
    for (const std::string& f : r.chain_failures) std::printf("chain failure: %s\n", f.c_str());
    write_json(json_path, to_json(r));
    return r.chain_ok ? 0 : 1;
}

int cmd_diagnose(const std::string& file, double tol, const std::string& json_path) {
    const ComplexMatrix a = parse_matrix(file);
    const DiagnosticsReport half = check_half_norm_equality(a, tol);
    const DiagnosticsReport kit = check_kittaneh_equality(a, tol);
    const CircularDiskReport disk = circular_disk_report(a, tol);

    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::printf("half-norm case (w = norm/2):\n");
    print_kv("  case_half_norm", flag(half.case_half_norm));
    print_kv("  norms_match", flag(half.norms_match));
    print_kv("  theta_profile_ok", flag(half.theta_profile_ok));
    print_kv("  norm_identity_ok", flag(half.norm_identity_ok));
    std::printf("kittaneh case (w^2 = ||A*A+AA*||/4):\n");
    print_kv("  case_kittaneh", flag(kit.case_kittaneh));
    print_kv("  norms_match", flag(kit.norms_match));
    print_kv("  theta_profile_ok", flag(kit.theta_profile_ok));
    print_kv("  witnesses_ok", flag(kit.witnesses_ok));
    std::printf("disk report:\n");
    print_kv("  disk", flag(disk.disk));
    print_kv("  radius", fmt9(disk.radius));
    print_kv("  matches_half_norm", flag(disk.matches_half_norm));
    print_kv("  matches_kittaneh", flag(disk.matches_kittaneh));

    nlohmann::ordered_json doc;
    doc["half_norm"] = to_json(half);
    doc["kittaneh"] = to_json(kit);
    doc["disk_report"] = to_json(disk);
    write_json(json_path, doc);

    const bool ok = half.norms_match && half.theta_profile_ok && half.norm_identity_ok &&
                    kit.norms_match && kit.theta_profile_ok && kit.witnesses_ok &&
                    (!half.case_half_norm || half.case_kittaneh);
    return ok ? 0 : 1;
}

int cmd_commutator(const std::string& file_a, const std::string& file_b, std::size_t grid,
                   const std::string& json_path) {
    const ComplexMatrix a = parse_matrix(file_a);
    const ComplexMatrix b = parse_matrix(file_b);
    const CommutatorReport r = commutator_report(a, b, grid);
    print_kv("nu", fmt9(r.nu));
    print_kv("w(AB+BA)", fmt9(r.w_true_plus));
    print_kv("w(AB-BA)", fmt9(r.w_true_minus));
    std::printf("%-16s = %-15s b_hk = %-15s b_fong = %s\n", "b_corth2",
                fmt9(r.b_corth2).c_str(), fmt9(r.b_hk).c_str(), fmt9(r.b_fong).c_str());
    print_kv("b_th2", fmt9(r.b_th2));
    print_kv("b_corth3_first", fmt9(r.b_corth3_first));
    print_kv("b_corth3_second", fmt9(r.b_corth3_second));
    print_kv("chain_ok", r.chain_ok ? "true" : "false");
    for (const std::string& f : r.chain_failures) std::printf("chain failure: %s\n", f.c_str());
    write_json(json_path, to_json(r));
    return r.chain_ok ? 0 : 1;
}

int cmd_range(const std::string& file, std::size_t points, const std::string& json_path) {
    const ComplexMatrix a = parse_matrix(file);
    const SupportProfile p = range_boundary(a, points);
    std::printf("theta,re_boundary,im_boundary,part_norm\n");
    for (const SupportSample& s : p.samples) {
        std::printf("%s,%s,%s,%s\n", fmt17(s.theta).c_str(),
                    fmt17(s.boundary_point.real()).c_str(),
                    fmt17(s.boundary_point.imag()).c_str(), fmt17(s.part_norm).c_str());
    }
    write_json(json_path, to_json(p));
    return 0;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& json_path) {
    const FuzzResult r = run_fuzz(cfg);
    for (const FuzzCellStats& c : r.cells) {
        std::printf("%-16s dim %zu: %zu checks\n", to_string(c.kind).c_str(), c.dim, c.checks);
    }
    for (const FuzzViolation& v : r.violations) {
        std::printf("VIOLATION %s dim %zu index %zu: %s\n", to_string(v.kind).c_str(), v.dim,
                    v.index, v.check.c_str());
        for (const ComplexMatrix& m : v.matrices)
            std::printf("  %s\n", matrix_to_string(m).c_str());
    }
    std::printf("total: %zu checks, %zu violations, %.1f s\n", r.total_checks,
                r.violations.size(), r.elapsed_seconds);

    if (!json_path.empty()) {
        nlohmann::ordered_json doc;
        doc["total_checks"] = r.total_checks;
        doc["elapsed_seconds"] = r.elapsed_seconds;
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const FuzzCellStats& c : r.cells) {
            nlohmann::ordered_json cell;
            cell["kind"] = to_string(c.kind);
            cell["dim"] = c.dim;
            cell["checks"] = c.checks;
            cells.push_back(std::move(cell));
        }
        doc["cells"] = std::move(cells);
        nlohmann::ordered_json viols = nlohmann::ordered_json::array();
        for (const FuzzViolation& v : r.violations) {
            nlohmann::ordered_json item;
            item["kind"] = to_string(v.kind);
            item["dim"] = v.dim;
            item["index"] = v.index;
            item["check"] = v.check;
            nlohmann::ordered_json mats = nlohmann::ordered_json::array();
            for (const ComplexMatrix& m : v.matrices) mats.push_back(serialize_matrix(m));
            item["matrices"] = std::move(mats);
            viols.push_back(std::move(item));
        }
        doc["violations"] = std::move(viols);
        write_json(json_path, doc);
    }
    return r.violations.empty() ? 0 : 1;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
    const std::size_t pos = text.find("..");
    if (pos == std::string::npos) {
        const std::size_t d = std::stoul(text);
        return {d, d};
    }
    const std::size_t lo = std::stoul(text.substr(0, pos));
    const std::size_t hi = std::stoul(text.substr(pos + 2));
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("--dims expects a..b with 1 <= a <= b");
    return {lo, hi};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical range, radius and Crawford number toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, json_path, dims = "2..8", kind_arg;
    std::size_t grid = 720, points = 360, count = 200;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    unsigned threads = 0;

    CLI::App* radius = app.add_subcommand("radius", "numerical radius and Crawford number");
    radius->add_option("file", file, "matrix file")->required();
    radius->add_option("--grid", grid, "support-scan angles (default 720)");
    radius->add_option("--json", json_path, "write JSON report to path");

    CLI::App* bounds = app.add_subcommand("bounds", "all lower bounds and the ordering chain");
    bounds->add_option("file", file, "matrix file")->required();
    bounds->add_option("--grid", grid, "support-scan angles (default 720)");
    bounds->add_option("--json", json_path, "write JSON report to path");

    CLI::App* diagnose = app.add_subcommand("diagnose", "equality-case diagnostics");
    diagnose->add_option("file", file, "matrix file")->required();
    diagnose->add_option("--tol", tol, "equality detection tolerance (default 1e-8)");
    diagnose->add_option("--json", json_path, "write JSON report to path");

    CLI::App* commutator = app.add_subcommand("commutator", "w(AB +/- BA) upper bounds");
    commutator->add_option("file_a", file, "matrix file for A")->required();
    commutator->add_option("file_b", file_b, "matrix file for B")->required();
    commutator->add_option("--grid", grid, "support-scan angles (default 720)");
    commutator->add_option("--json", json_path, "write JSON report to path");

    CLI::App* range = app.add_subcommand("range", "boundary samples as CSV");
    range->add_option("file", file, "matrix file")->required();
    range->add_option("--points", points, "number of samples (default 360)");
    range->add_option("--json", json_path, "write JSON profile to path");

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized invariant sweep");
    fuzz->add_option("--kind", kind_arg, "ensemble kind (default: all random ensembles)");
    fuzz->add_option("--dims", dims, "dimension range a..b (default 2..8)");
    fuzz->add_option("--count", count, "matrices per dimension (default 200)");
    fuzz->add_option("--seed", seed, "stream seed (default 42)");
    fuzz->add_option("--tol", tol, "check tolerance (default 1e-8)");
    fuzz->add_option("--grid", grid, "support-scan angles (default 720)");
    fuzz->add_option("--threads", threads, "worker threads (default: hardware)");
    fuzz->add_option("--json", json_path, "write JSON summary to path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (radius->parsed()) return cmd_radius(file, grid, json_path);
        if (bounds->parsed()) return cmd_bounds(file, grid, json_path);
        if (diagnose->parsed()) return cmd_diagnose(file, tol, json_path);
        if (commutator->parsed()) return cmd_commutator(file, file_b, grid, json_path);
        if (range->parsed()) return cmd_range(file, points, json_path);
        if (fuzz->parsed()) {
            FuzzConfig cfg;
            if (!kind_arg.empty()) cfg.kinds = {parse_ensemble_kind(kind_arg)};
            std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(dims);
            cfg.count = count;
            cfg.seed = seed;
            cfg.tol = tol;
            cfg.grid = grid;
            cfg.threads = threads;
            return cmd_fuzz(cfg, json_path);
        }
    } catch (const MatrixParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
