// delmorse command line front end. Links against the shared library through
// the public C interface only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delmorse.h"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse, 3 degeneracy.
int exit_code_for(dm_status st) {
    switch (st) {
        case DM_OK: return 0;
        case DM_ERR_VERIFY: return 1;
        case DM_ERR_PARSE: return 2;
        case DM_ERR_INVALID: return 2;
        case DM_ERR_DEGENERATE: return 3;
        default: return 2;
    }
}

[[noreturn]] void die(dm_status st) {
    std::cerr << "error: " << dm_last_error() << "\n";
    if (st == DM_ERR_DEGENERATE)
        std::cerr << "hint: run 'delmorse perturb --magnitude 1e-6' on the input first\n";
    std::exit(exit_code_for(st));
}

void check(dm_status st) {
    if (st != DM_OK) die(st);
}

struct CommonOpts {
    std::string cap = "inf";
    int max_dim = -1;
    int threads = 1;
    double eps = 1e-9;
    double eps_gp = 1e-7;
    bool skip_gp = false;
    uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_cap = true) {
    if (with_cap) cmd->add_option("--cap", c.cap, "squared radius cap (decimal or 'inf')");
    cmd->add_option("--max-dim", c.max_dim, "maximal simplex dimension (-1: unbounded)");
    cmd->add_option("--threads", c.threads, "worker threads for construction");
    cmd->add_option("--eps", c.eps, "classification tolerance");
    cmd->add_option("--eps-gp", c.eps_gp, "general position tolerance");
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_flag("--skip-gp-check", c.skip_gp, "build without checking general position");
}

double parse_cap(const std::string& s) {
    if (s == "inf" || s == "+inf") return HUGE_VAL;
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "error: bad cap value '" << s << "'\n";
    std::exit(2);
}

dm_options make_options(const CommonOpts& c) {
    dm_options opt;
    dm_options_init(&opt);
    opt.sq_radius_cap = parse_cap(c.cap);
    opt.max_dim = c.max_dim;
    opt.threads = c.threads;
    opt.eps = c.eps;
    opt.eps_gp = c.eps_gp;
    opt.skip_gp_check = c.skip_gp ? 1 : 0;
    return opt;
}

const std::map<std::string, dm_complex_type> kTypeNames = {
    {"cech", DM_COMPLEX_CECH},         {"delcech", DM_COMPLEX_DELCECH},
    {"delaunay", DM_COMPLEX_DELAUNAY}, {"wrap", DM_COMPLEX_WRAP},
    {"selective", DM_COMPLEX_SELECTIVE}};

dm_complex_type parse_type(const std::string& name) {
    auto it = kTypeNames.find(name);
    if (it == kTypeNames.end()) {
        std::cerr << "error: unknown complex type '" << name << "'\n";
        std::exit(2);
    }
    return it->second;
}

// E flag: 'all', 'empty', or a comma-separated vertex list.
struct SelectiveArg {
    bool all = false;
    std::vector<int32_t> list;
};

SelectiveArg parse_selective(const std::string& s, int point_count) {
    SelectiveArg out;
    if (s == "all") {
        out.all = true;
        for (int v = 0; v < point_count; ++v) out.list.push_back(v);
        return out;
    }
    if (s == "empty" || s.empty()) return out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.list.push_back(std::stoi(item));
        } catch (const std::exception&) {
            std::cerr << "error: bad vertex index '" << item << "' in --E\n";
            std::exit(2);
        }
        if (out.list.back() < 0 || out.list.back() >= point_count) {
            std::cerr << "error: vertex " << out.list.back() << " out of range in --E\n";
            std::exit(2);
        }
    }
    return out;
}

dm_points* load_points(const std::string& path) {
    dm_points* pts = nullptr;
    check(dm_points_read(path.c_str(), &pts));
    return pts;
}

bool is_points_file(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return line.compare(i, 3, "dim") == 0;
    }
    return false;
}

void write_or_print_complex(dm_complex* cx, const std::string& output) {
    if (output.empty() || output == "-") {
        check(dm_complex_write(cx, "/dev/stdout"));
    } else {
        check(dm_complex_write(cx, output.c_str()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cech, Delaunay-Cech, Delaunay, selective Delaunay and Wrap complexes: "
                 "radius-function gradients, verified collapses, persistence barcodes"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string input, input2, output, type_name = "delaunay", e_arg, gradient_e = "all",
                                       from_name, to_name;
    std::vector<std::string> compare_types;
    double magnitude = 1e-6;
    CommonOpts copts;

    auto* build = app.add_subcommand("build", "build a complex and write its file");
    build->add_option("input", input, "point file")->required();
    build->add_option("--type", type_name, "cech|delcech|delaunay|selective|wrap");
    build->add_option("--E", e_arg, "selective set: vertex list, 'all' or 'empty'");
    build->add_option("--output,-o", output, "output path (default stdout)");
    add_common(build, copts);

    auto* gradient = app.add_subcommand("gradient", "gradient of a radius function");
    gradient->add_option("input", input, "point file")->required();
    gradient->add_option("--E", gradient_e, "selective set: vertex list, 'all' or 'empty'");
    gradient->add_option("--output,-o", output, "output path (default stdout)");
    add_common(gradient, copts);

    auto* collapse = app.add_subcommand("collapse", "collapse sequence between two complexes");
    collapse->add_option("input", input, "point file")->required();
    collapse->add_option("--from", from_name, "cech|delcech|delaunay|wrap")->required();
    collapse->add_option("--to", to_name, "cech|delcech|delaunay|wrap")->required();
    collapse->add_option("--output,-o", output, "output path (default stdout)");
    add_common(collapse, copts);

    auto* persistence = app.add_subcommand("persistence", "barcode of a filtration");
    persistence->add_option("input", input, "point file or complex file")->required();
    persistence->add_option("--type", type_name, "filtration type for point input");
    persistence->add_option("--E", e_arg, "selective set for --type selective");
    persistence->add_option("--output,-o", output, "output CSV path (default stdout)");
    add_common(persistence, copts);

    auto* compare = app.add_subcommand("compare", "compare barcodes across filtrations");
    compare->add_option("input", input, "point file")->required();
    compare->add_option("--types", compare_types,
                        "filtration types to compare (default: all four)")
        ->delimiter(',');
    add_common(compare, copts);

    auto* checkgp = app.add_subcommand("checkgp", "report general position violations");
    checkgp->add_option("input", input, "point file")->required();
    add_common(checkgp, copts, false);

    auto* perturb = app.add_subcommand("perturb", "jitter coordinates to restore general position");
    perturb->add_option("input", input, "point file")->required();
    perturb->add_option("--magnitude", magnitude, "perturbation magnitude")->default_val(1e-6);
    perturb->add_option("--output,-o", output, "output path (default stdout)");
    add_common(perturb, copts, false);

    auto* zigzag = app.add_subcommand("zigzag", "verify the diagram connecting two point sets");
    zigzag->add_option("input", input, "first point file")->required();
    zigzag->add_option("input2", input2, "second point file")->required();
    add_common(zigzag, copts);

    CLI11_PARSE(app, argc, argv);
    dm_options opt = make_options(copts);

    if (build->parsed()) {
        dm_complex_type type = parse_type(type_name);
        if (!e_arg.empty() && type != DM_COMPLEX_SELECTIVE) {
            std::cerr << "error: --E is only accepted with --type selective\n";
            return 2;
        }
        dm_points* pts = load_points(input);
        SelectiveArg E = parse_selective(e_arg, dm_points_count(pts));
        if (type == DM_COMPLEX_CECH && dm_points_count(pts) > 20 && opt.max_dim < 0)
            std::cerr << "warning: unbounded Cech complex of " << dm_points_count(pts)
                      << " points may exceed 1e6 simplices; consider --max-dim\n";
        dm_complex* cx = nullptr;
        check(dm_complex_build(pts, type, E.list.data(), static_cast<int32_t>(E.list.size()),
                               &opt, &cx));
        write_or_print_complex(cx, output);
        dm_complex_free(cx);
        dm_points_free(pts);
        return 0;
    }

    if (gradient->parsed()) {
        dm_points* pts = load_points(input);
        SelectiveArg E = parse_selective(gradient_e, dm_points_count(pts));
        dm_gradient* g = nullptr;
        check(dm_gradient_build(pts, E.list.data(), static_cast<int32_t>(E.list.size()),
                                E.all ? 1 : 0, &opt, &g));
        check(dm_gradient_write(g, output.empty() ? "/dev/stdout" : output.c_str()));
        std::cerr << "intervals: " << dm_gradient_interval_count(g)
                  << ", critical: " << dm_gradient_critical_count(g) << "\n";
        dm_gradient_free(g);
        dm_points_free(pts);
        return 0;
    }

    if (collapse->parsed()) {
        dm_complex_type from = parse_type(from_name);
        dm_complex_type to = parse_type(to_name);
        if (from == DM_COMPLEX_SELECTIVE || to == DM_COMPLEX_SELECTIVE ||
            static_cast<int>(from) >= static_cast<int>(to)) {
            std::cerr << "error: --to must name a complex downstream of --from "
                         "(cech > delcech > delaunay > wrap)\n";
            return 2;
        }
        dm_points* pts = load_points(input);
        dm_collapse* c = nullptr;
        dm_status st = dm_collapse_build(pts, from, to, &opt, &c);
        if (st != DM_OK && st != DM_ERR_VERIFY) die(st);
        check(dm_collapse_write(c, output.empty() ? "/dev/stdout" : output.c_str()));
        if (dm_collapse_verified(c)) {
            std::cerr << "verified: " << dm_collapse_step_count(c) << " steps\n";
        } else {
            std::cerr << "verification FAILED: " << dm_last_error() << "\n";
        }
        const int code = dm_collapse_verified(c) ? 0 : 1;
        dm_collapse_free(c);
        dm_points_free(pts);
        return code;
    }

    if (persistence->parsed()) {
        dm_complex* cx = nullptr;
        dm_points* pts = nullptr;
        if (is_points_file(input)) {
            pts = load_points(input);
            dm_complex_type type = parse_type(type_name);
            SelectiveArg E = parse_selective(e_arg, dm_points_count(pts));
            check(dm_complex_build(pts, type, E.list.data(),
                                   static_cast<int32_t>(E.list.size()), &opt, &cx));
        } else {
            check(dm_complex_read(input.c_str(), &cx));
        }
        dm_barcode* bc = nullptr;
        check(dm_barcode_compute(cx, &bc));
        check(dm_barcode_write(bc, output.empty() ? "/dev/stdout" : output.c_str()));
        dm_barcode_free(bc);
        dm_complex_free(cx);
        dm_points_free(pts);
        return 0;
    }

    if (compare->parsed()) {
        if (compare_types.empty()) compare_types = {"cech", "delcech", "delaunay", "wrap"};
        if (compare_types.size() < 2) {
            std::cerr << "error: need at least two filtration types to compare\n";
            return 2;
        }
        dm_points* pts = load_points(input);
        std::vector<dm_barcode*> barcodes;
        for (const auto& name : compare_types) {
            dm_complex_type type = parse_type(name);
            if (type == DM_COMPLEX_SELECTIVE) {
                std::cerr << "error: compare works on the four named filtrations\n";
                return 2;
            }
            dm_complex* cx = nullptr;
            check(dm_complex_build(pts, type, nullptr, 0, &opt, &cx));
            dm_barcode* bc = nullptr;
            check(dm_barcode_compute(cx, &bc));
            barcodes.push_back(bc);
            dm_complex_free(cx);
        }
        int32_t equal = 0;
        char* diff = nullptr;
        check(dm_barcode_equal(barcodes.data(), static_cast<int32_t>(barcodes.size()), copts.eps,
                               &equal, &diff));
        if (equal) {
            std::cout << "EQUAL\n";
        } else {
            std::cout << "DIFFER\n" << (diff ? diff : "");
        }
        dm_string_free(diff);
        for (auto* bc : barcodes) dm_barcode_free(bc);
        dm_points_free(pts);
        return equal ? 0 : 1;
    }

    if (checkgp->parsed()) {
        dm_points* pts = load_points(input);
        int32_t count = 0;
        char* report = nullptr;
        check(dm_points_check_general_position(pts, copts.eps_gp, &count, &report));
        if (report && *report) std::cout << report;
        dm_string_free(report);
        std::cout << (count == 0 ? "general position: ok" : "violations: " + std::to_string(count))
                  << "\n";
        dm_points_free(pts);
        return count == 0 ? 0 : 3;
    }

    if (perturb->parsed()) {
        dm_points* pts = load_points(input);
        dm_points* jittered = nullptr;
        check(dm_points_perturb(pts, magnitude, copts.seed, &jittered));
        check(dm_points_write(jittered, output.empty() ? "/dev/stdout" : output.c_str()));
        dm_points_free(jittered);
        dm_points_free(pts);
        return 0;
    }

    if (zigzag->parsed()) {
        dm_points* x = load_points(input);
        dm_points* y = load_points(input2);
        int32_t all_hold = 0;
        char* report = nullptr;
        check(dm_zigzag_connect(x, y, &opt, &all_hold, &report));
        if (report) std::cout << report;
        dm_string_free(report);
        std::cout << (all_hold ? "DIAGRAM OK" : "DIAGRAM FAILED") << "\n";
        dm_points_free(y);
        dm_points_free(x);
        return all_hold ? 0 : 1;
    }

    return 2;
}
