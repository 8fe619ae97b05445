#include "weightdec/lp.hpp"
#include "weightdec/quantum.hpp"
#include "weightdec/regions.hpp"
#include "weightdec/sweep.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace weightdec;

std::string anchor_str(const BoundaryPair& bp) {
    return "s=" + format_fixed9(bp.s) + " t=" + format_fixed9(bp.t) +
           " d=" + std::to_string(bp.d) + " D=" + std::to_string(bp.degree()) +
           " gamma=" + std::to_string(bp.gamma) + " delta=" + std::to_string(bp.delta);
}

void print_bounds(const BoundsResult& b) {
    if (b.matched)
        std::cout << "upper=" << b.upper << " lower=" << b.lower << " matched\n";
    else
        std::cout << "upper=" << b.upper << " lower=" << b.lower
                  << " gap=" << (b.upper - b.lower) << "\n";
    std::cout << "upper_anchor: " << anchor_str(b.upper_anchor) << "\n";
    if (b.lower_anchor)
        std::cout << "lower_anchor: " << anchor_str(*b.lower_anchor) << "\n";
    else
        std::cout << "lower_anchor: none\n";
    if (b.asymptotic_lower)
        std::cout << "note: lower bound is asymptotic (holds for sufficiently large n)\n";
}

void cmd_bounds(const std::vector<int>& nkl, const std::vector<double>& ratio) {
    if (!nkl.empty() && !ratio.empty())
        throw std::invalid_argument("bounds: give either n k l or --ratio, not both");
    if (!nkl.empty()) {
        const WeightInstance inst(nkl[0], nkl[1], nkl[2]);
        std::cout << "kappa=" << format_fixed9(inst.ratio().kappa)
                  << " lambda=" << format_fixed9(inst.ratio().lambda) << "\n";
        print_bounds(bounds_instance(inst));
    } else if (!ratio.empty()) {
        print_bounds(bounds(RatioPoint(ratio[0], ratio[1])));
    } else {
        throw std::invalid_argument("bounds: give n k l or --ratio kappa lambda");
    }
}

void cmd_sd(int d) {
    for (const BoundaryPair& bp : boundary_pairs(d))
        std::cout << "s=" << format_fixed9(bp.s) << " t=" << format_fixed9(bp.t)
                  << " D=" << bp.degree() << " gamma=" << bp.gamma
                  << " delta=" << bp.delta << "\n";
}

int cmd_verify(int n, int k, int l, const std::string& mode) {
    const WeightInstance inst(n, k, l);
    const ExactnessSummary sum = verify_exactness(inst, mode == "full");
    std::cout << "d=" << sum.d << " min_success=" << format_fixed9(sum.min_success)
              << " max_queries=" << sum.max_queries_used << " inputs=" << sum.inputs_checked
              << " mode=" << (sum.full_mode ? "full" : "symmetric") << "\n";
    std::cout << "anchor: " << anchor_str(sum.anchor) << "\n";
    if (sum.min_success >= 1.0 - 1e-9) return 0;
    std::cerr << "certification failed: success probability below 1 - 1e-9\n";
    return 1;
}

void cmd_sweep(int resolution, const std::string& out_path) {
    const SweepResult res = run_sweep(resolution);
    write_sweep_csv(res, out_path);
    std::cout << "cells=" << res.cells.size()
              << " matched_fraction=" << format_fixed9(res.matched_fraction)
              << " gap_le1_fraction=" << format_fixed9(res.gap_le1_fraction) << "\n";
    std::cout << "csv=" << out_path << "\n";
}

void cmd_degree(int n, int k, int l, int max_d) {
    const WeightInstance inst(n, k, l);
    if (n > kLpMaxN)
        throw resource_error("degree: n exceeds the dense LP cap");
    const int limit = max_d > 0 ? std::min(max_d, n) : n;
    int deg = -1;
    for (int D = 1; D <= limit; ++D)
        if (degree_feasible(inst, D)) { deg = D; break; }
    const BoundsResult b = bounds_instance(inst);
    if (deg < 0) {
        std::cout << "deg>" << limit << " (scan limit) region_upper=" << b.upper
                  << " region_lower=" << b.lower << "\n";
        return;
    }
    std::cout << "deg=" << deg << " qe_lower=" << (deg + 1) / 2
              << " region_upper=" << b.upper << " region_lower=" << b.lower << "\n";
}

void cmd_g(double kappa) {
    const int g = g_query_complexity(kappa);
    const BoundsResult b = bounds(RatioPoint(kappa, 0.5));
    std::cout << "g_complexity=" << g << "\n";
    std::cout << "bounds(kappa,0.5): upper=" << b.upper << " lower=" << b.lower
              << (b.matched ? " matched" : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds, exact-algorithm certification and degree oracle for "
                 "weight decision functions"};
    app.require_subcommand(1);
    int rc = 0;

    auto* sb = app.add_subcommand("bounds", "query upper/lower bounds for an instance or ratio point");
    std::vector<int> nkl;
    std::vector<double> ratio;
    sb->add_option("nkl", nkl, "n k l")->expected(0, 3);
    sb->add_option("--ratio", ratio, "kappa lambda")->expected(2);
    sb->callback([&] {
        if (!nkl.empty() && nkl.size() != 3)
            throw std::invalid_argument("bounds: expected n k l");
        cmd_bounds(nkl, ratio);
    });

    auto* ssd = app.add_subcommand("sd", "list the boundary set S_d");
    int sd_d = 0;
    ssd->add_option("d", sd_d, "query budget")->required();
    ssd->callback([&] { cmd_sd(sd_d); });

    auto* sv = app.add_subcommand("verify", "certify probability-1 discrimination");
    int vn = 0, vk = 0, vl = 0;
    std::string mode = "full";
    sv->add_option("n", vn)->required();
    sv->add_option("k", vk)->required();
    sv->add_option("l", vl)->required();
    sv->add_option("--mode", mode, "full or symmetric")
        ->check(CLI::IsMember({"full", "symmetric"}));
    sv->callback([&] { rc = cmd_verify(vn, vk, vl, mode); });

    auto* sw = app.add_subcommand("sweep", "grid sweep of bounds with CSV output");
    int resolution = 0;
    std::string out_path = "sweep.csv";
    sw->add_option("--resolution", resolution, "cells per axis")->required();
    sw->add_option("--out", out_path, "CSV output path");
    sw->callback([&] { cmd_sweep(resolution, out_path); });

    auto* sdeg = app.add_subcommand("degree", "minimum polynomial degree via LP feasibility");
    int dn = 0, dk = 0, dl = 0, max_d = 0;
    sdeg->add_option("n", dn)->required();
    sdeg->add_option("k", dk)->required();
    sdeg->add_option("l", dl)->required();
    sdeg->add_option("--max-d", max_d, "scan limit on the degree");
    sdeg->callback([&] { cmd_degree(dn, dk, dl, max_d); });

    auto* sg = app.add_subcommand("g", "query count for the k vs n/2 vs n-k separator");
    double kappa = 0.0;
    sg->add_option("kappa", kappa, "k/n in [0, 0.5)")->required();
    sg->callback([&] { cmd_g(kappa); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const weightdec::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
