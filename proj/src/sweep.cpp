#include "weightdec/sweep.hpp"

#include "weightdec/regions.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace weightdec {

SweepResult run_sweep(int resolution) {
    if (resolution < 10)
        throw std::invalid_argument("run_sweep: resolution must be at least 10");

    const int r = resolution;
    std::vector<std::pair<int, int>> cells_ij;
    cells_ij.reserve(static_cast<size_t>(r) * (r - 1) / 2);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) cells_ij.emplace_back(i, j);

    // Warm the S_d cache to the largest cap on the grid (the tightest cells
    // sit next to the diagonal at kappa = 1/2), so workers only read it.
    // This also rejects resolutions whose cells would out-run the search
    // depth before any thread starts.
    {
        const double mid = 0.5 - 0.5 / r;
        const int cap = search_cap(RatioPoint(mid, mid + 1.0 / r));
        detail::cached_boundary_pairs(std::min(cap + 2, kBoundaryCacheDepth));
    }

    SweepResult result;
    result.resolution = r;
    result.cells.resize(cells_ij.size());

    std::exception_ptr worker_error;
    std::mutex error_mu;
    auto worker = [&](size_t begin, size_t end) {
        try {
            for (size_t idx = begin; idx < end; ++idx) {
                const auto [i, j] = cells_ij[idx];
                const RatioPoint p((i + 0.5) / r, (j + 0.5) / r);
                const BoundsResult b = bounds(p);
                result.cells[idx] = {p.kappa, p.lambda, b.upper, b.lower, b.upper - b.lower};
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mu);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const size_t n_threads = hw > 1 ? hw : 1;
    if (n_threads == 1 || cells_ij.size() < 1024) {
        worker(0, cells_ij.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (cells_ij.size() + n_threads - 1) / n_threads;
        for (size_t t = 0; t < n_threads; ++t) {
            const size_t begin = t * chunk;
            const size_t end = std::min(begin + chunk, cells_ij.size());
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);

    size_t matched = 0, le1 = 0;
    for (const SweepCell& c : result.cells) {
        if (c.gap == 0) ++matched;
        if (c.gap <= 1) ++le1;
    }
    result.matched_fraction = static_cast<double>(matched) / result.cells.size();
    result.gap_le1_fraction = static_cast<double>(le1) / result.cells.size();
    return result;
}

std::string format_fixed9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
    out << "kappa,lambda,upper,lower,gap\n";
    for (const SweepCell& c : result.cells)
        out << format_fixed9(c.kappa) << ',' << format_fixed9(c.lambda) << ','
            << c.upper << ',' << c.lower << ',' << c.gap << '\n';
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace weightdec
