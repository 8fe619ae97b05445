#include "weightdec/cheb.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace weightdec {

double cheb_T(int m, double x) {
    if (m < 0) throw std::invalid_argument("cheb_T: degree must be non-negative");
    if (!std::isfinite(x)) throw std::domain_error("cheb_T: non-finite argument");
    if (x >= 1.0) return std::cosh(m * std::acosh(x));
    if (x <= -1.0) {
        const double v = std::cosh(m * std::acosh(-x));
        return (m % 2 == 0) ? v : -v;
    }
    return std::cos(m * std::acos(x));
}

double extremum(int m, int gamma) {
    if (m < 1) throw std::invalid_argument("extremum: m must be positive");
    if (gamma < 0 || gamma > m)
        throw std::invalid_argument("extremum: gamma out of [0, m]");
    return std::cos(gamma * std::numbers::pi / m);
}

namespace {

double ratio_at(int D, int g) {
    return 0.5 * (1.0 - std::cos(g * std::numbers::pi / D));
}

}  // namespace

std::vector<BoundaryPair> boundary_pairs(int d) {
    if (d < 1) throw std::invalid_argument("boundary_pairs: d must be positive");
    std::vector<BoundaryPair> out;
    out.reserve(d == 1 ? 2 : 4 * d - 3);
    const int even_deg = 2 * d;
    for (int g = 0; g < 2 * d; ++g)
        out.push_back({ratio_at(even_deg, g), ratio_at(even_deg, g + 1), d, 0, g});
    if (d >= 2) {
        const int odd_deg = 2 * d - 1;
        for (int g = 1; g <= 2 * d - 3; ++g)
            out.push_back({ratio_at(odd_deg, g), ratio_at(odd_deg, g + 1), d, 1, g});
    }
    return out;
}

namespace detail {

const std::vector<BoundaryPair>& cached_boundary_pairs(int d) {
    if (d < 1) throw std::invalid_argument("cached_boundary_pairs: d must be positive");
    static std::mutex mu;
    static std::deque<std::vector<BoundaryPair>> levels;  // levels[i] = S_{i+1}
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(levels.size()) < d)
        levels.push_back(boundary_pairs(static_cast<int>(levels.size()) + 1));
    return levels[d - 1];
}

}  // namespace detail

}  // namespace weightdec
