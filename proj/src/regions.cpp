#include "weightdec/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weightdec {

RatioPoint::RatioPoint(double kappa_, double lambda_) : kappa(kappa_), lambda(lambda_) {
    if (!std::isfinite(kappa) || !std::isfinite(lambda))
        throw std::invalid_argument("RatioPoint: non-finite coordinate");
    if (kappa < 0.0 || lambda > 1.0 || !(kappa < lambda))
        throw std::invalid_argument("RatioPoint: need 0 <= kappa < lambda <= 1");
}

WeightInstance::WeightInstance(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {
    if (n < 1) throw std::invalid_argument("WeightInstance: n must be positive");
    if (k < 0 || !(k < l) || l > n)
        throw std::invalid_argument("WeightInstance: need 0 <= k < l <= n");
}

RatioPoint WeightInstance::ratio() const {
    return {static_cast<double>(k) / n, static_cast<double>(l) / n};
}

bool in_UL(const RatioPoint& p, const RatioPoint& anchor) {
    const double k = p.kappa, l = p.lambda, s = anchor.kappa, t = anchor.lambda;
    return l * s >= k * t - kRegionTol &&
           (1.0 - k) * (1.0 - t) >= (1.0 - l) * (1.0 - s) - kRegionTol;
}

bool in_UL(const RatioPoint& p, const BoundaryPair& anchor) {
    return in_UL(p, RatioPoint(anchor.s, anchor.t));
}

bool in_LR(const RatioPoint& p, const RatioPoint& anchor) {
    const double k = p.kappa, l = p.lambda, s = anchor.kappa, t = anchor.lambda;
    if (std::abs(k - s) <= kRegionTol && std::abs(l - t) <= kRegionTol)
        return false;  // the anchor itself is not in its own LR region
    return l * s <= k * t + kRegionTol &&
           (1.0 - k) * (1.0 - t) <= (1.0 - l) * (1.0 - s) + kRegionTol;
}

bool in_LR(const RatioPoint& p, const BoundaryPair& anchor) {
    return in_LR(p, RatioPoint(anchor.s, anchor.t));
}

int search_cap(const RatioPoint& p) {
    const double span = std::asin(std::sqrt(p.lambda)) - std::asin(std::sqrt(p.kappa));
    const double cap = std::ceil((std::numbers::pi / 2.0) / span - 1e-9) + 1.0;
    // The -1e-9 keeps an exact integer quotient from rounding up; the +1
    // slack keeps the cap an upper bound either way.
    if (cap > static_cast<double>(kMaxSearchDepth))
        throw resource_error("search_cap: ratio gap too small, needs level " +
                             std::to_string(static_cast<long>(cap)));
    return static_cast<int>(cap);
}

namespace {

template <typename Admit>
std::optional<BoundaryPair> scan_level(const RatioPoint& p, int d, Admit admit) {
    if (d <= kBoundaryCacheDepth) {
        for (const BoundaryPair& bp : detail::cached_boundary_pairs(d))
            if (admit(p, bp)) return bp;
        return std::nullopt;
    }
    for (const BoundaryPair& bp : boundary_pairs(d))
        if (admit(p, bp)) return bp;
    return std::nullopt;
}

bool admit_ul(const RatioPoint& p, const BoundaryPair& bp) { return in_UL(p, bp); }
bool admit_lr(const RatioPoint& p, const BoundaryPair& bp) { return in_LR(p, bp); }

LowerBoundResult lower_scan(const RatioPoint& p, int d_max) {
    for (int d = d_max; d >= 1; --d)
        if (const auto hit = scan_level(p, d, admit_lr)) return {d + 1, *hit};
    return {1, std::nullopt};
}

}  // namespace

UpperBoundResult upper_bound(const RatioPoint& p) {
    const int cap = search_cap(p);
    for (int d = 1; d <= cap; ++d)
        if (const auto hit = scan_level(p, d, admit_ul)) return {d, *hit};
    throw std::logic_error("upper_bound: no UL membership up to the search cap (" +
                           std::to_string(cap) + ")");
}

LowerBoundResult lower_bound(const RatioPoint& p) {
    return lower_scan(p, upper_bound(p).d + 2);
}

BoundsResult bounds(const RatioPoint& p) {
    const UpperBoundResult ub = upper_bound(p);
    const LowerBoundResult lb = lower_scan(p, ub.d + 2);
    if (lb.value > ub.d)
        throw std::logic_error("bounds: lower bound " + std::to_string(lb.value) +
                               " exceeds upper bound " + std::to_string(ub.d));
    return {ub.d, lb.value, ub.anchor, lb.anchor, ub.d == lb.value, false};
}

BoundsResult bounds_instance(const WeightInstance& inst) {
    BoundsResult r = bounds(inst.ratio());
    r.asymptotic_lower = true;
    return r;
}

int g_query_complexity(double kappa) {
    if (!std::isfinite(kappa) || kappa < 0.0 || kappa >= 0.5)
        throw std::invalid_argument("g_query_complexity: kappa must lie in [0, 0.5)");
    if (kappa == 0.0) return 1;
    // Bucket boundaries hi(d) = (1 - cos((d-1)*pi/(2d)))/2 = (1 - sin(pi/2d))/2
    // increase to 0.5; hi(d-1) equals the lower endpoint of bucket d, so the
    // upward scan is exact. The closed form seeds the scan a couple of
    // buckets early, keeping it short even for kappa just below 0.5.
    const double arg = std::asin(std::min(1.0, 1.0 - 2.0 * kappa + 2.0 * kRegionTol));
    const double seed = std::floor(std::numbers::pi / (2.0 * arg)) - 2.0;
    if (seed > 1e9)
        throw resource_error("g_query_complexity: kappa too close to 1/2");
    for (int d = seed > 2.0 ? static_cast<int>(seed) : 2;; ++d) {
        const double hi = 0.5 * (1.0 - std::sin(std::numbers::pi / (2.0 * d)));
        if (kappa <= hi + kRegionTol) return d;
    }
}

}  // namespace weightdec
