#pragma once

#include "weightdec/cheb.hpp"

#include <optional>
#include <stdexcept>

namespace weightdec {

// Thrown when a request exceeds a configured size cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region membership uses closed comparisons at this tolerance: a point
// numerically on a boundary counts as inside.
inline constexpr double kRegionTol = 1e-12;

// Largest boundary-set level the bound searches will walk. Points whose
// ratio gap forces a deeper search are rejected with resource_error.
inline constexpr int kMaxSearchDepth = 4096;

// Levels up to this depth are memoized; deeper ones are generated on the
// fly so a few deep queries cannot pin gigabytes of cached pairs.
inline constexpr int kBoundaryCacheDepth = 1024;

// Ratio coordinates (k/n, l/n). The diagonal kappa == lambda is rejected.
struct RatioPoint {
    double kappa;
    double lambda;
    RatioPoint(double kappa_, double lambda_);
};

struct WeightInstance {
    int n;
    int k;
    int l;
    WeightInstance(int n_, int k_, int l_);
    RatioPoint ratio() const;
};

// Upper-left region of an anchor (x, y): the wedge above both the line
// through the origin and the anchor, and the line through the anchor and
// (1, 1). Membership is exactly non-negativity of the pad weights needed to
// reduce the point to the anchor.
bool in_UL(const RatioPoint& p, const RatioPoint& anchor);
bool in_UL(const RatioPoint& p, const BoundaryPair& anchor);

// Lower-right region: same two lines, opposite side, anchor itself excluded.
bool in_LR(const RatioPoint& p, const RatioPoint& anchor);
bool in_LR(const RatioPoint& p, const BoundaryPair& anchor);

// A d at which UL(S_d) membership is guaranteed by the rectangle argument:
// ceil((pi/2) / (asin(sqrt(lambda)) - asin(sqrt(kappa)))) + 1.
int search_cap(const RatioPoint& p);

struct UpperBoundResult {
    int d;
    BoundaryPair anchor;
};

// Minimal d with p in UL(S_d); the anchor is the first admitting pair in the
// canonical (delta asc, gamma asc) order.
UpperBoundResult upper_bound(const RatioPoint& p);

struct LowerBoundResult {
    int value;
    std::optional<BoundaryPair> anchor;
};

// 1 + max{d in [1, upper+2] : p in LR(S_d)}, or (1, none) when no membership.
LowerBoundResult lower_bound(const RatioPoint& p);

struct BoundsResult {
    int upper;
    int lower;
    BoundaryPair upper_anchor;
    std::optional<BoundaryPair> lower_anchor;
    bool matched;
    bool asymptotic_lower;  // set for finite-n instances: the lower bound
                            // kicks in only for sufficiently large n
};

BoundsResult bounds(const RatioPoint& p);
BoundsResult bounds_instance(const WeightInstance& inst);

// Query count for the symmetric function separating |x| in {k, n-k} from
// |x| = n/2, as a function of kappa = k/n in [0, 0.5).
int g_query_complexity(double kappa);

}  // namespace weightdec
