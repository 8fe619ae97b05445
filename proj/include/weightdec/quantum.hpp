#pragma once

#include "weightdec/regions.hpp"

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weightdec {

// Pad weights tied to an anchor (s, t): the algorithm behaves as if a^2
// zeros and b^2 ones -- possibly irrational -- were appended to the input,
// so that (k + b^2)/n_eff = s and (l + b^2)/n_eff = t.
struct PaddingParams {
    double a_sq = 0.0;
    double b_sq = 0.0;
    double n_eff = 0.0;  // n + a^2 + b^2 = (l-k)/(t-s)
    BoundaryPair anchor;

    double a() const;
    double b() const;
};

// Requires (k/n, l/n) in UL(anchor); otherwise one of the pad weights would
// be negative and a domain error is raised.
PaddingParams padding_params(const WeightInstance& inst, const BoundaryPair& anchor);

// Basis layout.
// Small space, dimension n+2:  |1..n>, then |L> at index n, |R> at n+1.
// Big space, dimension C(n,2)+3n+3:  |1..n>, |L>, |R>, then |i,j> for i<j in
// lexicographic order, then |k,L> for k=1..n, |k,R> for k=1..n, and |L,R>.
int small_dim(int n);
int big_dim(int n);
int pair_index(int n, int i, int j);  // offset of |i,j> within its block; 1-based, i < j

struct RealMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    RealMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

using Amplitude = std::complex<double>;

enum class StateSpace { Small, Big };

struct FullState {
    StateSpace space = StateSpace::Small;
    int n = 0;
    std::vector<Amplitude> amp;

    double norm_sq() const;
};

// Phase oracle on the Small space: |i> -> (-1)^{x_i}|i>, |L> -> |L>,
// |R> -> -|R>. The pads stand for constant bits known in advance, so the
// extension costs no query; the R flip is what keeps the Grover reflection
// rotating in the alpha/alpha_perp plane.
std::vector<double> build_oracle(const std::vector<int>& x);

// W(a,b): reflection about (sum_i |i> + a|L> - b|R>)/sqrt(n_eff) on the
// Small space. Involutive; degenerates to the plain Grover diffusion when
// a = b = 0.
RealMatrix build_W(int n, const PaddingParams& params);

// U(a,b): isometry Small -> Big, given columnwise. Every algorithm state
// entering it lies in the span of these columns, so no unitary completion is
// constructed.
RealMatrix build_U(int n, const PaddingParams& params);

enum class OutcomeClass { ZeroIndex, OneIndex, PadL, PadR, SingleClass, PairClass };
const char* to_string(OutcomeClass c);

struct DecisionReport {
    int weight = 0;  // |x| of the simulated input
    std::map<OutcomeClass, double> class_probs;
    int output = 0;
    double success_prob = 0.0;
    int queries_used = 0;
};

// Measurement decision table. gamma_parity is gamma mod 2. queried_bit is
// the classically queried x_m and must be supplied exactly for index
// outcomes under delta = 1 (that read consumes the d-th query).
int decide(OutcomeClass cls, int gamma_parity, int delta, std::optional<int> queried_bit);

// Closed-form evolution in the rotation plane: theta = asin(sqrt((w+b^2)/n_eff)),
// final angle (2d-delta)*theta, then the per-class mass split and decision
// table. Any w in [0, n] is accepted; only w in {k, l} certifies.
DecisionReport run_symmetric(const WeightInstance& inst, const PaddingParams& params, int w);

// Exact matrix simulation: (W o O_x)^(d-1) on |Psi_0>, then either the
// Small-space measurement (delta = 1, with the classical follow-up query on
// index outcomes) or one more query followed by U and the single/pair
// measurement (delta = 0). The query feeding U leaves the pad phases alone;
// flipping |R> there would break the orthogonal separation whenever b > 0.
DecisionReport run_full(const WeightInstance& inst, const PaddingParams& params,
                        const std::vector<int>& x);

// |Psi_0> advanced by `steps` Grover applications; exposed so tests can check
// the two-dimensional invariant subspace directly.
FullState evolve_grover(const WeightInstance& inst, const PaddingParams& params,
                        const std::vector<int>& x, int steps);

// Full-simulation cap on n: WEIGHTDEC_MAX_N when set, else 12.
int full_sim_cap();

struct ExactnessSummary {
    int d = 0;
    BoundaryPair anchor;
    double min_success = 0.0;
    int max_queries_used = 0;
    long inputs_checked = 0;
    bool full_mode = false;
};

// run_full over every promised input (all |x| in {k, l}) with the given
// anchor.
ExactnessSummary certify_anchor(const WeightInstance& inst, const BoundaryPair& anchor);

// Anchor from upper_bound(k/n, l/n), then either the full certification
// (n capped) or the closed-form run at w = k and w = l.
ExactnessSummary verify_exactness(const WeightInstance& inst, bool full_mode);

}  // namespace weightdec
