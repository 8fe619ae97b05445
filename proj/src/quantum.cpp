#include "weightdec/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace weightdec {

namespace {

constexpr double kIndexMassTol = 1e-12;  // outcome mass below this never happens

int checked_weight(const std::vector<int>& x) {
    int w = 0;
    for (int bit : x) {
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("input vector entries must be bits");
        w += bit;
    }
    return w;
}

std::vector<Amplitude> mat_vec(const RealMatrix& m, const std::vector<Amplitude>& v) {
    std::vector<Amplitude> out(m.rows, Amplitude{0.0, 0.0});
    for (int r = 0; r < m.rows; ++r) {
        Amplitude acc{0.0, 0.0};
        for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<Amplitude> initial_amplitudes(int n, const PaddingParams& p) {
    std::vector<Amplitude> psi(small_dim(n));
    const double inv = 1.0 / std::sqrt(p.n_eff);
    for (int i = 0; i < n; ++i) psi[i] = inv;
    psi[n] = p.a() * inv;
    psi[n + 1] = -p.b() * inv;
    return psi;
}

DecisionReport finish_report(int w, int k, int l, std::map<OutcomeClass, double> probs,
                             double p_one, int queries) {
    DecisionReport rep;
    rep.weight = w;
    rep.class_probs = std::move(probs);
    rep.output = p_one >= 0.5 ? 1 : 0;
    if (w == k)
        rep.success_prob = 1.0 - p_one;
    else if (w == l)
        rep.success_prob = p_one;
    else
        rep.success_prob = std::max(p_one, 1.0 - p_one);
    rep.queries_used = queries;
    return rep;
}

}  // namespace

double PaddingParams::a() const { return std::sqrt(a_sq); }
double PaddingParams::b() const { return std::sqrt(b_sq); }

PaddingParams padding_params(const WeightInstance& inst, const BoundaryPair& anchor) {
    const double span = anchor.t - anchor.s;
    const double n_eff = (inst.l - inst.k) / span;
    double b_sq = (inst.l * anchor.s - inst.k * anchor.t) / span;
    double a_sq = n_eff - b_sq - inst.n;
    const double tol = 1e-9 * n_eff;
    if (b_sq < -tol || a_sq < -tol)
        throw std::domain_error("padding_params: (k/n, l/n) outside UL(anchor)");
    b_sq = std::max(b_sq, 0.0);
    a_sq = std::max(a_sq, 0.0);
    return {a_sq, b_sq, n_eff, anchor};
}

int small_dim(int n) { return n + 2; }

int big_dim(int n) { return n * (n - 1) / 2 + 3 * n + 3; }

int pair_index(int n, int i, int j) {
    if (i < 1 || j <= i || j > n) throw std::invalid_argument("pair_index: need 1 <= i < j <= n");
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

double FullState::norm_sq() const {
    double s = 0.0;
    for (const Amplitude& a : amp) s += std::norm(a);
    return s;
}

std::vector<double> build_oracle(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<double> diag(small_dim(n), 1.0);
    for (int i = 0; i < n; ++i) {
        if (x[i] != 0 && x[i] != 1)
            throw std::invalid_argument("build_oracle: entries must be bits");
        if (x[i]) diag[i] = -1.0;
    }
    diag[n + 1] = -1.0;
    return diag;
}

RealMatrix build_W(int n, const PaddingParams& params) {
    const int dim = small_dim(n);
    std::vector<double> u(dim);
    const double inv = 1.0 / std::sqrt(params.n_eff);
    for (int i = 0; i < n; ++i) u[i] = inv;
    u[n] = params.a() * inv;
    u[n + 1] = -params.b() * inv;
    RealMatrix w(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) w.at(r, c) = 2.0 * u[r] * u[c] - (r == c ? 1.0 : 0.0);
    return w;
}

RealMatrix build_U(int n, const PaddingParams& params) {
    const double a = params.a();
    const double b = params.b();
    const double n_eff = params.n_eff;
    const double inv_sqrt = 1.0 / std::sqrt(n_eff);
    RealMatrix u(big_dim(n), small_dim(n));

    const int pairs = small_dim(n);            // |i,j> block
    const int kl = pairs + n * (n - 1) / 2;    // |k,L> block
    const int kr = kl + n;                     // |k,R> block
    const int lr = kr + n;                     // |L,R>

    auto add_singles = [&](int col, double coef) {
        for (int i = 0; i < n; ++i) u.at(i, col) += coef / n_eff;
        u.at(n, col) += coef * a / n_eff;
        u.at(n + 1, col) += coef * b / n_eff;
    };

    for (int k = 1; k <= n; ++k) {
        const int col = k - 1;
        add_singles(col, 1.0);
        for (int i = 1; i < k; ++i) u.at(pairs + pair_index(n, i, k), col) -= inv_sqrt;
        for (int i = k + 1; i <= n; ++i) u.at(pairs + pair_index(n, k, i), col) += inv_sqrt;
        u.at(kl + k - 1, col) += a * inv_sqrt;
        u.at(kr + k - 1, col) += b * inv_sqrt;
    }
    add_singles(n, a);
    for (int i = 1; i <= n; ++i) u.at(kl + i - 1, n) -= inv_sqrt;
    u.at(lr, n) += b * inv_sqrt;

    add_singles(n + 1, b);
    for (int i = 1; i <= n; ++i) u.at(kr + i - 1, n + 1) -= inv_sqrt;
    u.at(lr, n + 1) -= a * inv_sqrt;
    return u;
}

const char* to_string(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::ZeroIndex: return "ZeroIndex";
        case OutcomeClass::OneIndex: return "OneIndex";
        case OutcomeClass::PadL: return "PadL";
        case OutcomeClass::PadR: return "PadR";
        case OutcomeClass::SingleClass: return "SingleClass";
        case OutcomeClass::PairClass: return "PairClass";
    }
    return "?";
}

int decide(OutcomeClass cls, int gamma_parity, int delta, std::optional<int> queried_bit) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("decide: delta must be 0 or 1");
    const bool odd = (gamma_parity % 2) != 0;
    switch (cls) {
        case OutcomeClass::ZeroIndex:
        case OutcomeClass::OneIndex: {
            if (delta != 1) throw std::logic_error("decide: index outcome needs delta=1");
            if (!queried_bit.has_value())
                throw std::logic_error("decide: index outcome needs the queried bit");
            const int bit = *queried_bit;
            if (bit != 0 && bit != 1) throw std::invalid_argument("decide: queried bit not a bit");
            return odd ? 1 - bit : bit;
        }
        case OutcomeClass::PadL:
            if (delta != 1) throw std::logic_error("decide: PadL outcome needs delta=1");
            return odd ? 1 : 0;
        case OutcomeClass::PadR:
            if (delta != 1) throw std::logic_error("decide: PadR outcome needs delta=1");
            return odd ? 0 : 1;
        case OutcomeClass::SingleClass:
            if (delta != 0) throw std::logic_error("decide: SingleClass outcome needs delta=0");
            return odd ? 1 : 0;
        case OutcomeClass::PairClass:
            if (delta != 0) throw std::logic_error("decide: PairClass outcome needs delta=0");
            return odd ? 0 : 1;
    }
    throw std::logic_error("decide: unknown outcome class");
}

DecisionReport run_symmetric(const WeightInstance& inst, const PaddingParams& params, int w) {
    if (w < 0 || w > inst.n)
        throw std::invalid_argument("run_symmetric: weight outside [0, n]");
    const BoundaryPair& anc = params.anchor;
    const int d = anc.d, delta = anc.delta, parity = anc.gamma % 2;
    const int n = inst.n;

    const double ratio = std::clamp((w + params.b_sq) / params.n_eff, 0.0, 1.0);
    const double theta = std::asin(std::sqrt(ratio));
    const double big_theta = (2 * d - delta) * theta;
    const double c2 = std::cos(big_theta) * std::cos(big_theta);
    const double s2 = std::sin(big_theta) * std::sin(big_theta);

    std::map<OutcomeClass, double> probs;
    double p_one = 0.0;
    int queries = d;
    if (delta == 1) {
        const double zero_mass = (n - w) + params.a_sq;
        const double one_mass = w + params.b_sq;
        probs[OutcomeClass::ZeroIndex] = zero_mass > 0.0 ? c2 * (n - w) / zero_mass : 0.0;
        probs[OutcomeClass::PadL] = zero_mass > 0.0 ? c2 * params.a_sq / zero_mass : 0.0;
        probs[OutcomeClass::OneIndex] = one_mass > 0.0 ? s2 * w / one_mass : 0.0;
        probs[OutcomeClass::PadR] = one_mass > 0.0 ? s2 * params.b_sq / one_mass : 0.0;
        p_one += probs[OutcomeClass::ZeroIndex] * decide(OutcomeClass::ZeroIndex, parity, 1, 0);
        p_one += probs[OutcomeClass::OneIndex] * decide(OutcomeClass::OneIndex, parity, 1, 1);
        p_one += probs[OutcomeClass::PadL] * decide(OutcomeClass::PadL, parity, 1, std::nullopt);
        p_one += probs[OutcomeClass::PadR] * decide(OutcomeClass::PadR, parity, 1, std::nullopt);
        const double index_mass =
            probs[OutcomeClass::ZeroIndex] + probs[OutcomeClass::OneIndex];
        queries = d - 1 + (index_mass > kIndexMassTol ? 1 : 0);
    } else {
        probs[OutcomeClass::SingleClass] = c2;
        probs[OutcomeClass::PairClass] = s2;
        p_one += c2 * decide(OutcomeClass::SingleClass, parity, 0, std::nullopt);
        p_one += s2 * decide(OutcomeClass::PairClass, parity, 0, std::nullopt);
    }
    return finish_report(w, inst.k, inst.l, std::move(probs), p_one, queries);
}

FullState evolve_grover(const WeightInstance& inst, const PaddingParams& params,
                        const std::vector<int>& x, int steps) {
    const int n = inst.n;
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("evolve_grover: input length must be n");
    const std::vector<double> oracle = build_oracle(x);
    const RealMatrix w = build_W(n, params);
    std::vector<Amplitude> psi = initial_amplitudes(n, params);
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i < small_dim(n); ++i) psi[i] *= oracle[i];
        psi = mat_vec(w, psi);
    }
    return {StateSpace::Small, n, std::move(psi)};
}

int full_sim_cap() {
    if (const char* env = std::getenv("WEIGHTDEC_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

DecisionReport run_full(const WeightInstance& inst, const PaddingParams& params,
                        const std::vector<int>& x) {
    const int n = inst.n;
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("run_full: input length must be n");
    if (n > full_sim_cap())
        throw resource_error("run_full: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(full_sim_cap()));
    const int w = checked_weight(x);
    const BoundaryPair& anc = params.anchor;
    const int d = anc.d, delta = anc.delta, parity = anc.gamma % 2;

    FullState state = evolve_grover(inst, params, x, d - 1);
    std::vector<Amplitude>& psi = state.amp;

    std::map<OutcomeClass, double> probs;
    double p_one = 0.0;
    int queries = d;
    if (delta == 1) {
        probs[OutcomeClass::ZeroIndex] = 0.0;
        probs[OutcomeClass::OneIndex] = 0.0;
        double index_mass = 0.0;
        for (int i = 0; i < n; ++i) {
            const double pr = std::norm(psi[i]);
            const OutcomeClass cls = x[i] ? OutcomeClass::OneIndex : OutcomeClass::ZeroIndex;
            probs[cls] += pr;
            index_mass += pr;
            p_one += pr * decide(cls, parity, 1, x[i]);
        }
        probs[OutcomeClass::PadL] = std::norm(psi[n]);
        probs[OutcomeClass::PadR] = std::norm(psi[n + 1]);
        p_one += probs[OutcomeClass::PadL] * decide(OutcomeClass::PadL, parity, 1, std::nullopt);
        p_one += probs[OutcomeClass::PadR] * decide(OutcomeClass::PadR, parity, 1, std::nullopt);
        queries = d - 1 + (index_mass > kIndexMassTol ? 1 : 0);
    } else {
        // d-th query feeding U: index phases only, pad phases stay fixed.
        for (int i = 0; i < n; ++i)
            if (x[i]) psi[i] = -psi[i];
        const RealMatrix u = build_U(n, params);
        const std::vector<Amplitude> phi = mat_vec(u, psi);
        double single = 0.0;
        for (int i = 0; i < small_dim(n); ++i) single += std::norm(phi[i]);
        double pair = 0.0;
        for (int i = small_dim(n); i < big_dim(n); ++i) pair += std::norm(phi[i]);
        probs[OutcomeClass::SingleClass] = single;
        probs[OutcomeClass::PairClass] = pair;
        p_one += single * decide(OutcomeClass::SingleClass, parity, 0, std::nullopt);
        p_one += pair * decide(OutcomeClass::PairClass, parity, 0, std::nullopt);
    }
    return finish_report(w, inst.k, inst.l, std::move(probs), p_one, queries);
}

ExactnessSummary certify_anchor(const WeightInstance& inst, const BoundaryPair& anchor) {
    const PaddingParams params = padding_params(inst, anchor);
    const int n = inst.n;
    if (n > full_sim_cap())
        throw resource_error("certify_anchor: n exceeds the full-simulation cap");
    if (n > 25)  // enumeration walks all 2^n masks
        throw resource_error("certify_anchor: n too large to enumerate promised inputs");
    ExactnessSummary sum;
    sum.d = anchor.d;
    sum.anchor = anchor;
    sum.min_success = 1.0;
    sum.full_mode = true;
    std::vector<int> x(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int w = std::popcount(mask);
        if (w != inst.k && w != inst.l) continue;
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
        const DecisionReport rep = run_full(inst, params, x);
        sum.min_success = std::min(sum.min_success, rep.success_prob);
        sum.max_queries_used = std::max(sum.max_queries_used, rep.queries_used);
        ++sum.inputs_checked;
    }
    return sum;
}

ExactnessSummary verify_exactness(const WeightInstance& inst, bool full_mode) {
    const UpperBoundResult ub = upper_bound(inst.ratio());
    if (full_mode) return certify_anchor(inst, ub.anchor);

    const PaddingParams params = padding_params(inst, ub.anchor);
    ExactnessSummary sum;
    sum.d = ub.d;
    sum.anchor = ub.anchor;
    sum.min_success = 1.0;
    sum.full_mode = false;
    for (int w : {inst.k, inst.l}) {
        const DecisionReport rep = run_symmetric(inst, params, w);
        sum.min_success = std::min(sum.min_success, rep.success_prob);
        sum.max_queries_used = std::max(sum.max_queries_used, rep.queries_used);
        ++sum.inputs_checked;
    }
    return sum;
}

}  // namespace weightdec
