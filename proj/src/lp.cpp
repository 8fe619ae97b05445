#include "weightdec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace weightdec {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kRowEps = 1e-7;    // smallest pivot magnitude worth taking
constexpr double kFeasTol = 1e-7;   // accepted artificial mass at optimum
constexpr double kRecheckTol = 1e-6;

// T_0..T_D evaluated at z by the three-term recurrence.
std::vector<double> cheb_row(int D, double z) {
    std::vector<double> t(D + 1);
    t[0] = 1.0;
    if (D >= 1) t[1] = z;
    for (int i = 2; i <= D; ++i) t[i] = 2.0 * z * t[i - 1] - t[i - 2];
    return t;
}

// LU with partial pivoting, reused across many right-hand sides.
struct LuFactor {
    int m = 0;
    std::vector<std::vector<double>> lu;
    std::vector<int> perm;

    explicit LuFactor(std::vector<std::vector<double>> a) : m(static_cast<int>(a.size())), lu(std::move(a)), perm(m) {
        for (int i = 0; i < m; ++i) perm[i] = i;
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int i = col + 1; i < m; ++i)
                if (std::abs(lu[i][col]) > std::abs(lu[piv][col])) piv = i;
            std::swap(lu[col], lu[piv]);
            std::swap(perm[col], perm[piv]);
            if (std::abs(lu[col][col]) < 1e-14)
                throw std::logic_error("lp: singular basis matrix");
            const double inv = 1.0 / lu[col][col];
            for (int i = col + 1; i < m; ++i) {
                const double f = lu[i][col] * inv;
                lu[i][col] = f;
                if (f == 0.0) continue;
                for (int j = col + 1; j < m; ++j) lu[i][j] -= f * lu[col][j];
            }
        }
    }

    std::vector<double> solve(const std::vector<double>& rhs) const {
        std::vector<double> y(m);
        for (int i = 0; i < m; ++i) y[i] = rhs[perm[i]];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j) y[i] -= lu[i][j] * y[j];
        for (int i = m - 1; i >= 0; --i) {
            for (int j = i + 1; j < m; ++j) y[i] -= lu[i][j] * y[j];
            y[i] /= lu[i][i];
        }
        return y;
    }
};

// Phase-1 simplex on A x = b, x >= 0, b >= 0, deciding feasibility.
//
// `basis` holds the starting basic column per row, or -1 where an artificial
// is introduced. Bland's rule picks the pivots. The tableau and reduced-cost
// row are rebuilt from the pristine data every few dozen pivots and once more
// at termination, so drift cannot fake an optimum, flip a sign, or corrupt
// the recovered solution; optimality is only ever declared on fresh data.
class Phase1Solver {
  public:
    Phase1Solver(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                 std::vector<int> basis, int n_cols)
        : a_(a), b_(b), basis_(std::move(basis)), m_(static_cast<int>(a.size())), n_cols_(n_cols) {
        total_ = n_cols_;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < 0) {
                basis_[i] = total_++;
                art_row_.push_back(i);
            }
        tableau_.assign(m_, std::vector<double>(total_ + 1, 0.0));
        cost_.assign(total_ + 1, 0.0);
    }

    std::optional<std::vector<double>> solve() {
        const long pivot_budget = 4000L + 200L * (m_ + total_);
        long pivots = 0;
        while (true) {
            refactorize();
            if (!pivot_once()) break;  // optimal on fresh data
            ++pivots;
            long segment = 1;
            while (segment < kSegment && pivot_once()) {
                ++segment;
                if (++pivots > pivot_budget)
                    throw std::logic_error("lp: pivot budget exhausted");
            }
        }

        double art_mass = 0.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_cols_) art_mass += std::abs(tableau_[i][total_]);
        if (art_mass > kFeasTol) return std::nullopt;

        std::vector<double> x(n_cols_, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_cols_) x[basis_[i]] = tableau_[i][total_];
        return x;
    }

  private:
    static constexpr long kSegment = 40;

    double original(int row, int col) const {
        if (col < n_cols_) return a_[row][col];
        return art_row_[col - n_cols_] == row ? 1.0 : 0.0;
    }

    // Rebuild tableau = B^-1 [A | b] and the reduced-cost row from scratch.
    void refactorize() {
        std::vector<std::vector<double>> basis_mat(m_, std::vector<double>(m_));
        for (int col = 0; col < m_; ++col)
            for (int row = 0; row < m_; ++row) basis_mat[row][col] = original(row, basis_[col]);
        const LuFactor lu(std::move(basis_mat));

        std::vector<double> col(m_);
        for (int j = 0; j < total_; ++j) {
            for (int row = 0; row < m_; ++row) col[row] = original(row, j);
            const std::vector<double> t = lu.solve(col);
            for (int row = 0; row < m_; ++row) tableau_[row][j] = t[row];
        }
        const std::vector<double> xb = lu.solve(b_);
        for (int row = 0; row < m_; ++row)
            tableau_[row][total_] = std::abs(xb[row]) < 1e-11 ? 0.0 : xb[row];

        std::fill(cost_.begin(), cost_.end(), 0.0);
        for (int j = n_cols_; j < total_; ++j) cost_[j] = 1.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_cols_)
                for (int j = 0; j <= total_; ++j) cost_[j] -= tableau_[i][j];
    }

    // One Bland step. Entering columns whose eligible pivots are all tiny are
    // skipped: following them steers the basis into near-singularity, and the
    // fresh-data outer loop re-examines them anyway. Among rows tied on the
    // ratio, the largest pivot magnitude wins. Returns false at optimum.
    bool pivot_once() {
        for (int enter = 0; enter < total_; ++enter) {
            if (cost_[enter] >= -kPivotEps) continue;
            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m_; ++i) {
                if (tableau_[i][enter] <= kRowEps) continue;
                const double ratio = tableau_[i][total_] / tableau_[i][enter];
                if (leave < 0 || ratio < best_ratio - ratio_tie(best_ratio)) {
                    leave = i;
                    best_ratio = ratio;
                } else if (ratio <= best_ratio + ratio_tie(best_ratio) &&
                           std::abs(tableau_[i][enter]) > std::abs(tableau_[leave][enter])) {
                    leave = i;
                    best_ratio = std::min(best_ratio, ratio);
                }
            }
            if (leave < 0) continue;  // no usable pivot in this column
            pivot(enter, leave);
            return true;
        }
        return false;
    }

    static double ratio_tie(double best) { return 1e-9 * std::max(1.0, std::abs(best)); }

    void pivot(int enter, int leave) {
        std::vector<double>& prow = tableau_[leave];
        const double inv = 1.0 / prow[enter];
        for (double& v : prow) v *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave) continue;
            const double f = tableau_[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= total_; ++j) tableau_[i][j] -= f * prow[j];
        }
        const double fc = cost_[enter];
        if (fc != 0.0)
            for (int j = 0; j <= total_; ++j) cost_[j] -= fc * prow[j];
        basis_[leave] = enter;
    }

    const std::vector<std::vector<double>>& a_;
    const std::vector<double>& b_;
    std::vector<int> basis_;
    std::vector<int> art_row_;  // artificial id -> owning row
    int m_ = 0;
    int n_cols_ = 0;
    int total_ = 0;
    std::vector<std::vector<double>> tableau_;
    std::vector<double> cost_;
};

}  // namespace

double PolyWitness::evaluate(int j) const {
    const double z = 1.0 - 2.0 * j / n;
    const std::vector<double> t = cheb_row(degree, z);
    double v = 0.0;
    for (int i = 0; i <= degree; ++i) v += coeffs[i] * t[i];
    return v;
}

std::optional<PolyWitness> degree_feasible(const WeightInstance& inst, int D) {
    if (inst.n > kLpMaxN)
        throw resource_error("degree_feasible: n exceeds the dense LP cap " +
                             std::to_string(kLpMaxN));
    if (D < 0 || D > inst.n)
        throw std::invalid_argument("degree_feasible: need 0 <= D <= n");

    const int n = inst.n;
    const int nc = D + 1;                     // coefficients
    const int n_cols = 2 * nc + 2 * (n - 1);  // split coefficients, then box slacks
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<int> basis;
    int slack = 2 * nc;

    for (int j = 0; j <= n; ++j) {
        const std::vector<double> t = cheb_row(D, 1.0 - 2.0 * j / n);
        auto coeff_part = [&](std::vector<double>& row, double sign) {
            for (int i = 0; i < nc; ++i) {
                row[i] = sign * t[i];
                row[nc + i] = -sign * t[i];
            }
        };
        if (j == inst.k || j == inst.l) {
            std::vector<double> row(n_cols, 0.0);
            coeff_part(row, 1.0);
            a.push_back(std::move(row));
            b.push_back(j == inst.l ? 1.0 : 0.0);
            basis.push_back(-1);  // equality rows take an artificial
        } else {
            std::vector<double> up(n_cols, 0.0);  // p(j) <= 1
            coeff_part(up, 1.0);
            up[slack] = 1.0;
            a.push_back(std::move(up));
            b.push_back(1.0);
            basis.push_back(slack++);

            std::vector<double> low(n_cols, 0.0);  // p(j) >= 0
            coeff_part(low, -1.0);
            low[slack] = 1.0;
            a.push_back(std::move(low));
            b.push_back(0.0);
            basis.push_back(slack++);
        }
    }

    const auto x = Phase1Solver(a, b, std::move(basis), n_cols).solve();
    if (!x) return std::nullopt;

    PolyWitness w;
    w.degree = D;
    w.n = n;
    w.coeffs.resize(nc);
    for (int i = 0; i < nc; ++i) w.coeffs[i] = (*x)[i] - (*x)[nc + i];

    double residual = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double p = w.evaluate(j);
        if (j == inst.k) residual = std::max(residual, std::abs(p));
        if (j == inst.l) residual = std::max(residual, std::abs(p - 1.0));
        residual = std::max(residual, std::max(-p, p - 1.0));
    }
    w.residual = residual;
    if (residual > kRecheckTol)
        throw std::logic_error("degree_feasible: witness failed the independent re-check");
    return w;
}

int min_degree(const WeightInstance& inst) {
    for (int D = 1; D <= inst.n; ++D)
        if (degree_feasible(inst, D)) return D;
    throw std::logic_error("min_degree: interpolation fallback at D = n cannot be infeasible");
}

int qe_degree_lower(const WeightInstance& inst) { return (min_degree(inst) + 1) / 2; }

}  // namespace weightdec
