#pragma once

#include "weightdec/regions.hpp"

#include <optional>
#include <vector>

namespace weightdec {

// Largest n accepted by the dense LP oracle.
inline constexpr int kLpMaxN = 300;

// Feasible polynomial for an instance: p(j) = sum_i coeffs[i] * T_i(z_j)
// with z_j = 1 - 2j/n, satisfying p(k) = 0, p(l) = 1 and 0 <= p(j) <= 1 on
// every weight point j in {0, ..., n}.
struct PolyWitness {
    int degree = 0;              // the degree bound the witness was solved under
    int n = 0;
    std::vector<double> coeffs;  // Chebyshev-basis coefficients, length degree+1
    double residual = 0.0;       // max constraint violation on re-evaluation

    double evaluate(int j) const;
};

// LP feasibility: does a polynomial of degree <= D represent the instance?
// Infeasible returns nullopt. Every returned witness has been re-evaluated
// independently of the solver (residual <= 1e-6).
std::optional<PolyWitness> degree_feasible(const WeightInstance& inst, int D);

// Smallest feasible degree, by linear scan from D = 1 (feasibility is
// monotone in D). D = n is always feasible, so the scan terminates.
int min_degree(const WeightInstance& inst);

// ceil(min_degree / 2): the query lower bound the degree implies.
int qe_degree_lower(const WeightInstance& inst);

}  // namespace weightdec
