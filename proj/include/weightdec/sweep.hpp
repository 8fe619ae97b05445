#pragma once

#include <string>
#include <vector>

namespace weightdec {

struct SweepCell {
    double kappa = 0.0;
    double lambda = 0.0;
    int upper = 0;
    int lower = 0;
    int gap = 0;
};

struct SweepResult {
    int resolution = 0;
    std::vector<SweepCell> cells;  // (i, j) lexicographic over the strict upper triangle
    double matched_fraction = 0.0;
    double gap_le1_fraction = 0.0;
};

// Bounds at every cell center ((i+1/2)/R, (j+1/2)/R), i < j. Cells evaluate
// in parallel; the result ordering is fixed regardless of thread count.
SweepResult run_sweep(int resolution);

// kappa,lambda,upper,lower,gap rows, reals at fixed 9 decimals so repeated
// runs are byte-identical.
void write_sweep_csv(const SweepResult& result, const std::string& path);

std::string format_fixed9(double v);

}  // namespace weightdec
