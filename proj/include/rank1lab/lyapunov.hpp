#ifndef RANK1LAB_LYAPUNOV_HPP
#define RANK1LAB_LYAPUNOV_HPP

#include <limits>
#include <vector>

#include "rank1lab/origami.hpp"

namespace rank1lab {

struct LyapunovEstimate {
    std::vector<double> exponents; // 2g values, descending, top normalized to 1
    long long steps = 0;
    unsigned long long seed = 0;
    // block-average standard error of the second exponent, in normalized units
    double stderr_top2 = std::numeric_limits<double>::infinity();
    double top_raw = 0; // per-step log growth of the leading direction
};

// Uniform random walk on {T, T^{-1}, S, S^{-1}} along the SL(2,Z) orbit,
// multiplying the integer homology transitions into an orthonormalized
// frame. Deterministic given (steps, seed). Throws DegenerateFrame if the
// frame collapses numerically or the leading growth is not positive.
LyapunovEstimate random_walk_exponents(const Origami& o, long long steps,
                                       unsigned long long seed);

// True iff max_{2 <= k <= genus} |lambda_k| < tol in the estimate.
bool degeneracy_test(const Origami& o, long long steps, unsigned long long seed, double tol);

// Combine independent-seed runs: inverse-variance weights when every run
// reports a finite positive error bar, plain averaging otherwise.
LyapunovEstimate merge_estimates(const std::vector<LyapunovEstimate>& estimates);

} // namespace rank1lab

#endif
