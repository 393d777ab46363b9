#pragma once

#include <cstdint>

#include "slimflow/vec.hpp"

namespace slimflow {

// Annealing coefficient beta(k) over training iterations. Non-constant kinds
// start at 1 and decay to 0: linear hits 0 at `horizon`, the cosine kinds at
// 2*k_step, and exponential is cut to 0 once exp(-k/k_step) drops below 1e-6
// (k >= 14*k_step).
struct BetaSchedule {
    enum class Kind { constant, linear, exponential, cosine_half, cosine_full };

    Kind kind = Kind::linear;
    double beta0 = 0.0; // constant
    long horizon = 1;   // linear
    long k_step = 1;    // exponential / cosine

    static BetaSchedule constant(double beta0);
    static BetaSchedule linear(long horizon);
    static BetaSchedule exponential(long k_step);
    static BetaSchedule cosine_half(long k_step);
    static BetaSchedule cosine_full(long k_step);

    double at(long k) const;

    void validate() const;
};

// sqrt(1 - beta^2) * x1 + beta * x1_prime, elementwise. Keeps a standard
// normal marginal when both inputs are independent standard normals.
Vec blend_noise(const Vec& x1, const Vec& x1_prime, double beta);

} // namespace slimflow
