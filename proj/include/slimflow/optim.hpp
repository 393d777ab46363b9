#pragma once

#include <span>
#include <vector>

namespace slimflow {

struct AdamConfig {
    double lr = 2e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Bias-corrected Adam over a flat parameter vector.
class AdamState {
public:
    AdamState(long param_count, AdamConfig cfg = {});

    // Applies one update in place. Throws NumericError naming the parameter
    // index if a gradient is non-finite.
    void step(std::span<double> weights, std::span<const double> grads);

    long step_count() const { return step_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    long step_ = 0;
    std::vector<double> m_;
    std::vector<double> v_;
};

// Exponential moving average of the weights: shadow <- ratio*shadow + (1-ratio)*w.
class EmaState {
public:
    EmaState(double ratio, std::span<const double> init);

    void update(std::span<const double> weights);

    double ratio() const { return ratio_; }
    std::span<const double> shadow() const { return shadow_; }

private:
    double ratio_;
    std::vector<double> shadow_;
};

} // namespace slimflow
