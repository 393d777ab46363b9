#include "slimflow/optim.hpp"

#include <cmath>
#include <string>

#include "slimflow/errors.hpp"

namespace slimflow {

AdamState::AdamState(long param_count, AdamConfig cfg) : cfg_(cfg) {
    if (param_count < 0) throw ContractError("AdamState: negative param count");
    if (!(cfg.lr > 0.0) || !(cfg.eps > 0.0)) throw ContractError("AdamState: lr and eps must be > 0");
    if (cfg.beta1 < 0.0 || cfg.beta1 >= 1.0 || cfg.beta2 < 0.0 || cfg.beta2 >= 1.0) {
        throw ContractError("AdamState: betas must be in [0, 1)");
    }
    m_.assign(static_cast<std::size_t>(param_count), 0.0);
    v_.assign(static_cast<std::size_t>(param_count), 0.0);
}

void AdamState::step(std::span<double> weights, std::span<const double> grads) {
    if (weights.size() != m_.size() || grads.size() != m_.size()) {
        throw ContractError("AdamState::step: length mismatch");
    }
    for (std::size_t i = 0; i < grads.size(); ++i) {
        if (!std::isfinite(grads[i])) {
            throw NumericError("AdamState::step: non-finite gradient at parameter index " +
                               std::to_string(i));
        }
    }
    ++step_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double g = grads[i];
        m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * g;
        v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * g * g;
        const double m_hat = m_[i] / bc1;
        const double v_hat = v_[i] / bc2;
        weights[i] -= cfg_.lr * m_hat / (std::sqrt(v_hat) + cfg_.eps);
    }
}

EmaState::EmaState(double ratio, std::span<const double> init) : ratio_(ratio) {
    if (ratio < 0.0 || ratio >= 1.0) throw ContractError("EmaState: ratio must be in [0, 1)");
    shadow_.assign(init.begin(), init.end());
}

void EmaState::update(std::span<const double> weights) {
    if (weights.size() != shadow_.size()) throw ContractError("EmaState::update: length mismatch");
    for (std::size_t i = 0; i < shadow_.size(); ++i) {
        shadow_[i] = ratio_ * shadow_[i] + (1.0 - ratio_) * weights[i];
    }
}

} // namespace slimflow
