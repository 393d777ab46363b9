#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slimflow/field.hpp"
#include "slimflow/vec.hpp"

namespace slimflow {

enum class Activation { tanh, silu };

Activation activation_from_string(const std::string& s);
std::string to_string(Activation a);

// Shape of a time-conditioned MLP velocity field. The network maps
// concat(x, time_embedding(t)) through the hidden layers back to a vector of
// the data dimension. time_embed_dim may be 0 (no time input) and must be
// even otherwise, since the embedding is sin/cos pairs.
struct MlpSpec {
    int in_dim = 2;
    std::vector<int> hidden;
    int time_embed_dim = 16;
    Activation activation = Activation::silu;

    void validate() const;

    // Widths of the dense chain: [in_dim + time_embed_dim, hidden..., in_dim].
    std::vector<int> layer_widths() const;

    bool operator==(const MlpSpec&) const = default;
};

// params counts every weight and bias entry; macs counts the multiply-
// accumulates of one forward pass (biases excluded).
std::pair<long, long> count_params_macs(const MlpSpec& spec);

// Sinusoidal features [sin(2^j 2pi t), cos(2^j 2pi t)], j = 0..width/2-1.
void time_embedding(double t, std::span<double> out);

// Parameter gradients aligned with the flat weight vector, plus the scalar
// loss they belong to.
struct GradTape {
    Vec grads;
    double loss = 0.0;

    void add(const GradTape& other);
};

// Recorded intermediates of one batched forward pass, consumed by backward().
struct BatchWorkspace {
    int batch = 0;
    // acts[0] is the embedded input (batch x widths[0]); acts[l+1] holds layer
    // l's outputs after activation (linear for the last layer).
    std::vector<std::vector<double>> acts;
    std::vector<std::vector<double>> preacts;
    bool recorded = false;

    std::span<const double> outputs() const { return acts.back(); }
};

class VelocityField final : public Field {
public:
    explicit VelocityField(MlpSpec spec); // zero-initialized weights

    static VelocityField kaiming_init(MlpSpec spec, std::uint64_t seed);

    const MlpSpec& spec() const { return spec_; }
    long param_count() const { return static_cast<long>(w_.size()); }

    std::span<double> weights() { return w_; }
    std::span<const double> weights() const { return w_; }
    void set_weights(std::span<const double> w);

    int dim() const override { return spec_.in_dim; }
    void eval(std::span<const double> x, double t, std::span<double> out) const override;

    Vec forward(const Vec& x, double t) const { return (*this)(x, t); }

    // Training path: forward with recorded intermediates, then exact
    // reverse-mode gradients of a scalar loss given d(loss)/d(outputs).
    void forward_batch(std::span<const Vec> xs, std::span<const double> ts,
                       BatchWorkspace& ws) const;
    GradTape backward(const BatchWorkspace& ws, std::span<const double> d_out) const;

private:
    MlpSpec spec_;
    std::vector<int> widths_;
    std::vector<std::size_t> layer_off_; // offset of layer l's (W, b) block in w_
    std::vector<double> w_;

    void forward_rows(const double* in, int batch, std::vector<std::vector<double>>* acts,
                      std::vector<std::vector<double>>* preacts, double* out_single) const;
};

} // namespace slimflow
