#include "slimflow/mlp.hpp"

#include <cmath>
#include <numbers>

#include "slimflow/errors.hpp"
#include "slimflow/rng.hpp"

namespace slimflow {

Activation activation_from_string(const std::string& s) {
    if (s == "tanh") return Activation::tanh;
    if (s == "silu") return Activation::silu;
    throw ContractError("unknown activation: " + s);
}

std::string to_string(Activation a) {
    return a == Activation::tanh ? "tanh" : "silu";
}

void MlpSpec::validate() const {
    if (in_dim < 1) throw ContractError("MlpSpec: in_dim must be >= 1");
    for (int h : hidden) {
        if (h < 1) throw ContractError("MlpSpec: hidden widths must be >= 1");
    }
    if (time_embed_dim < 0 || time_embed_dim % 2 != 0) {
        throw ContractError("MlpSpec: time_embed_dim must be even and >= 0");
    }
}

std::vector<int> MlpSpec::layer_widths() const {
    std::vector<int> w;
    w.reserve(hidden.size() + 2);
    w.push_back(in_dim + time_embed_dim);
    for (int h : hidden) w.push_back(h);
    w.push_back(in_dim);
    return w;
}

std::pair<long, long> count_params_macs(const MlpSpec& spec) {
    spec.validate();
    const auto widths = spec.layer_widths();
    long params = 0;
    long macs = 0;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
        const long n_in = widths[l];
        const long n_out = widths[l + 1];
        params += n_in * n_out + n_out;
        macs += n_in * n_out;
    }
    return {params, macs};
}

void time_embedding(double t, std::span<double> out) {
    const std::size_t half = out.size() / 2;
    double omega = 2.0 * std::numbers::pi;
    for (std::size_t j = 0; j < half; ++j) {
        out[2 * j] = std::sin(omega * t);
        out[2 * j + 1] = std::cos(omega * t);
        omega *= 2.0;
    }
}

void GradTape::add(const GradTape& other) {
    if (grads.size() != other.grads.size()) {
        throw ContractError("GradTape::add: size mismatch");
    }
    for (std::size_t i = 0; i < grads.size(); ++i) grads[i] += other.grads[i];
    loss += other.loss;
}

VelocityField::VelocityField(MlpSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    widths_ = spec_.layer_widths();
    std::size_t total = 0;
    for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
        layer_off_.push_back(total);
        total += static_cast<std::size_t>(widths_[l]) * widths_[l + 1] + widths_[l + 1];
    }
    w_.assign(total, 0.0);
}

VelocityField VelocityField::kaiming_init(MlpSpec spec, std::uint64_t seed) {
    VelocityField f(std::move(spec));
    Rng rng = Rng::stream(seed, "kaiming-init");
    for (std::size_t l = 0; l + 1 < f.widths_.size(); ++l) {
        const int n_in = f.widths_[l];
        const int n_out = f.widths_[l + 1];
        const double bound = std::sqrt(6.0 / n_in);
        double* w = f.w_.data() + f.layer_off_[l];
        for (int i = 0; i < n_in * n_out; ++i) w[i] = rng.uniform(-bound, bound);
        // biases stay zero
    }
    return f;
}

void VelocityField::set_weights(std::span<const double> w) {
    if (w.size() != w_.size()) throw ContractError("set_weights: length mismatch");
    if (!all_finite(w)) throw ContractError("set_weights: non-finite weight");
    w_.assign(w.begin(), w.end());
}

namespace {

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

inline double apply_act(Activation a, double z) {
    if (a == Activation::tanh) return std::tanh(z);
    return z * sigmoid(z);
}

inline double act_derivative(Activation a, double z) {
    if (a == Activation::tanh) {
        const double th = std::tanh(z);
        return 1.0 - th * th;
    }
    const double s = sigmoid(z);
    return s * (1.0 + z * (1.0 - s));
}

} // namespace

void VelocityField::forward_rows(const double* in, int batch,
                                 std::vector<std::vector<double>>* acts,
                                 std::vector<std::vector<double>>* preacts,
                                 double* out_single) const {
    const std::size_t n_layers = widths_.size() - 1;
    std::vector<double> cur(in, in + static_cast<std::size_t>(batch) * widths_[0]);
    if (acts) (*acts)[0] = cur;

    std::vector<double> next;
    for (std::size_t l = 0; l < n_layers; ++l) {
        const int n_in = widths_[l];
        const int n_out = widths_[l + 1];
        const double* W = w_.data() + layer_off_[l];
        const double* b = W + static_cast<std::size_t>(n_in) * n_out;
        const bool last = (l + 1 == n_layers);

        next.assign(static_cast<std::size_t>(batch) * n_out, 0.0);
        for (int r = 0; r < batch; ++r) {
            const double* a = cur.data() + static_cast<std::size_t>(r) * n_in;
            double* z = next.data() + static_cast<std::size_t>(r) * n_out;
            for (int o = 0; o < n_out; ++o) {
                const double* wrow = W + static_cast<std::size_t>(o) * n_in;
                double s = b[o];
                for (int i = 0; i < n_in; ++i) s += wrow[i] * a[i];
                z[o] = s;
            }
        }
        if (preacts) (*preacts)[l] = next;
        if (!last) {
            for (auto& z : next) z = apply_act(spec_.activation, z);
        }
        if (acts) (*acts)[l + 1] = next;
        cur.swap(next);
    }
    if (out_single) {
        for (int i = 0; i < widths_.back(); ++i) out_single[i] = cur[static_cast<std::size_t>(i)];
    }
}

void VelocityField::eval(std::span<const double> x, double t, std::span<double> out) const {
    if (x.size() != static_cast<std::size_t>(spec_.in_dim)) {
        throw ContractError("VelocityField::eval: input dim mismatch");
    }
    std::vector<double> in(static_cast<std::size_t>(widths_[0]));
    for (int i = 0; i < spec_.in_dim; ++i) in[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    time_embedding(t, std::span<double>(in).subspan(static_cast<std::size_t>(spec_.in_dim)));
    forward_rows(in.data(), 1, nullptr, nullptr, out.data());
}

void VelocityField::forward_batch(std::span<const Vec> xs, std::span<const double> ts,
                                  BatchWorkspace& ws) const {
    if (xs.empty()) throw ContractError("forward_batch: empty batch");
    if (xs.size() != ts.size()) throw ContractError("forward_batch: xs/ts length mismatch");

    const int batch = static_cast<int>(xs.size());
    const int w0 = widths_[0];
    std::vector<double> in(static_cast<std::size_t>(batch) * w0);
    for (int r = 0; r < batch; ++r) {
        require_dim(xs[static_cast<std::size_t>(r)], static_cast<std::size_t>(spec_.in_dim),
                    "forward_batch");
        double* row = in.data() + static_cast<std::size_t>(r) * w0;
        for (int i = 0; i < spec_.in_dim; ++i) row[i] = xs[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        time_embedding(ts[static_cast<std::size_t>(r)],
                       std::span<double>(row + spec_.in_dim, static_cast<std::size_t>(spec_.time_embed_dim)));
    }

    const std::size_t n_layers = widths_.size() - 1;
    ws.batch = batch;
    ws.acts.assign(n_layers + 1, {});
    ws.preacts.assign(n_layers, {});
    forward_rows(in.data(), batch, &ws.acts, &ws.preacts, nullptr);
    ws.recorded = true;
}

GradTape VelocityField::backward(const BatchWorkspace& ws, std::span<const double> d_out) const {
    if (!ws.recorded) throw StateError("backward: no recorded forward pass");
    const int batch = ws.batch;
    const std::size_t n_layers = widths_.size() - 1;
    if (d_out.size() != static_cast<std::size_t>(batch) * widths_.back()) {
        throw ContractError("backward: d_out size mismatch");
    }

    GradTape tape;
    tape.grads.assign(w_.size(), 0.0);

    std::vector<double> delta(d_out.begin(), d_out.end());
    std::vector<double> delta_prev;
    for (std::size_t l = n_layers; l-- > 0;) {
        const int n_in = widths_[l];
        const int n_out = widths_[l + 1];
        const double* W = w_.data() + layer_off_[l];
        double* gW = tape.grads.data() + layer_off_[l];
        double* gb = gW + static_cast<std::size_t>(n_in) * n_out;
        const std::vector<double>& a_in = ws.acts[l];

        for (int r = 0; r < batch; ++r) {
            const double* d = delta.data() + static_cast<std::size_t>(r) * n_out;
            const double* a = a_in.data() + static_cast<std::size_t>(r) * n_in;
            for (int o = 0; o < n_out; ++o) {
                double* grow = gW + static_cast<std::size_t>(o) * n_in;
                const double dv = d[o];
                for (int i = 0; i < n_in; ++i) grow[i] += dv * a[i];
                gb[o] += dv;
            }
        }

        if (l > 0) {
            delta_prev.assign(static_cast<std::size_t>(batch) * n_in, 0.0);
            const std::vector<double>& z_prev = ws.preacts[l - 1];
            for (int r = 0; r < batch; ++r) {
                const double* d = delta.data() + static_cast<std::size_t>(r) * n_out;
                double* dp = delta_prev.data() + static_cast<std::size_t>(r) * n_in;
                for (int o = 0; o < n_out; ++o) {
                    const double* wrow = W + static_cast<std::size_t>(o) * n_in;
                    const double dv = d[o];
                    for (int i = 0; i < n_in; ++i) dp[i] += wrow[i] * dv;
                }
                const double* z = z_prev.data() + static_cast<std::size_t>(r) * n_in;
                for (int i = 0; i < n_in; ++i) dp[i] *= act_derivative(spec_.activation, z[i]);
            }
            delta.swap(delta_prev);
        }
    }
    return tape;
}

} // namespace slimflow
