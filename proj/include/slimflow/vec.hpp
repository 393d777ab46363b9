#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "slimflow/errors.hpp"

namespace slimflow {

// Dense 64-bit state vector. Plain std::vector keeps value semantics cheap;
// helpers below carry the dimension/finiteness contracts.
using Vec = std::vector<double>;

inline bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

inline void require_dim(const Vec& v, std::size_t dim, const char* what) {
    if (v.size() != dim) {
        throw ContractError(std::string(what) + ": dimension mismatch, got " +
                            std::to_string(v.size()) + " expected " + std::to_string(dim));
    }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double squared_norm(std::span<const double> v) { return dot(v, v); }

inline double norm(std::span<const double> v) { return std::sqrt(squared_norm(v)); }

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

} // namespace slimflow
