#pragma once

#include <span>

#include "slimflow/vec.hpp"

namespace slimflow {

// A velocity field v(x, t). Solvers and metrics only need this surface, so
// analytic fields in tests plug in next to trained networks.
class Field {
public:
    virtual ~Field() = default;

    virtual int dim() const = 0;

    // Writes v(x, t) into out. x and out have size dim().
    virtual void eval(std::span<const double> x, double t, std::span<double> out) const = 0;

    Vec operator()(const Vec& x, double t) const {
        require_dim(x, static_cast<std::size_t>(dim()), "Field::eval");
        Vec out(static_cast<std::size_t>(dim()));
        eval(x, t, out);
        return out;
    }
};

} // namespace slimflow
