#pragma once

#include <cstddef>

#include "semalign/matrix.hpp"

namespace semalign {

struct SgdConfig {
    double learning_rate = 0.1;
    double momentum = 0.9;  // in [0, 1)
    int steps = 100;

    void validate() const {
        if (learning_rate <= 0.0) throw ConfigError("sgd: learning_rate must be > 0");
        if (momentum < 0.0 || momentum >= 1.0) throw ConfigError("sgd: momentum must be in [0,1)");
        if (steps < 0) throw ConfigError("sgd: steps must be >= 0");
    }
};

// velocity <- momentum*velocity + grads; params <- params - lr*velocity
inline void sgd_step(Matrix& params, const Matrix& grads, Matrix& velocity,
                     const SgdConfig& cfg) {
    if (!params.same_shape(grads) || !params.same_shape(velocity))
        throw ShapeError("sgd_step: shape mismatch " + params.shape_str() + " / " +
                         grads.shape_str() + " / " + velocity.shape_str());
    for (std::size_t i = 0; i < params.size(); ++i) {
        velocity.values()[i] = cfg.momentum * velocity.values()[i] + grads.values()[i];
        params.values()[i] -= cfg.learning_rate * velocity.values()[i];
    }
}

}  // namespace semalign
