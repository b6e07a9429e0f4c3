#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semalign/matrix.hpp"

namespace semalign {

struct GradCheckResult {
    double max_rel_err = 0.0;
    std::size_t worst_param = 0;  // index into the parameter list
    std::size_t worst_coord = 0;  // flat index within that parameter
};

// Central-difference check of analytic gradients. For each coordinate p of
// each listed parameter, numeric = (f(p+h) - f(p-h)) / 2h is compared with
// the analytic entry via |a - n| / max(1, |a|, |n|); the max is returned.
// Parameters are restored to their original values. f is evaluated with the
// perturbed parameters in place and must be finite, else EvalError.
GradCheckResult grad_check(const std::function<double()>& f,
                           const std::vector<Matrix*>& params,
                           const std::vector<const Matrix*>& analytic,
                           double h = 1e-6);

// Single-parameter convenience wrapper.
double grad_check(const std::function<double()>& f, Matrix& param,
                  const Matrix& analytic, double h = 1e-6);

}  // namespace semalign
