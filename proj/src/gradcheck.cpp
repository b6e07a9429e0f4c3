#include "semalign/gradcheck.hpp"

#include <algorithm>
#include <cmath>

namespace semalign {

namespace {

double checked_eval(const std::function<double()>& f) {
    const double v = f();
    if (!std::isfinite(v)) throw EvalError("grad_check: objective returned non-finite value");
    return v;
}

}  // namespace

GradCheckResult grad_check(const std::function<double()>& f,
                           const std::vector<Matrix*>& params,
                           const std::vector<const Matrix*>& analytic, double h) {
    if (params.size() != analytic.size())
        throw ContractError("grad_check: parameter/gradient list size mismatch");
    if (h <= 0.0) throw ContractError("grad_check: h must be > 0");

    GradCheckResult result;
    for (std::size_t p = 0; p < params.size(); ++p) {
        Matrix& m = *params[p];
        const Matrix& g = *analytic[p];
        if (!m.same_shape(g))
            throw ShapeError("grad_check: gradient shape " + g.shape_str() +
                             " does not match parameter " + m.shape_str());
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double saved = m.values()[i];
            m.values()[i] = saved + h;
            const double fp = checked_eval(f);
            m.values()[i] = saved - h;
            const double fm = checked_eval(f);
            m.values()[i] = saved;
            const double numeric = (fp - fm) / (2.0 * h);
            const double a = g.values()[i];
            const double rel = std::abs(a - numeric) /
                               std::max({1.0, std::abs(a), std::abs(numeric)});
            if (rel > result.max_rel_err) {
                result.max_rel_err = rel;
                result.worst_param = p;
                result.worst_coord = i;
            }
        }
    }
    return result;
}

double grad_check(const std::function<double()>& f, Matrix& param, const Matrix& analytic,
                  double h) {
    return grad_check(f, {&param}, {&analytic}, h).max_rel_err;
}

}  // namespace semalign
