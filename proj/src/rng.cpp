#include "semalign/rng.hpp"

#include <cmath>

namespace semalign {

double Rng::normal() {
    while (true) {
        const double a = uniform(-1.0, 1.0);
        const double b = uniform(-1.0, 1.0);
        const double s = a * a + b * b;
        if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
    }
}

Matrix init_matrix(Rng& rng, std::size_t rows, std::size_t cols, InitScheme scheme) {
    if (rows < 1 || cols < 1)
        throw ShapeError("init_matrix: rows and cols must be >= 1");
    Matrix m(rows, cols);
    switch (scheme) {
        case InitScheme::uniform_fan_in: {
            const double bound = std::sqrt(1.0 / static_cast<double>(cols));
            for (double& v : m.values()) v = rng.uniform(-bound, bound);
            break;
        }
    }
    return m;
}

Matrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols, double sigma) {
    Matrix m(rows, cols);
    for (double& v : m.values()) v = sigma * rng.normal();
    return m;
}

}  // namespace semalign
