#include "semalign/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semalign {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols())
            throw ShapeError("from_rows: ragged row " + std::to_string(r));
        std::size_t c = 0;
        for (double v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: incompatible shapes " + a.shape_str() + " * " + b.shape_str());
    Matrix out(a.rows(), b.cols());
    // i,k,j order: each out(i,j) still accumulates over k ascending.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] += b.values()[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] -= b.values()[i];
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "hadamard");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] *= b.values()[i];
    return out;
}

Matrix scale(const Matrix& m, double s) {
    Matrix out = m;
    for (double& v : out.values()) v *= s;
    return out;
}

void add_inplace(Matrix& dst, const Matrix& src) {
    require_same_shape(dst, src, "add_inplace");
    for (std::size_t i = 0; i < dst.size(); ++i) dst.values()[i] += src.values()[i];
}

Matrix softmax_rows(const Matrix& x) {
    Matrix out(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        double row_max = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < x.cols(); ++c) row_max = std::max(row_max, x(r, c));
        double sum = 0.0;
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const double e = std::exp(x(r, c) - row_max);
            out(r, c) = e;
            sum += e;
        }
        for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) /= sum;
    }
    return out;
}

Matrix softmax_rows_backward(const Matrix& softmax_out, const Matrix& grad_out) {
    require_same_shape(softmax_out, grad_out, "softmax_rows_backward");
    Matrix grad_in(softmax_out.rows(), softmax_out.cols());
    for (std::size_t r = 0; r < softmax_out.rows(); ++r) {
        double dot = 0.0;
        for (std::size_t c = 0; c < softmax_out.cols(); ++c)
            dot += softmax_out(r, c) * grad_out(r, c);
        for (std::size_t c = 0; c < softmax_out.cols(); ++c)
            grad_in(r, c) = softmax_out(r, c) * (grad_out(r, c) - dot);
    }
    return grad_in;
}

bool all_finite(const Matrix& m) {
    return std::all_of(m.values().begin(), m.values().end(),
                       [](double v) { return std::isfinite(v); });
}

void require_finite(const Matrix& m, const std::string& what) {
    if (!all_finite(m)) throw EvalError(what + ": non-finite element");
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw ShapeError("max_abs_diff: shape mismatch " + a.shape_str() + " vs " + b.shape_str());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    return worst;
}

}  // namespace semalign
