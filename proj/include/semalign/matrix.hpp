#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "semalign/error.hpp"

namespace semalign {

// Dense row-major matrix of 64-bit floats. All reductions accumulate
// left-to-right so results are bit-reproducible across runs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Throws ShapeError naming both shapes unless a.cols == b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

// Elementwise ops; all throw ShapeError on mismatched shapes.
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);
void add_inplace(Matrix& dst, const Matrix& src);

// Row-wise stable softmax: exp(x - rowmax) / sum. Rows sum to 1 within 1e-12.
Matrix softmax_rows(const Matrix& x);

// Backward of softmax_rows through row r: given s = softmax(z) and ds,
// dz[c] = s[c] * (ds[c] - sum_j s[j]*ds[j]).
Matrix softmax_rows_backward(const Matrix& softmax_out, const Matrix& grad_out);

bool all_finite(const Matrix& m);

// Throws EvalError naming `what` when any element is NaN/Inf.
void require_finite(const Matrix& m, const std::string& what);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace semalign
