#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "omvar/errors.hpp"
#include "omvar/poly.hpp"

namespace omvar {

// Dense row-major matrix with optional row/column labels (tope names).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, T init = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const {
        return data_[i * cols_ + j];
    }

    const std::optional<std::vector<std::string>>& row_labels() const {
        return row_labels_;
    }
    const std::optional<std::vector<std::string>>& col_labels() const {
        return col_labels_;
    }
    void set_row_labels(std::vector<std::string> l);
    void set_col_labels(std::vector<std::string> l);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
    std::optional<std::vector<std::string>> row_labels_, col_labels_;
};

using PolyMatrix = Matrix<MultiPoly>;
using ModMatrix = Matrix<Fp>;

template <class T>
void Matrix<T>::set_row_labels(std::vector<std::string> l) {
    if (l.size() != rows_)
        throw std::invalid_argument("row label count mismatch");
    row_labels_ = std::move(l);
}

template <class T>
void Matrix<T>::set_col_labels(std::vector<std::string> l) {
    if (l.size() != cols_)
        throw std::invalid_argument("column label count mismatch");
    col_labels_ = std::move(l);
}

// Row labels come from the left factor, column labels from the right.
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
        throw std::invalid_argument("matrix product with empty factor");
    Matrix<T> out(a.rows(), b.cols(), a(0, 0) - a(0, 0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            for (size_t j = 0; j < b.cols(); ++j)
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
    if (a.row_labels()) out.set_row_labels(*a.row_labels());
    if (b.col_labels()) out.set_col_labels(*b.col_labels());
    return out;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix<T> out = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

bool is_identity(const PolyMatrix& a);
bool is_identity(const ModMatrix& a);

PolyMatrix poly_identity(size_t n, uint32_t nvars);

// Fraction-free Bareiss elimination; every interior division is exact.
// Refuses matrices above `max_size` unless forced.
MultiPoly det_symbolic(const PolyMatrix& a, size_t max_size = 12,
                       bool force = false);

Fp det_modp(const ModMatrix& a);

ModMatrix eval_matrix(const PolyMatrix& a, std::span<const Fp> point);

// JSON array-of-arrays of canonical polynomial strings.
std::string matrix_to_json(const PolyMatrix& a);

} // namespace omvar
