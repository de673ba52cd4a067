#include "tangnet/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace tangnet {

namespace {

void check_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ArgumentError("matrix entry is not finite");
        }
    }
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    check_finite(entries_);
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_[i * n + i] = Complex(1.0, 0.0);
    }
    m.hermitian_ = true;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m.entries_[i * diag.size() + i] = diag[i];
    }
    check_finite(m.entries_);
    return m;
}

CMatrix CMatrix::as_hermitian() const {
    if (rows_ != cols_) {
        throw ContractError("Hermitian tag requires a square matrix");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            worst = std::max(worst,
                             std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    const double bound = kHermitianTol * std::max(1.0, max_abs());
    if (worst > bound) {
        throw ContractError("matrix is not Hermitian: max|A - A^dagger| = " +
                            std::to_string(worst));
    }
    CMatrix out = *this;
    out.hermitian_ = true;
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.entries_[j * rows_ + i] = std::conj((*this)(i, j));
        }
    }
    out.hermitian_ = hermitian_;
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix addition shape mismatch");
    }
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] + other.entries_[k];
    }
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix subtraction shape mismatch");
    }
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] - other.entries_[k];
    }
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    CMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.entries_[i * other.cols_ + j] += a * other(k, j);
            }
        }
    }
    return out;
}

CMatrix CMatrix::scaled(Complex factor) const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] * factor;
    }
    return out;
}

Complex CMatrix::trace() const {
    if (rows_ != cols_) {
        throw DimensionError("trace requires a square matrix");
    }
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix comparison shape mismatch");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
    }
    return m;
}

} // namespace tangnet
