// matrix.hpp
// Dense complex matrices. Values are immutable after construction and may be
// shared read-only across threads. A matrix can carry a "Hermitian" tag,
// which certifies max|A - A^dagger| <= 1e-10 * max(1, max|A|); the Hermitian
// eigensolver accepts only tagged matrices.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tangnet/error.hpp"

namespace tangnet {

using Complex = std::complex<double>;

constexpr double kHermitianTol = 1e-10;

class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}

    // Zero matrix.
    CMatrix(std::size_t rows, std::size_t cols);

    // Row-major entries; every component must be finite.
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<Complex>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Complex>& entries() const { return entries_; }

    bool hermitian_tagged() const { return hermitian_; }

    // Returns a copy carrying the Hermitian tag; throws ContractError if the
    // matrix fails the Hermiticity bound.
    CMatrix as_hermitian() const;

    CMatrix adjoint() const;
    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const CMatrix& other) const;
    CMatrix scaled(Complex factor) const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max over entries of |A - B|, shapes must agree
    double max_abs_diff(const CMatrix& other) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
    bool hermitian_ = false;
};

// Eigendecomposition of a Hermitian matrix. Eigenvalues descending; columns
// of `eigenvectors` are the matching unit eigenvectors, each phased so its
// first significant component is real-positive. Ties in the spectrum are
// broken by a fixed lexicographic rule on the phased vectors, so identical
// input yields identical output.
struct EigenSystem {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

} // namespace tangnet
