// Test-side oracles, deliberately independent of the library's linear
// algebra: a per-element partial trace, a cyclic-Jacobi eigenvalue solver,
// and closed-form entropy helpers. Everything here is written from the
// definitions, not from the implementation under test.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tangnet/matrix.hpp"

namespace oracles {

using tangnet::CMatrix;
using tangnet::Complex;

// Contracts the traced indices one matrix element at a time by decomposing
// row/column composite indices into per-party digits.
CMatrix naive_partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

// Eigenvalues of a Hermitian matrix via cyclic Jacobi sweeps, descending.
std::vector<double> jacobi_eigenvalues(const CMatrix& a);

// -sum p log2 p with 0 log 0 = 0; tiny negatives are clamped.
double shannon_bits(const std::vector<double>& probs);

// binary entropy H2(p) in bits
double binary_entropy_bits(double p);

// entropy of a Hermitian matrix through the Jacobi oracle
double entropy_bits_oracle(const CMatrix& rho);

} // namespace oracles
