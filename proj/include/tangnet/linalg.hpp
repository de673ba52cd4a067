// linalg.hpp
// Deterministic dense complex linear algebra: Kronecker products, partial
// trace over arbitrary party subsets, Hermitian eigendecomposition, and a
// seeded counter-based RNG used for Haar sampling. All functions are pure;
// callers may parallelize independent calls.

#pragma once

#include <cstdint>
#include <vector>

#include "tangnet/matrix.hpp"

namespace tangnet {

// Global total-dimension cap (default 4096). Everything in scope fits in a
// few qubits; the cap keeps the dense algebra honest. Overridable at runtime
// (the CLI honors TANGNET_MAX_DIM).
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

// Kronecker product: result[(i*b.rows+k), (j*b.cols+l)] = a(i,j) * b(k,l).
// Throws SizeLimitError if a result side would exceed the dimension cap.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Partial trace of a square matrix over the tensor factors NOT listed in
// `keep`. `dims` are the per-party dimensions (first party most significant);
// their product must equal the matrix side. `keep` must be a nonempty set of
// distinct party indices. Preserves the trace and the Hermitian tag.
CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep);

// Eigendecomposition of a Hermitian-tagged matrix. See EigenSystem for the
// ordering and phase conventions. Throws ContractError on untagged input.
EigenSystem eig_hermitian(const CMatrix& a);

// Splittable counter-based RNG (SplitMix64 core). No global state: every
// stream is fully determined by its seed, and `split` derives statistically
// independent substreams, so parallel property trials stay reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64();

    // uniform on [0, 1)
    double next_double();

    // uniform on (0, 1]
    double next_open_double();

    // standard normal pair via Box-Muller
    void next_gaussian_pair(double& z0, double& z1);

    // standard complex Gaussian (re and im independent N(0,1))
    Complex next_complex_gaussian();

    // substream `index` of this generator's original seed
    SplitMix64 split(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// Unit vector distributed with the Haar measure on the product space of
// `dims` (normalized complex-Gaussian vector). Identical seed gives
// bit-identical output.
std::vector<Complex> haar_random_amplitudes(const std::vector<std::size_t>& dims,
                                            std::uint64_t seed);

// Haar-distributed unitary of the given dimension (QR of a Ginibre matrix
// with the R-diagonal phases absorbed).
CMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

} // namespace tangnet
