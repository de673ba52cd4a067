#include "tangnet/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace tangnet {

namespace {

std::atomic<std::size_t> g_dimension_cap{4096};

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    return out;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(m(i, j));
        }
    }
    return CMatrix(static_cast<std::size_t>(m.rows()),
                   static_cast<std::size_t>(m.cols()), std::move(entries));
}

// Phase each column so its first component with |.| > 1e-12 is real-positive.
void canonicalize_column_phases(Eigen::MatrixXcd& vecs) {
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
            const Complex z = vecs(r, c);
            if (std::abs(z) > 1e-12) {
                vecs.col(c) *= std::conj(z) / std::abs(z);
                break;
            }
        }
    }
}

// Fixed ordering rule for equal eigenvalues: compare phased vectors
// lexicographically by (re, im) per component.
bool column_less(const Eigen::MatrixXcd& vecs, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
        const Complex za = vecs(r, a);
        const Complex zb = vecs(r, b);
        if (za.real() != zb.real()) return za.real() > zb.real();
        if (za.imag() != zb.imag()) return za.imag() > zb.imag();
    }
    return false;
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::size_t dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(std::size_t cap) {
    if (cap == 0) {
        throw ArgumentError("dimension cap must be positive");
    }
    g_dimension_cap.store(cap);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t cap = dimension_cap();
    if (b.rows() != 0 && a.rows() > cap / b.rows()) {
        throw SizeLimitError("kron result rows exceed dimension cap " +
                             std::to_string(cap));
    }
    if (b.cols() != 0 && a.cols() > cap / b.cols()) {
        throw SizeLimitError("kron result cols exceed dimension cap " +
                             std::to_string(cap));
    }
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<Complex> entries(rows * cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    entries[(i * b.rows() + k) * cols + (j * b.cols() + l)] =
                        aij * b(k, l);
                }
            }
        }
    }
    CMatrix out(rows, cols, std::move(entries));
    if (a.hermitian_tagged() && b.hermitian_tagged()) {
        out = out.as_hermitian();
    }
    return out;
}

CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw ArgumentError("party dimension must be positive");
        total *= d;
    }
    if (rho.rows() != rho.cols() || rho.rows() != total) {
        throw DimensionError("partial_trace: matrix side " +
                             std::to_string(rho.rows()) +
                             " does not match product of dims " +
                             std::to_string(total));
    }
    if (keep.empty()) {
        throw ArgumentError("partial_trace: keep set must be nonempty");
    }
    std::set<std::size_t> keep_set(keep.begin(), keep.end());
    if (keep_set.size() != keep.size()) {
        throw ArgumentError("partial_trace: duplicate index in keep set");
    }
    for (std::size_t k : keep_set) {
        if (k >= dims.size()) {
            throw ArgumentError("partial_trace: keep index " + std::to_string(k) +
                                " out of range");
        }
    }

    const std::size_t n = dims.size();
    std::vector<std::size_t> kept(keep_set.begin(), keep_set.end());
    std::vector<std::size_t> traced;
    for (std::size_t p = 0; p < n; ++p) {
        if (!keep_set.count(p)) traced.push_back(p);
    }

    // strides of each party in the composite index (first party most significant)
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t p = n; p-- > 1;) {
        stride[p - 1] = stride[p] * dims[p];
    }

    std::size_t kept_dim = 1;
    for (std::size_t p : kept) kept_dim *= dims[p];
    std::size_t traced_dim = 1;
    for (std::size_t p : traced) traced_dim *= dims[p];

    // composite offset of a kept (or traced) sub-index within the full index
    auto offsets = [&](const std::vector<std::size_t>& parties, std::size_t dim) {
        std::vector<std::size_t> out(dim, 0);
        for (std::size_t x = 0; x < dim; ++x) {
            std::size_t rem = x;
            std::size_t off = 0;
            for (std::size_t q = parties.size(); q-- > 0;) {
                const std::size_t d = dims[parties[q]];
                off += (rem % d) * stride[parties[q]];
                rem /= d;
            }
            out[x] = off;
        }
        return out;
    };
    const std::vector<std::size_t> kept_off = offsets(kept, kept_dim);
    const std::vector<std::size_t> traced_off = offsets(traced, traced_dim);

    std::vector<Complex> entries(kept_dim * kept_dim, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < kept_dim; ++r) {
        for (std::size_t c = 0; c < kept_dim; ++c) {
            Complex sum(0.0, 0.0);
            for (std::size_t t = 0; t < traced_dim; ++t) {
                sum += rho(kept_off[r] + traced_off[t], kept_off[c] + traced_off[t]);
            }
            entries[r * kept_dim + c] = sum;
        }
    }
    CMatrix out(kept_dim, kept_dim, std::move(entries));
    if (rho.hermitian_tagged()) {
        out = out.as_hermitian();
    }
    return out;
}

EigenSystem eig_hermitian(const CMatrix& a) {
    if (!a.hermitian_tagged()) {
        throw ContractError("eig_hermitian requires a Hermitian-tagged matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a));
    if (solver.info() != Eigen::Success) {
        throw ContractError("Hermitian eigensolver failed to converge");
    }
    const Eigen::VectorXd vals = solver.eigenvalues(); // ascending
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    canonicalize_column_phases(vecs);

    const Eigen::Index n = vals.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const double tie_tol =
        1e-12 * std::max(1.0, std::max(std::abs(vals(0)), std::abs(vals(n - 1))));
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) {
                         if (std::abs(vals(x) - vals(y)) > tie_tol) {
                             return vals(x) > vals(y);
                         }
                         return column_less(vecs, x, y);
                     });

    EigenSystem out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    Eigen::MatrixXcd sorted(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        out.eigenvalues.push_back(vals(order[static_cast<std::size_t>(c)]));
        sorted.col(c) = vecs.col(order[static_cast<std::size_t>(c)]);
    }
    out.eigenvectors = from_eigen(sorted);
    return out;
}

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_open_double() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

void SplitMix64::next_gaussian_pair(double& z0, double& z1) {
    const double u1 = next_open_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    z0 = radius * std::cos(angle);
    z1 = radius * std::sin(angle);
}

Complex SplitMix64::next_complex_gaussian() {
    double re = 0.0;
    double im = 0.0;
    next_gaussian_pair(re, im);
    return Complex(re, im);
}

SplitMix64 SplitMix64::split(std::uint64_t index) const {
    return SplitMix64(mix64(seed_ ^ mix64(index + 1)));
}

std::vector<Complex> haar_random_amplitudes(const std::vector<std::size_t>& dims,
                                            std::uint64_t seed) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw ArgumentError("party dimension must be positive");
        if (total > dimension_cap() / d) {
            throw SizeLimitError("state dimension exceeds cap " +
                                 std::to_string(dimension_cap()));
        }
        total *= d;
    }
    SplitMix64 rng(seed);
    std::vector<Complex> amps(total);
    double norm_sq = 0.0;
    for (Complex& a : amps) {
        a = rng.next_complex_gaussian();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) {
        a *= inv;
    }
    return amps;
}

CMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw ArgumentError("unitary dimension must be positive");
    if (dim > dimension_cap()) {
        throw SizeLimitError("unitary dimension exceeds cap " +
                             std::to_string(dimension_cap()));
    }
    SplitMix64 rng(seed);
    Eigen::MatrixXcd g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                rng.next_complex_gaussian();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t k = 0; k < dim; ++k) {
        const Complex rkk = r(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        const double mag = std::abs(rkk);
        q.col(static_cast<Eigen::Index>(k)) *= (mag > 0.0) ? rkk / mag : Complex(1.0, 0.0);
    }
    return from_eigen(q);
}

} // namespace tangnet
