#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttkit/dense_tensor.hpp"

namespace ttkit::oracle {

// Brute-force reference implementations used to check the library kernels.
// Each one is written as a direct loop over output entries, mapping
// multi-indices with the shared Shape helpers and nothing else, so the only
// code shared with the optimized kernels is the linearization convention.

/// Budget for a single reference computation, in scalar multiply-adds.
/// References refuse (capacity_error) to run past it.
inline constexpr std::size_t kWorkCap = 10'000'000;

DenseTensor ref_matricize(const DenseTensor& a, std::size_t n);
DenseTensor ref_matricize_prefix(const DenseTensor& a, std::size_t n);
DenseTensor ref_kron(const DenseTensor& a, const DenseTensor& b);
DenseTensor ref_kron_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n);
DenseTensor ref_kron_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n);
DenseTensor ref_hadamard(const DenseTensor& a, const DenseTensor& b);
DenseTensor ref_outer(const DenseTensor& a, const DenseTensor& b);
DenseTensor ref_direct_sum(const DenseTensor& a, const DenseTensor& b);
DenseTensor ref_direct_sum_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n);
DenseTensor ref_direct_sum_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n);
DenseTensor ref_mode_n_product(const DenseTensor& a, const DenseTensor& u, std::size_t n);
DenseTensor ref_mode_n_vector_product(const DenseTensor& a, const DenseTensor& v,
                                      std::size_t n);
DenseTensor ref_contracted_product(const DenseTensor& a, const DenseTensor& b);
DenseTensor ref_tucker_operator(const DenseTensor& g,
                                const std::vector<DenseTensor>& factors);
DenseTensor ref_self_contraction(const DenseTensor& a);

/// Scalar product of same-shape tensors.
double ref_dot(const DenseTensor& a, const DenseTensor& b);

/// y = A * vec(x) reshaped to row_dims; A is an order-2 matrix whose column
/// count equals x.count().
DenseTensor ref_matvec(const DenseTensor& a, const DenseTensor& x,
                       const std::vector<std::size_t>& row_dims);

/// vec(x)^T * A * vec(x) with A square of size x.count().
double ref_quadform(const DenseTensor& a, const DenseTensor& x);

/// Singular values (descending) of the n-th prefix matricization, 0 <= n <= N.
std::vector<double> prefix_singular_values(const DenseTensor& a, std::size_t n);

/// Frobenius norm of the part of the n-th prefix matricization beyond the
/// best rank-`rank` approximation: sqrt(sum of sigma_k^2 for k >= rank).
double unfolding_tail(const DenseTensor& a, std::size_t n, std::size_t rank);

/// Outcome of one reference comparison.  `instance` describes the tested
/// input (seed, shapes) so failures are reproducible from the log line alone.
struct OracleReport {
    std::string name;
    std::string instance;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    /// One line of key=value fields, e.g.
    /// "PASS kron seed=7 dims=(2,3) max_abs=1.2e-16 max_rel=3.4e-16 tol=1.0e-12".
    std::string to_line() const;
};

/// Entrywise comparison; pass means the relative error (absolute error over
/// the reference's max magnitude) is within tolerance.  A shape mismatch
/// fails with an infinite error.
OracleReport compare_dense(const std::string& name, const std::string& instance,
                           const DenseTensor& got, const DenseTensor& want,
                           double tolerance);

OracleReport compare_scalar(const std::string& name, const std::string& instance,
                            double got, double want, double tolerance);

} // namespace ttkit::oracle
