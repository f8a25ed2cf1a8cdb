#pragma once

#include <vector>

#include "ttkit/dense_tensor.hpp"
#include "ttkit/tt.hpp"

namespace ttkit {

/// One order-4 matrix-train core of shape R_left x I x J x R_right, stored
/// row-major (right bond fastest).  I indexes matrix rows, J matrix columns.
class MTTCore {
public:
    MTTCore(std::size_t r_left, std::size_t row_dim, std::size_t col_dim,
            std::size_t r_right, std::vector<double> values);

    /// Wraps an order-4 tensor; throws shape_error on any other order.
    explicit MTTCore(DenseTensor data);

    std::size_t r_left() const { return data_.shape().dims()[0]; }
    std::size_t row_dim() const { return data_.shape().dims()[1]; }
    std::size_t col_dim() const { return data_.shape().dims()[2]; }
    std::size_t r_right() const { return data_.shape().dims()[3]; }

    const DenseTensor& data() const { return data_; }

    /// Lateral slice at matrix indices (i, j) as an R_left x R_right matrix.
    DenseTensor slice(std::size_t i, std::size_t j) const;

private:
    DenseTensor data_;
};

/// Linear operator in matrix tensor-train form: cores of shapes
/// R_{n-1} x I_n x J_n x R_n with R_0 = R_N = 1, representing a matrix of
/// size (I_1 ... I_N) x (J_1 ... J_N).
class TTMatrix {
public:
    /// Validates the chain: at least one core, boundary ranks 1, adjacent
    /// bond ranks equal.
    explicit TTMatrix(std::vector<MTTCore> cores);

    std::size_t order() const { return cores_.size(); }
    std::vector<std::size_t> row_dims() const;
    std::vector<std::size_t> col_dims() const;

    std::size_t rank(std::size_t n) const;
    std::vector<std::size_t> bond_ranks() const;

    const MTTCore& core(std::size_t n) const;  // 1-based site
    const std::vector<MTTCore>& cores() const { return cores_; }

    std::size_t storage_bytes() const;

private:
    std::vector<MTTCore> cores_;
};

/// Identity operator with square per-mode blocks of the given sizes; all
/// bond ranks are 1.
TTMatrix ttm_identity(const std::vector<std::size_t>& dims);

/// Matrix entry A(i, j) as the product of lateral slices; both multi-indices
/// are 0-based.
double ttm_entry(const TTMatrix& a, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx);

/// Full (I_1 ... I_N) x (J_1 ... J_N) matrix by chain contraction.
DenseTensor ttm_to_dense(const TTMatrix& a, std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Same matrix assembled as the strong Kronecker product of the per-core
/// (R_{n-1} I_n) x (J_n R_n) block matrices; agrees with ttm_to_dense.
DenseTensor ttm_densify_strong_kron(const TTMatrix& a,
                                    std::size_t mem_cap_bytes = kDefaultMemCapBytes);

} // namespace ttkit
