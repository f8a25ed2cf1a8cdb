#pragma once

#include <vector>

#include "ttkit/dense_tensor.hpp"

namespace ttkit {

/// Matrix partitioned into an R1 x R2 grid of equally sized I1 x I2 blocks.
/// Blocks are stored as a dense row-major grid of order-2 tensors.
class BlockMatrix {
public:
    /// Builds from blocks listed row-major over the grid; every block must be
    /// an order-2 tensor of the same shape.
    BlockMatrix(std::size_t grid_rows, std::size_t grid_cols,
                std::vector<DenseTensor> blocks);

    std::size_t grid_rows() const { return grid_rows_; }
    std::size_t grid_cols() const { return grid_cols_; }
    std::size_t block_rows() const { return block_rows_; }
    std::size_t block_cols() const { return block_cols_; }

    const DenseTensor& block(std::size_t r1, std::size_t r2) const;

    /// Flattens to the (R1 * I1) x (R2 * I2) matrix with the block index slow
    /// and the intra-block index fast on both sides.
    DenseTensor densify() const;

private:
    std::size_t grid_rows_;
    std::size_t grid_cols_;
    std::size_t block_rows_;
    std::size_t block_cols_;
    std::vector<DenseTensor> blocks_;
};

/// Order-3 tensor partitioned into an R1 x R2 grid of I1 x I2 x I3 blocks;
/// the grid spans the first two modes and the third mode is shared.
class BlockTensor3 {
public:
    BlockTensor3(std::size_t grid_rows, std::size_t grid_cols,
                 std::vector<DenseTensor> blocks);

    std::size_t grid_rows() const { return grid_rows_; }
    std::size_t grid_cols() const { return grid_cols_; }
    const Shape& block_shape() const;

    const DenseTensor& block(std::size_t r1, std::size_t r2) const;

    /// Flattens to the (R1 * I1) x (R2 * I2) x I3 tensor.
    DenseTensor densify() const;

private:
    std::size_t grid_rows_;
    std::size_t grid_cols_;
    std::vector<DenseTensor> blocks_;
};

/// Strong Kronecker product: multiplies over the shared grid dimension while
/// taking Kronecker products of the blocks, C(r1,r3) = sum_r2 A(r1,r2) (x)
/// B(r2,r3).  A's grid columns must match B's grid rows.
BlockMatrix strong_kron(const BlockMatrix& a, const BlockMatrix& b);
BlockTensor3 strong_kron(const BlockTensor3& a, const BlockTensor3& b);

} // namespace ttkit
