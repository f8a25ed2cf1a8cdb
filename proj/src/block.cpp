#include "ttkit/block.hpp"

#include <string>

#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

void require_uniform_blocks(const std::vector<DenseTensor>& blocks,
                            std::size_t grid_rows, std::size_t grid_cols,
                            std::size_t order, const char* what) {
    if (grid_rows == 0 || grid_cols == 0) {
        throw shape_error(std::string(what) + ": empty block grid");
    }
    if (blocks.size() != grid_rows * grid_cols) {
        throw shape_error(std::string(what) + ": " + std::to_string(blocks.size()) +
                          " blocks for a " + std::to_string(grid_rows) + " x " +
                          std::to_string(grid_cols) + " grid");
    }
    for (const auto& blk : blocks) {
        if (blk.order() != order) {
            throw shape_error(std::string(what) + ": block of order " +
                              std::to_string(blk.order()) + ", expected " +
                              std::to_string(order));
        }
        if (blk.shape() != blocks.front().shape()) {
            throw shape_error(std::string(what) + ": block shapes " +
                              blk.shape().to_string() + " and " +
                              blocks.front().shape().to_string() + " differ");
        }
    }
}

} // namespace

BlockMatrix::BlockMatrix(std::size_t grid_rows, std::size_t grid_cols,
                         std::vector<DenseTensor> blocks)
    : grid_rows_(grid_rows), grid_cols_(grid_cols), blocks_(std::move(blocks)) {
    require_uniform_blocks(blocks_, grid_rows_, grid_cols_, 2, "BlockMatrix");
    block_rows_ = blocks_.front().shape().dims()[0];
    block_cols_ = blocks_.front().shape().dims()[1];
}

const DenseTensor& BlockMatrix::block(std::size_t r1, std::size_t r2) const {
    if (r1 >= grid_rows_ || r2 >= grid_cols_) {
        throw shape_error("BlockMatrix::block: (" + std::to_string(r1) + "," +
                          std::to_string(r2) + ") out of range for a " +
                          std::to_string(grid_rows_) + " x " +
                          std::to_string(grid_cols_) + " grid");
    }
    return blocks_[r1 * grid_cols_ + r2];
}

DenseTensor BlockMatrix::densify() const {
    const std::size_t rows = checked_mul(grid_rows_, block_rows_);
    const std::size_t cols = checked_mul(grid_cols_, block_cols_);
    std::vector<double> out(checked_mul(rows, cols), 0.0);
    for (std::size_t r1 = 0; r1 < grid_rows_; ++r1) {
        for (std::size_t r2 = 0; r2 < grid_cols_; ++r2) {
            const DenseTensor& blk = blocks_[r1 * grid_cols_ + r2];
            for (std::size_t i = 0; i < block_rows_; ++i) {
                for (std::size_t j = 0; j < block_cols_; ++j) {
                    out[(r1 * block_rows_ + i) * cols + (r2 * block_cols_ + j)] =
                        blk.values()[i * block_cols_ + j];
                }
            }
        }
    }
    return DenseTensor(Shape({rows, cols}), std::move(out));
}

BlockTensor3::BlockTensor3(std::size_t grid_rows, std::size_t grid_cols,
                           std::vector<DenseTensor> blocks)
    : grid_rows_(grid_rows), grid_cols_(grid_cols), blocks_(std::move(blocks)) {
    require_uniform_blocks(blocks_, grid_rows_, grid_cols_, 3, "BlockTensor3");
}

const Shape& BlockTensor3::block_shape() const { return blocks_.front().shape(); }

const DenseTensor& BlockTensor3::block(std::size_t r1, std::size_t r2) const {
    if (r1 >= grid_rows_ || r2 >= grid_cols_) {
        throw shape_error("BlockTensor3::block: (" + std::to_string(r1) + "," +
                          std::to_string(r2) + ") out of range for a " +
                          std::to_string(grid_rows_) + " x " +
                          std::to_string(grid_cols_) + " grid");
    }
    return blocks_[r1 * grid_cols_ + r2];
}

DenseTensor BlockTensor3::densify() const {
    const auto& bs = block_shape().dims();
    const std::size_t rows = checked_mul(grid_rows_, bs[0]);
    const std::size_t cols = checked_mul(grid_cols_, bs[1]);
    Shape out_shape({rows, cols, bs[2]});
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t r1 = 0; r1 < grid_rows_; ++r1) {
        for (std::size_t r2 = 0; r2 < grid_cols_; ++r2) {
            const DenseTensor& blk = blocks_[r1 * grid_cols_ + r2];
            for (std::size_t i = 0; i < bs[0]; ++i) {
                for (std::size_t j = 0; j < bs[1]; ++j) {
                    for (std::size_t k = 0; k < bs[2]; ++k) {
                        out[((r1 * bs[0] + i) * cols + (r2 * bs[1] + j)) * bs[2] + k] =
                            blk.values()[(i * bs[1] + j) * bs[2] + k];
                    }
                }
            }
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

namespace {

template <typename Block>
std::vector<DenseTensor> strong_kron_blocks(const Block& a, const Block& b,
                                            const char* what) {
    if (a.grid_cols() != b.grid_rows()) {
        throw shape_error(std::string(what) + ": grid columns " +
                          std::to_string(a.grid_cols()) + " do not match grid rows " +
                          std::to_string(b.grid_rows()));
    }
    std::vector<DenseTensor> out;
    out.reserve(a.grid_rows() * b.grid_cols());
    for (std::size_t r1 = 0; r1 < a.grid_rows(); ++r1) {
        for (std::size_t r3 = 0; r3 < b.grid_cols(); ++r3) {
            DenseTensor acc = kron(a.block(r1, 0), b.block(0, r3));
            for (std::size_t r2 = 1; r2 < a.grid_cols(); ++r2) {
                acc = add(acc, kron(a.block(r1, r2), b.block(r2, r3)));
            }
            out.push_back(std::move(acc));
        }
    }
    return out;
}

} // namespace

BlockMatrix strong_kron(const BlockMatrix& a, const BlockMatrix& b) {
    return BlockMatrix(a.grid_rows(), b.grid_cols(),
                       strong_kron_blocks(a, b, "strong_kron"));
}

BlockTensor3 strong_kron(const BlockTensor3& a, const BlockTensor3& b) {
    return BlockTensor3(a.grid_rows(), b.grid_cols(),
                        strong_kron_blocks(a, b, "strong_kron"));
}

} // namespace ttkit
