#include "ttkit/ttm.hpp"

#include <string>

#include "ttkit/block.hpp"
#include "ttkit/errors.hpp"

namespace ttkit {

MTTCore::MTTCore(std::size_t r_left, std::size_t row_dim, std::size_t col_dim,
                 std::size_t r_right, std::vector<double> values)
    : data_(Shape({r_left, row_dim, col_dim, r_right}), std::move(values)) {}

MTTCore::MTTCore(DenseTensor data) : data_(std::move(data)) {
    if (data_.order() != 4) {
        throw shape_error("MTTCore: data of order " + std::to_string(data_.order()) +
                          ", expected 4");
    }
}

DenseTensor MTTCore::slice(std::size_t i, std::size_t j) const {
    if (i >= row_dim() || j >= col_dim()) {
        throw shape_error("MTTCore::slice: index (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range for block size " +
                          std::to_string(row_dim()) + " x " + std::to_string(col_dim()));
    }
    const std::size_t rl = r_left(), rr = r_right();
    std::vector<double> out(rl * rr);
    for (std::size_t a = 0; a < rl; ++a) {
        for (std::size_t c = 0; c < rr; ++c) {
            out[a * rr + c] = data_.values()[((a * row_dim() + i) * col_dim() + j) * rr + c];
        }
    }
    return DenseTensor(Shape({rl, rr}), std::move(out));
}

TTMatrix::TTMatrix(std::vector<MTTCore> cores) : cores_(std::move(cores)) {
    if (cores_.empty()) {
        throw shape_error("matrix tensor train needs at least one core");
    }
    if (cores_.front().r_left() != 1) {
        throw shape_error("left boundary rank is " +
                          std::to_string(cores_.front().r_left()) + ", expected 1");
    }
    if (cores_.back().r_right() != 1) {
        throw shape_error("right boundary rank is " +
                          std::to_string(cores_.back().r_right()) + ", expected 1");
    }
    for (std::size_t k = 0; k + 1 < cores_.size(); ++k) {
        if (cores_[k].r_right() != cores_[k + 1].r_left()) {
            throw shape_error("bond " + std::to_string(k + 1) + ": right rank " +
                              std::to_string(cores_[k].r_right()) + " of core " +
                              std::to_string(k + 1) + " does not match left rank " +
                              std::to_string(cores_[k + 1].r_left()) + " of core " +
                              std::to_string(k + 2));
        }
    }
}

std::vector<std::size_t> TTMatrix::row_dims() const {
    std::vector<std::size_t> d(cores_.size());
    for (std::size_t k = 0; k < cores_.size(); ++k) d[k] = cores_[k].row_dim();
    return d;
}

std::vector<std::size_t> TTMatrix::col_dims() const {
    std::vector<std::size_t> d(cores_.size());
    for (std::size_t k = 0; k < cores_.size(); ++k) d[k] = cores_[k].col_dim();
    return d;
}

std::size_t TTMatrix::rank(std::size_t n) const {
    if (n > order()) {
        throw shape_error("TTMatrix::rank: bond " + std::to_string(n) +
                          " out of range 0.." + std::to_string(order()));
    }
    return (n == 0) ? 1 : cores_[n - 1].r_right();
}

std::vector<std::size_t> TTMatrix::bond_ranks() const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k + 1 < cores_.size(); ++k) r.push_back(cores_[k].r_right());
    return r;
}

const MTTCore& TTMatrix::core(std::size_t n) const {
    return cores_[mode_axis(order(), n, "TTMatrix::core")];
}

std::size_t TTMatrix::storage_bytes() const {
    std::size_t total = 0;
    for (const auto& c : cores_) total += c.data().storage_bytes();
    return total;
}

TTMatrix ttm_identity(const std::vector<std::size_t>& dims) {
    if (dims.empty()) {
        throw shape_error("ttm_identity: needs at least one mode");
    }
    std::vector<MTTCore> cores;
    cores.reserve(dims.size());
    for (std::size_t d : dims) {
        std::vector<double> v(d * d, 0.0);
        for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1.0;
        cores.emplace_back(1, d, d, 1, std::move(v));
    }
    return TTMatrix(std::move(cores));
}

double ttm_entry(const TTMatrix& a, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx) {
    if (row_idx.size() != a.order() || col_idx.size() != a.order()) {
        throw shape_error("ttm_entry: multi-indices of lengths " +
                          std::to_string(row_idx.size()) + " and " +
                          std::to_string(col_idx.size()) + " for an order-" +
                          std::to_string(a.order()) + " operator");
    }
    std::vector<double> v{1.0};
    for (std::size_t k = 0; k < a.order(); ++k) {
        const MTTCore& c = a.cores()[k];
        if (row_idx[k] >= c.row_dim() || col_idx[k] >= c.col_dim()) {
            throw shape_error("ttm_entry: index (" + std::to_string(row_idx[k]) + "," +
                              std::to_string(col_idx[k]) + ") out of range for mode " +
                              std::to_string(k + 1) + " of block size " +
                              std::to_string(c.row_dim()) + " x " +
                              std::to_string(c.col_dim()));
        }
        const std::size_t rr = c.r_right();
        std::vector<double> w(rr, 0.0);
        for (std::size_t p = 0; p < c.r_left(); ++p) {
            const double vp = v[p];
            if (vp == 0.0) continue;
            const std::size_t base =
                ((p * c.row_dim() + row_idx[k]) * c.col_dim() + col_idx[k]) * rr;
            for (std::size_t q = 0; q < rr; ++q) {
                w[q] += vp * c.data().values()[base + q];
            }
        }
        v = std::move(w);
    }
    return v[0];
}

DenseTensor ttm_to_dense(const TTMatrix& a, std::size_t mem_cap_bytes) {
    const MTTCore& first = a.cores().front();
    std::vector<double> buf(first.data().values().begin(), first.data().values().end());
    std::size_t rows = first.row_dim();
    std::size_t cols = first.col_dim();
    require_within_cap(buf.size(), mem_cap_bytes, "ttm_to_dense");
    for (std::size_t k = 1; k < a.order(); ++k) {
        const MTTCore& c = a.cores()[k];
        const std::size_t i_n = c.row_dim(), j_n = c.col_dim();
        const std::size_t r = c.r_left(), rn = c.r_right();
        const std::size_t next_rows = checked_mul(rows, i_n);
        const std::size_t next_cols = checked_mul(cols, j_n);
        const std::size_t count =
            checked_mul(checked_mul(next_rows, next_cols), rn);
        require_within_cap(count, mem_cap_bytes, "ttm_to_dense");
        std::vector<double> next(count, 0.0);
        for (std::size_t pi = 0; pi < rows; ++pi) {
            for (std::size_t pj = 0; pj < cols; ++pj) {
                const std::size_t cur_base = (pi * cols + pj) * r;
                for (std::size_t rr = 0; rr < r; ++rr) {
                    const double cv = buf[cur_base + rr];
                    if (cv == 0.0) continue;
                    for (std::size_t i = 0; i < i_n; ++i) {
                        for (std::size_t j = 0; j < j_n; ++j) {
                            const std::size_t core_base =
                                ((rr * i_n + i) * j_n + j) * rn;
                            const std::size_t out_base =
                                ((pi * i_n + i) * next_cols + (pj * j_n + j)) * rn;
                            for (std::size_t rq = 0; rq < rn; ++rq) {
                                next[out_base + rq] += cv * c.data().values()[core_base + rq];
                            }
                        }
                    }
                }
            }
        }
        buf = std::move(next);
        rows = next_rows;
        cols = next_cols;
    }
    return DenseTensor(Shape({rows, cols}), std::move(buf));
}

DenseTensor ttm_densify_strong_kron(const TTMatrix& a, std::size_t mem_cap_bytes) {
    auto core_block = [](const MTTCore& c) {
        std::vector<DenseTensor> blocks;
        blocks.reserve(c.r_left() * c.r_right());
        for (std::size_t p = 0; p < c.r_left(); ++p) {
            for (std::size_t q = 0; q < c.r_right(); ++q) {
                std::vector<double> blk(c.row_dim() * c.col_dim());
                for (std::size_t i = 0; i < c.row_dim(); ++i) {
                    for (std::size_t j = 0; j < c.col_dim(); ++j) {
                        blk[i * c.col_dim() + j] =
                            c.data().values()[((p * c.row_dim() + i) * c.col_dim() + j) *
                                                  c.r_right() +
                                              q];
                    }
                }
                blocks.emplace_back(Shape({c.row_dim(), c.col_dim()}), std::move(blk));
            }
        }
        return BlockMatrix(c.r_left(), c.r_right(), std::move(blocks));
    };

    BlockMatrix acc = core_block(a.cores().front());
    std::size_t rows = a.cores().front().row_dim();
    std::size_t cols = a.cores().front().col_dim();
    for (std::size_t k = 1; k < a.order(); ++k) {
        const MTTCore& c = a.cores()[k];
        rows = checked_mul(rows, c.row_dim());
        cols = checked_mul(cols, c.col_dim());
        require_within_cap(checked_mul(checked_mul(rows, cols), c.r_right()),
                           mem_cap_bytes, "ttm_densify_strong_kron");
        acc = strong_kron(acc, core_block(c));
    }
    return acc.block(0, 0);
}

} // namespace ttkit
