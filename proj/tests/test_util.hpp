#pragma once

// Shared helpers for the test binaries: naive chain evaluators written as
// plain index loops (independent of the library's optimized contraction
// paths), instance-tag builders for reproducible failure messages, and small
// constructors used by several suites.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"
#include "ttkit/oracle.hpp"
#include "ttkit/random.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/tt_arith.hpp"
#include "ttkit/ttm.hpp"

namespace ttkit::testutil {

inline std::string dims_tag(const std::vector<std::size_t>& dims) {
    std::string out = "(";
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(dims[k]);
    }
    return out + ")";
}

inline std::string seed_tag(std::uint64_t seed, const std::vector<std::size_t>& dims) {
    return "seed=" + std::to_string(seed) + " dims=" + dims_tag(dims);
}

/// Largest entrywise error of got relative to the reference's max magnitude.
inline double rel_err(const DenseTensor& got, const DenseTensor& want) {
    return oracle::compare_dense("cmp", "", got, want, 0.0).max_rel_err;
}

inline double rel_err_scalar(double got, double want) {
    return oracle::compare_scalar("cmp", "", got, want, 0.0).max_rel_err;
}

/// Runs fn and reports whether it threw an E whose message contains `part`.
template <typename E, typename Fn>
bool throws_containing(Fn&& fn, const std::string& part) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(part) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

/// Entry evaluation by an explicit slice-product loop over raw core values.
inline double naive_tt_entry(const TTTensor& x, const std::vector<std::size_t>& idx) {
    std::vector<double> boundary{1.0};
    for (std::size_t n = 1; n <= x.order(); ++n) {
        const TTCore& c = x.core(n);
        std::vector<double> next(c.r_right(), 0.0);
        for (std::size_t a = 0; a < c.r_left(); ++a) {
            for (std::size_t b = 0; b < c.r_right(); ++b) {
                next[b] += boundary[a] *
                           c.data().at_flat((a * c.dim() + idx[n - 1]) * c.r_right() + b);
            }
        }
        boundary = std::move(next);
    }
    return boundary[0];
}

/// Densification by evaluating naive_tt_entry at every index.
inline DenseTensor naive_tt_dense(const TTTensor& x) {
    const Shape shape(x.dims());
    std::vector<double> out(shape.count());
    for (std::size_t flat = 0; flat < shape.count(); ++flat) {
        const auto idx = unflatten_index(shape, flat);
        out[flat] = naive_tt_entry(x, idx);
    }
    return DenseTensor(shape, std::move(out));
}

/// Partial slice-product over cores 1..n: the length-R_n boundary vector at
/// the given leading physical indices.
inline std::vector<double> naive_tt_prefix(const TTTensor& x,
                                           const std::vector<std::size_t>& idx,
                                           std::size_t n) {
    std::vector<double> boundary{1.0};
    for (std::size_t k = 1; k <= n; ++k) {
        const TTCore& c = x.core(k);
        std::vector<double> next(c.r_right(), 0.0);
        for (std::size_t a = 0; a < c.r_left(); ++a) {
            for (std::size_t b = 0; b < c.r_right(); ++b) {
                next[b] += boundary[a] *
                           c.data().at_flat((a * c.dim() + idx[k - 1]) * c.r_right() + b);
            }
        }
        boundary = std::move(next);
    }
    return boundary;
}

inline double naive_ttm_entry(const TTMatrix& a, const std::vector<std::size_t>& row,
                              const std::vector<std::size_t>& col) {
    std::vector<double> boundary{1.0};
    for (std::size_t n = 1; n <= a.order(); ++n) {
        const MTTCore& c = a.core(n);
        std::vector<double> next(c.r_right(), 0.0);
        for (std::size_t p = 0; p < c.r_left(); ++p) {
            for (std::size_t q = 0; q < c.r_right(); ++q) {
                next[q] += boundary[p] *
                           c.data().at_flat(
                               ((p * c.row_dim() + row[n - 1]) * c.col_dim() + col[n - 1]) *
                                   c.r_right() +
                               q);
            }
        }
        boundary = std::move(next);
    }
    return boundary[0];
}

/// Dense (prod I) x (prod J) matrix built entry by entry from slice products.
inline DenseTensor naive_ttm_dense(const TTMatrix& a) {
    const Shape rows(a.row_dims());
    const Shape cols(a.col_dims());
    std::vector<double> out(checked_mul(rows.count(), cols.count()));
    for (std::size_t i = 0; i < rows.count(); ++i) {
        const auto ridx = unflatten_index(rows, i);
        for (std::size_t j = 0; j < cols.count(); ++j) {
            const auto cidx = unflatten_index(cols, j);
            out[i * cols.count() + j] = naive_ttm_entry(a, ridx, cidx);
        }
    }
    return DenseTensor(Shape({rows.count(), cols.count()}), std::move(out));
}

/// Bond-1 train of all-ones cores over the given mode sizes.
inline TTTensor ones_tt(const std::vector<std::size_t>& dims) {
    std::vector<TTCore> cores;
    cores.reserve(dims.size());
    for (std::size_t d : dims) {
        cores.emplace_back(1, d, 1, std::vector<double>(d, 1.0));
    }
    return TTTensor(std::move(cores));
}

/// Copy of x with the site core's values replaced (shape must match).
inline TTTensor with_core(const TTTensor& x, std::size_t site, const DenseTensor& data) {
    std::vector<TTCore> cores = x.cores();
    cores[site - 1] = TTCore(data);
    return TTTensor(std::move(cores));
}

/// Operator whose cores are symmetric under the (row, column) physical swap,
/// which makes the densified matrix symmetric.
inline TTMatrix symmetric_random_ttm(Rng& rng, const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& bond_ranks) {
    const TTMatrix raw = random_ttm(rng, dims, dims, bond_ranks);
    std::vector<MTTCore> cores;
    cores.reserve(raw.order());
    for (const MTTCore& c : raw.cores()) {
        const std::size_t rl = c.r_left(), d = c.row_dim(), rr = c.r_right();
        std::vector<double> vals(c.data().count());
        for (std::size_t p = 0; p < rl; ++p) {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    for (std::size_t q = 0; q < rr; ++q) {
                        vals[((p * d + i) * d + j) * rr + q] =
                            0.5 * (c.data().at_flat(((p * d + i) * d + j) * rr + q) +
                                   c.data().at_flat(((p * d + j) * d + i) * rr + q));
                    }
                }
            }
        }
        cores.emplace_back(rl, d, d, rr, std::move(vals));
    }
    return TTMatrix(std::move(cores));
}

/// Assembles an rl x dim x rr core tensor from its `dim` lateral slices.
inline DenseTensor core_from_slices(const std::vector<DenseTensor>& slices, std::size_t rl,
                                    std::size_t dim, std::size_t rr) {
    std::vector<double> out(rl * dim * rr);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t a = 0; a < rl; ++a) {
            for (std::size_t b = 0; b < rr; ++b) {
                out[(a * dim + i) * rr + b] = slices[i].at_flat(a * rr + b);
            }
        }
    }
    return DenseTensor(Shape({rl, dim, rr}), std::move(out));
}

/// Assembles an rl x dim x rr core tensor from its mode-2 fibers, supplied
/// as fiber(a, b) -> length-dim vector.
template <typename FiberFn>
DenseTensor core_from_fibers(FiberFn&& fiber, std::size_t rl, std::size_t dim,
                             std::size_t rr) {
    std::vector<double> out(rl * dim * rr);
    for (std::size_t a = 0; a < rl; ++a) {
        for (std::size_t b = 0; b < rr; ++b) {
            const std::vector<double> f = fiber(a, b);
            for (std::size_t i = 0; i < dim; ++i) {
                out[(a * dim + i) * rr + b] = f[i];
            }
        }
    }
    return DenseTensor(Shape({rl, dim, rr}), std::move(out));
}

/// Mode-2 fiber of an order-3 core at bond indices (a, b).
inline std::vector<double> core_fiber(const DenseTensor& core, std::size_t a,
                                      std::size_t b) {
    const auto& d = core.shape().dims();
    std::vector<double> out(d[1]);
    for (std::size_t i = 0; i < d[1]; ++i) {
        out[i] = core.at_flat((a * d[1] + i) * d[2] + b);
    }
    return out;
}

/// Identity matrix over the product of mode sizes [first, last] of a shape
/// (an empty range gives the 1 x 1 identity).
inline DenseTensor identity_over(const Shape& shape, std::size_t first, std::size_t last) {
    return DenseTensor::identity(dim_product(shape, first, last));
}

} // namespace ttkit::testutil
