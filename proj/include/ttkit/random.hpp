#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ttkit/dense_tensor.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/ttm.hpp"

namespace ttkit {

/// Seeded generator with a fixed engine-to-double mapping, so a given seed
/// produces the same value stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw from [-1, 1] built from the top 53 bits of the engine.
    double uniform_pm1();

private:
    std::mt19937_64 engine_;
};

/// Dense tensor with independent uniform [-1, 1] entries.
DenseTensor random_dense(Rng& rng, const Shape& shape);

/// Tensor train with the given mode sizes and internal bond ranks, entries
/// uniform in [-1, 1].  bond_ranks may be empty (all bonds 1), a single value
/// (broadcast), or one value per internal bond.
TTTensor random_tt(Rng& rng, const std::vector<std::size_t>& dims,
                   const std::vector<std::size_t>& bond_ranks = {});

/// Matrix train with the given row/column mode sizes and internal bond ranks.
TTMatrix random_ttm(Rng& rng, const std::vector<std::size_t>& row_dims,
                    const std::vector<std::size_t>& col_dims,
                    const std::vector<std::size_t>& bond_ranks = {});

} // namespace ttkit
