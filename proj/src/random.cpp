#include "ttkit/random.hpp"

#include <string>

#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

// Full list of internal bond ranks from the accepted short forms.
std::vector<std::size_t> expand_bonds(const std::vector<std::size_t>& bond_ranks,
                                      std::size_t order, const char* what) {
    const std::size_t bonds = order - 1;
    std::vector<std::size_t> full;
    if (bond_ranks.empty()) {
        full.assign(bonds, 1);
    } else if (bond_ranks.size() == 1) {
        full.assign(bonds, bond_ranks[0]);
    } else if (bond_ranks.size() == bonds) {
        full = bond_ranks;
    } else {
        throw shape_error(std::string(what) + ": got " +
                          std::to_string(bond_ranks.size()) + " bond ranks for " +
                          std::to_string(bonds) + " internal bonds");
    }
    for (std::size_t r : full) {
        if (r == 0) throw shape_error(std::string(what) + ": bond ranks must be positive");
    }
    return full;
}

} // namespace

double Rng::uniform_pm1() {
    // Top 53 bits, scaled to [0, 1), then mapped affinely onto [-1, 1).
    const double u = static_cast<double>(engine_() >> 11) *
                     (1.0 / 9007199254740992.0);
    return 2.0 * u - 1.0;
}

DenseTensor random_dense(Rng& rng, const Shape& shape) {
    std::vector<double> values(shape.count());
    for (double& v : values) v = rng.uniform_pm1();
    return DenseTensor(shape, std::move(values));
}

TTTensor random_tt(Rng& rng, const std::vector<std::size_t>& dims,
                   const std::vector<std::size_t>& bond_ranks) {
    if (dims.empty()) throw shape_error("random_tt: needs at least one mode");
    const std::vector<std::size_t> bonds = expand_bonds(bond_ranks, dims.size(), "random_tt");
    std::vector<TTCore> cores;
    cores.reserve(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const std::size_t rl = (k == 0) ? 1 : bonds[k - 1];
        const std::size_t rr = (k + 1 == dims.size()) ? 1 : bonds[k];
        cores.emplace_back(random_dense(rng, Shape({rl, dims[k], rr})));
    }
    return TTTensor(std::move(cores));
}

TTMatrix random_ttm(Rng& rng, const std::vector<std::size_t>& row_dims,
                    const std::vector<std::size_t>& col_dims,
                    const std::vector<std::size_t>& bond_ranks) {
    if (row_dims.empty()) throw shape_error("random_ttm: needs at least one mode");
    if (row_dims.size() != col_dims.size()) {
        throw shape_error("random_ttm: got " + std::to_string(row_dims.size()) +
                          " row sizes and " + std::to_string(col_dims.size()) +
                          " column sizes");
    }
    const std::vector<std::size_t> bonds =
        expand_bonds(bond_ranks, row_dims.size(), "random_ttm");
    std::vector<MTTCore> cores;
    cores.reserve(row_dims.size());
    for (std::size_t k = 0; k < row_dims.size(); ++k) {
        const std::size_t rl = (k == 0) ? 1 : bonds[k - 1];
        const std::size_t rr = (k + 1 == row_dims.size()) ? 1 : bonds[k];
        cores.emplace_back(random_dense(rng, Shape({rl, row_dims[k], col_dims[k], rr})));
    }
    return TTMatrix(std::move(cores));
}

} // namespace ttkit
