#include "ttkit/shape.hpp"

#include <limits>

#include "ttkit/errors.hpp"

namespace ttkit {

std::size_t checked_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        throw capacity_error("element count overflows the machine word");
    }
    return a * b;
}

void require_within_cap(std::size_t count, std::size_t cap_bytes, const char* what) {
    const std::size_t bytes = checked_mul(count, sizeof(double));
    if (bytes > cap_bytes) {
        throw capacity_error(std::string(what) + ": " + std::to_string(bytes) +
                             " bytes exceed the " + std::to_string(cap_bytes) +
                             "-byte cap");
    }
}

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (dims_[k] == 0) {
            throw shape_error("mode " + std::to_string(k + 1) + " has size 0");
        }
        count_ = checked_mul(count_, dims_[k]);
    }
}

std::size_t Shape::dim(std::size_t n) const {
    return dims_[mode_axis(order(), n, "Shape::dim")];
}

std::string Shape::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(dims_[k]);
    }
    out += ")";
    return out;
}

std::size_t flatten_index(const Shape& shape, std::span<const std::size_t> idx) {
    if (idx.size() != shape.order()) {
        throw shape_error("multi-index has " + std::to_string(idx.size()) +
                          " entries for an order-" + std::to_string(shape.order()) +
                          " tensor");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape.dims()[k]) {
            throw shape_error("index " + std::to_string(idx[k]) +
                              " out of range for mode " + std::to_string(k + 1) +
                              " of size " + std::to_string(shape.dims()[k]));
        }
        flat = flat * shape.dims()[k] + idx[k];
    }
    return flat;
}

std::vector<std::size_t> unflatten_index(const Shape& shape, std::size_t flat) {
    if (flat >= shape.count()) {
        throw shape_error("flat offset " + std::to_string(flat) +
                          " out of range for " + std::to_string(shape.count()) +
                          " elements");
    }
    std::vector<std::size_t> idx(shape.order());
    for (std::size_t k = shape.order(); k-- > 0;) {
        idx[k] = flat % shape.dims()[k];
        flat /= shape.dims()[k];
    }
    return idx;
}

std::size_t dim_product(const Shape& shape, std::size_t first, std::size_t last) {
    std::size_t p = 1;
    for (std::size_t n = first; n <= last && n >= 1; ++n) {
        p = checked_mul(p, shape.dim(n));
    }
    return p;
}

std::size_t mode_axis(std::size_t order, std::size_t n, const char* what) {
    if (n < 1 || n > order) {
        throw shape_error(std::string(what) + ": mode " + std::to_string(n) +
                          " out of range for an order-" + std::to_string(order) +
                          " tensor");
    }
    return n - 1;
}

} // namespace ttkit
