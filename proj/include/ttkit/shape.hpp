#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ttkit {

/// Mode sizes of a dense tensor, e.g. Shape({2,3,4}) for a 2 x 3 x 4 array.
///
/// An empty Shape is the order-0 (scalar) case and holds exactly one element.
/// Every mode size must be >= 1 and the total element count must fit in
/// std::size_t; violations throw shape_error / capacity_error.
///
/// Convention used throughout the library: mode numbers in public interfaces
/// are 1-based (mode n of an order-N tensor satisfies 1 <= n <= N), while
/// multi-index entries are 0-based.  The flat offset of a 0-based multi-index
/// (i_1, ..., i_N) is
///
///     i_N + i_{N-1} * I_N + ... + i_1 * (I_2 * ... * I_N),
///
/// i.e. the last index varies fastest (row-major order).
class Shape {
public:
    /// Order-0 scalar shape.
    Shape() = default;

    /// Builds a shape from mode sizes; throws shape_error on a zero mode size
    /// and capacity_error if the element count overflows std::size_t.
    explicit Shape(std::vector<std::size_t> dims);

    std::size_t order() const { return dims_.size(); }

    /// Size of the 1-based mode n; throws shape_error if n is out of range.
    std::size_t dim(std::size_t n) const;

    const std::vector<std::size_t>& dims() const { return dims_; }

    /// Total number of elements (1 for the order-0 scalar shape).
    std::size_t count() const { return count_; }

    bool operator==(const Shape& other) const { return dims_ == other.dims_; }
    bool operator!=(const Shape& other) const { return dims_ != other.dims_; }

    /// Renders as "(I1,I2,...,IN)"; the scalar shape renders as "()".
    std::string to_string() const;

private:
    std::vector<std::size_t> dims_;
    std::size_t count_ = 1;
};

/// Flat row-major offset of a 0-based multi-index.  Throws shape_error if the
/// index length differs from the order or an entry exceeds its mode size; the
/// message names the offending mode.
std::size_t flatten_index(const Shape& shape, std::span<const std::size_t> idx);

/// Inverse of flatten_index; throws shape_error if flat >= shape.count().
std::vector<std::size_t> unflatten_index(const Shape& shape, std::size_t flat);

/// Product of a run of mode sizes [first, last] (1-based, inclusive); an
/// empty range yields 1.  Throws capacity_error on overflow.
std::size_t dim_product(const Shape& shape, std::size_t first, std::size_t last);

/// a * b with overflow check; throws capacity_error on overflow.
std::size_t checked_mul(std::size_t a, std::size_t b);

/// Refuses (with capacity_error) to hold `count` doubles under a byte budget.
void require_within_cap(std::size_t count, std::size_t cap_bytes, const char* what);

/// Validates a 1-based mode number against an order and returns the 0-based
/// axis.  `what` names the operation for the error message.
std::size_t mode_axis(std::size_t order, std::size_t n, const char* what);

} // namespace ttkit
