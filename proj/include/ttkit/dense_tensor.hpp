#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ttkit/shape.hpp"

namespace ttkit {

/// Dense real tensor with row-major storage (see Shape for the linearization
/// convention).  Values are immutable after construction; all operations on
/// tensors are pure functions returning new values, so shared instances are
/// safe to read concurrently.
///
/// An order-0 DenseTensor holds a single value and models a scalar; an
/// order-2 DenseTensor doubles as the matrix type used across the library
/// (row index = mode 1, column index = mode 2).
class DenseTensor {
public:
    /// Order-0 zero scalar.
    DenseTensor() : values_(1, 0.0) {}

    /// Wraps a flat row-major value buffer; throws shape_error if the buffer
    /// length differs from shape.count().
    DenseTensor(Shape shape, std::vector<double> values);

    static DenseTensor zeros(Shape shape);
    static DenseTensor constant(Shape shape, double value);
    static DenseTensor scalar(double value);

    /// n x n identity matrix as an order-2 tensor.
    static DenseTensor identity(std::size_t n);

    const Shape& shape() const { return shape_; }
    std::size_t order() const { return shape_.order(); }
    std::size_t count() const { return shape_.count(); }

    std::span<const double> values() const { return values_; }

    double at_flat(std::size_t flat) const;
    double operator()(std::span<const std::size_t> idx) const;
    double operator()(std::initializer_list<std::size_t> idx) const;

    /// Row count / column count of an order-2 tensor; throws shape_error on
    /// any other order.
    std::size_t rows() const;
    std::size_t cols() const;

    double frobenius_norm() const;
    double max_abs() const;

    /// Number of bytes of value storage.
    std::size_t storage_bytes() const { return values_.size() * sizeof(double); }

private:
    Shape shape_;
    std::vector<double> values_;
};

/// max |a - b| over all entries; shapes must match.
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

} // namespace ttkit
