#include "ttkit/dense_tensor.hpp"

#include <cmath>

#include "ttkit/errors.hpp"

namespace ttkit {

DenseTensor::DenseTensor(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.count()) {
        throw shape_error("value buffer holds " + std::to_string(values_.size()) +
                          " entries but shape " + shape_.to_string() + " needs " +
                          std::to_string(shape_.count()));
    }
}

DenseTensor DenseTensor::zeros(Shape shape) {
    std::vector<double> v(shape.count(), 0.0);
    return DenseTensor(std::move(shape), std::move(v));
}

DenseTensor DenseTensor::constant(Shape shape, double value) {
    std::vector<double> v(shape.count(), value);
    return DenseTensor(std::move(shape), std::move(v));
}

DenseTensor DenseTensor::scalar(double value) {
    return DenseTensor(Shape(), {value});
}

DenseTensor DenseTensor::identity(std::size_t n) {
    std::vector<double> v(checked_mul(n, n), 0.0);
    for (std::size_t k = 0; k < n; ++k) v[k * n + k] = 1.0;
    return DenseTensor(Shape({n, n}), std::move(v));
}

double DenseTensor::at_flat(std::size_t flat) const {
    if (flat >= values_.size()) {
        throw shape_error("flat offset " + std::to_string(flat) +
                          " out of range for " + std::to_string(values_.size()) +
                          " elements");
    }
    return values_[flat];
}

double DenseTensor::operator()(std::span<const std::size_t> idx) const {
    return values_[flatten_index(shape_, idx)];
}

double DenseTensor::operator()(std::initializer_list<std::size_t> idx) const {
    return (*this)(std::span<const std::size_t>(idx.begin(), idx.size()));
}

std::size_t DenseTensor::rows() const {
    if (order() != 2) {
        throw shape_error("rows(): tensor of order " + std::to_string(order()) +
                          " is not a matrix");
    }
    return shape_.dims()[0];
}

std::size_t DenseTensor::cols() const {
    if (order() != 2) {
        throw shape_error("cols(): tensor of order " + std::to_string(order()) +
                          " is not a matrix");
    }
    return shape_.dims()[1];
}

double DenseTensor::frobenius_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

double DenseTensor::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
    if (a.shape() != b.shape()) {
        throw shape_error("max_abs_diff: shapes " + a.shape().to_string() + " and " +
                          b.shape().to_string() + " differ");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.count(); ++k) {
        m = std::max(m, std::abs(a.values()[k] - b.values()[k]));
    }
    return m;
}

} // namespace ttkit
