#include "ttkit/oracle.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ttkit/errors.hpp"

namespace ttkit::oracle {

namespace {

void require_work(std::size_t ops, const char* what) {
    if (ops > kWorkCap) {
        throw capacity_error(std::string(what) + ": " + std::to_string(ops) +
                             " multiply-adds exceed the reference budget of " +
                             std::to_string(kWorkCap));
    }
}

void require_same_order(const DenseTensor& a, const DenseTensor& b, const char* what) {
    if (a.order() != b.order()) {
        throw shape_error(std::string(what) + ": operand orders " +
                          std::to_string(a.order()) + " and " +
                          std::to_string(b.order()) + " differ");
    }
}

void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* what) {
    if (a.shape() != b.shape()) {
        throw shape_error(std::string(what) + ": operand shapes " +
                          a.shape().to_string() + " and " + b.shape().to_string() +
                          " differ");
    }
}

void require_mode_match(const DenseTensor& a, const DenseTensor& b, std::size_t axis,
                        const char* what) {
    if (a.shape().dims()[axis] != b.shape().dims()[axis]) {
        throw shape_error(std::string(what) + ": mode " + std::to_string(axis + 1) +
                          " sizes " + std::to_string(a.shape().dims()[axis]) + " and " +
                          std::to_string(b.shape().dims()[axis]) + " differ");
    }
}

} // namespace

DenseTensor ref_matricize(const DenseTensor& a, std::size_t n) {
    const std::size_t axis = mode_axis(a.order(), n, "ref_matricize");
    const std::size_t rows = a.shape().dims()[axis];
    const std::size_t cols = a.count() / rows;
    require_work(a.count(), "ref_matricize");
    std::vector<std::size_t> col_dims;
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != axis) col_dims.push_back(a.shape().dims()[k]);
    }
    const Shape col_shape(std::move(col_dims));
    std::vector<double> out(rows * cols);
    std::vector<std::size_t> idx(a.order());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::vector<std::size_t> rest = unflatten_index(col_shape, c);
            std::size_t pos = 0;
            for (std::size_t k = 0; k < a.order(); ++k) {
                idx[k] = (k == axis) ? r : rest[pos++];
            }
            out[r * cols + c] = a(idx);
        }
    }
    return DenseTensor(Shape({rows, cols}), std::move(out));
}

DenseTensor ref_matricize_prefix(const DenseTensor& a, std::size_t n) {
    if (n > a.order()) {
        throw shape_error("ref_matricize_prefix: split " + std::to_string(n) +
                          " out of range for an order-" + std::to_string(a.order()) +
                          " tensor");
    }
    const std::size_t rows = dim_product(a.shape(), 1, n);
    const std::size_t cols = a.count() / rows;
    std::vector<double> out(a.count());
    for (std::size_t f = 0; f < a.count(); ++f) out[f] = a.at_flat(f);
    return DenseTensor(Shape({rows, cols}), std::move(out));
}

DenseTensor ref_kron(const DenseTensor& a, const DenseTensor& b) {
    require_same_order(a, b, "ref_kron");
    std::vector<std::size_t> dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        dims[k] = checked_mul(a.shape().dims()[k], b.shape().dims()[k]);
    }
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_kron");
    std::vector<double> out(out_shape.count());
    std::vector<std::size_t> ia(a.order()), ib(b.order());
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> m = unflatten_index(out_shape, f);
        for (std::size_t k = 0; k < a.order(); ++k) {
            const std::size_t jn = b.shape().dims()[k];
            ia[k] = m[k] / jn;
            ib[k] = m[k] % jn;
        }
        out[f] = a(ia) * b(ib);
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_kron_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "ref_kron_mode");
    const std::size_t axis = mode_axis(a.order(), n, "ref_kron_mode");
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != axis) require_mode_match(a, b, k, "ref_kron_mode");
    }
    std::vector<std::size_t> dims(a.shape().dims());
    dims[axis] = checked_mul(a.shape().dims()[axis], b.shape().dims()[axis]);
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_kron_mode");
    std::vector<double> out(out_shape.count());
    const std::size_t jn = b.shape().dims()[axis];
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> m = unflatten_index(out_shape, f);
        std::vector<std::size_t> ia = m, ib = m;
        ia[axis] = m[axis] / jn;
        ib[axis] = m[axis] % jn;
        out[f] = a(ia) * b(ib);
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_kron_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "ref_kron_bar");
    const std::size_t axis = mode_axis(a.order(), n, "ref_kron_bar");
    require_mode_match(a, b, axis, "ref_kron_bar");
    std::vector<std::size_t> dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        dims[k] = (k == axis) ? a.shape().dims()[k]
                              : checked_mul(a.shape().dims()[k], b.shape().dims()[k]);
    }
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_kron_bar");
    std::vector<double> out(out_shape.count());
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> m = unflatten_index(out_shape, f);
        std::vector<std::size_t> ia = m, ib = m;
        for (std::size_t k = 0; k < a.order(); ++k) {
            if (k == axis) continue;
            const std::size_t jn = b.shape().dims()[k];
            ia[k] = m[k] / jn;
            ib[k] = m[k] % jn;
        }
        out[f] = a(ia) * b(ib);
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_hadamard(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "ref_hadamard");
    require_work(a.count(), "ref_hadamard");
    std::vector<double> out(a.count());
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = a.at_flat(f) * b.at_flat(f);
    return DenseTensor(a.shape(), std::move(out));
}

DenseTensor ref_outer(const DenseTensor& a, const DenseTensor& b) {
    std::vector<std::size_t> dims(a.shape().dims());
    dims.insert(dims.end(), b.shape().dims().begin(), b.shape().dims().end());
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_outer");
    std::vector<double> out(out_shape.count());
    for (std::size_t f = 0; f < out.size(); ++f) {
        out[f] = a.at_flat(f / b.count()) * b.at_flat(f % b.count());
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_direct_sum(const DenseTensor& a, const DenseTensor& b) {
    require_same_order(a, b, "ref_direct_sum");
    std::vector<std::size_t> dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        dims[k] = a.shape().dims()[k] + b.shape().dims()[k];
    }
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_direct_sum");
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> m = unflatten_index(out_shape, f);
        bool in_a = true, in_b = true;
        for (std::size_t k = 0; k < a.order(); ++k) {
            if (m[k] >= a.shape().dims()[k]) in_a = false;
            if (m[k] < a.shape().dims()[k]) in_b = false;
        }
        double v = 0.0;
        if (in_a) v += a(m);
        if (in_b) {
            std::vector<std::size_t> mb = m;
            for (std::size_t k = 0; k < a.order(); ++k) mb[k] -= a.shape().dims()[k];
            v += b(mb);
        }
        out[f] = v;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_direct_sum_mode(const DenseTensor& a, const DenseTensor& b,
                                std::size_t n) {
    require_same_order(a, b, "ref_direct_sum_mode");
    const std::size_t axis = mode_axis(a.order(), n, "ref_direct_sum_mode");
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != axis) require_mode_match(a, b, k, "ref_direct_sum_mode");
    }
    std::vector<std::size_t> dims(a.shape().dims());
    dims[axis] += b.shape().dims()[axis];
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_direct_sum_mode");
    std::vector<double> out(out_shape.count());
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> m = unflatten_index(out_shape, f);
        if (m[axis] < a.shape().dims()[axis]) {
            out[f] = a(m);
        } else {
            m[axis] -= a.shape().dims()[axis];
            out[f] = b(m);
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_direct_sum_bar(const DenseTensor& a, const DenseTensor& b,
                               std::size_t n) {
    require_same_order(a, b, "ref_direct_sum_bar");
    const std::size_t axis = mode_axis(a.order(), n, "ref_direct_sum_bar");
    require_mode_match(a, b, axis, "ref_direct_sum_bar");
    std::vector<std::size_t> dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        dims[k] = (k == axis) ? a.shape().dims()[k]
                              : a.shape().dims()[k] + b.shape().dims()[k];
    }
    Shape out_shape(std::move(dims));
    require_work(out_shape.count(), "ref_direct_sum_bar");
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> m = unflatten_index(out_shape, f);
        bool in_a = true, in_b = true;
        for (std::size_t k = 0; k < a.order(); ++k) {
            if (k == axis) continue;
            if (m[k] >= a.shape().dims()[k]) in_a = false;
            if (m[k] < a.shape().dims()[k]) in_b = false;
        }
        double v = 0.0;
        if (in_a) v += a(m);
        if (in_b) {
            std::vector<std::size_t> mb = m;
            for (std::size_t k = 0; k < a.order(); ++k) {
                if (k != axis) mb[k] -= a.shape().dims()[k];
            }
            v += b(mb);
        }
        out[f] = v;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_mode_n_product(const DenseTensor& a, const DenseTensor& u,
                               std::size_t n) {
    const std::size_t axis = mode_axis(a.order(), n, "ref_mode_n_product");
    if (u.order() != 2) {
        throw shape_error("ref_mode_n_product: factor must be order 2, got order " +
                          std::to_string(u.order()));
    }
    const std::size_t in = a.shape().dims()[axis];
    if (u.shape().dims()[1] != in) {
        throw shape_error("ref_mode_n_product: factor has " +
                          std::to_string(u.shape().dims()[1]) +
                          " columns, expected " + std::to_string(in));
    }
    std::vector<std::size_t> dims(a.shape().dims());
    dims[axis] = u.shape().dims()[0];
    Shape out_shape(std::move(dims));
    require_work(checked_mul(out_shape.count(), in), "ref_mode_n_product");
    std::vector<double> out(out_shape.count());
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> m = unflatten_index(out_shape, f);
        const std::size_t j = m[axis];
        double acc = 0.0;
        for (std::size_t t = 0; t < in; ++t) {
            m[axis] = t;
            acc += u.at_flat(j * in + t) * a(m);
        }
        out[f] = acc;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_mode_n_vector_product(const DenseTensor& a, const DenseTensor& v,
                                      std::size_t n) {
    const std::size_t axis = mode_axis(a.order(), n, "ref_mode_n_vector_product");
    if (v.order() != 1) {
        throw shape_error("ref_mode_n_vector_product: factor must be order 1, got order " +
                          std::to_string(v.order()));
    }
    const std::size_t in = a.shape().dims()[axis];
    if (v.count() != in) {
        throw shape_error("ref_mode_n_vector_product: factor has " +
                          std::to_string(v.count()) + " entries, expected " +
                          std::to_string(in));
    }
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != axis) dims.push_back(a.shape().dims()[k]);
    }
    Shape out_shape(std::move(dims));
    require_work(checked_mul(out_shape.count(), in), "ref_mode_n_vector_product");
    std::vector<double> out(out_shape.count());
    std::vector<std::size_t> idx(a.order());
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> rest = unflatten_index(out_shape, f);
        double acc = 0.0;
        for (std::size_t t = 0; t < in; ++t) {
            std::size_t pos = 0;
            for (std::size_t k = 0; k < a.order(); ++k) {
                idx[k] = (k == axis) ? t : rest[pos++];
            }
            acc += v.at_flat(t) * a(idx);
        }
        out[f] = acc;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_contracted_product(const DenseTensor& a, const DenseTensor& b) {
    if (a.order() == 0 || b.order() == 0) {
        throw shape_error("ref_contracted_product: operands must have order >= 1");
    }
    const std::size_t kk = a.shape().dims()[a.order() - 1];
    if (b.shape().dims()[0] != kk) {
        throw shape_error("ref_contracted_product: contracted sizes " +
                          std::to_string(kk) + " and " +
                          std::to_string(b.shape().dims()[0]) + " differ");
    }
    const std::size_t p = a.count() / kk;
    const std::size_t q = b.count() / kk;
    std::vector<std::size_t> dims(a.shape().dims().begin(), a.shape().dims().end() - 1);
    dims.insert(dims.end(), b.shape().dims().begin() + 1, b.shape().dims().end());
    Shape out_shape(std::move(dims));
    require_work(checked_mul(checked_mul(p, kk), q), "ref_contracted_product");
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t ip = 0; ip < p; ++ip) {
        for (std::size_t iq = 0; iq < q; ++iq) {
            double acc = 0.0;
            for (std::size_t t = 0; t < kk; ++t) {
                acc += a.at_flat(ip * kk + t) * b.at_flat(t * q + iq);
            }
            out[ip * q + iq] = acc;
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_tucker_operator(const DenseTensor& g,
                                const std::vector<DenseTensor>& factors) {
    if (factors.size() != g.order()) {
        throw shape_error("ref_tucker_operator: got " + std::to_string(factors.size()) +
                          " factors for an order-" + std::to_string(g.order()) +
                          " tensor");
    }
    const std::size_t order = g.order();
    std::vector<std::size_t> group_counts(order);
    std::vector<std::size_t> out_dims;
    for (std::size_t k = 0; k < order; ++k) {
        const DenseTensor& u = factors[k];
        if (u.order() == 0) {
            throw shape_error("ref_tucker_operator: factor for mode " +
                              std::to_string(k + 1) + " must have order >= 1");
        }
        const std::size_t in = g.shape().dims()[k];
        if (u.shape().dims()[u.order() - 1] != in) {
            throw shape_error("ref_tucker_operator: factor for mode " +
                              std::to_string(k + 1) + " has last size " +
                              std::to_string(u.shape().dims()[u.order() - 1]) +
                              ", expected " + std::to_string(in));
        }
        group_counts[k] = u.count() / in;
        out_dims.insert(out_dims.end(), u.shape().dims().begin(),
                        u.shape().dims().end() - 1);
    }
    Shape out_shape(std::move(out_dims));
    require_work(checked_mul(checked_mul(out_shape.count(), g.count()), order),
                 "ref_tucker_operator");
    std::vector<double> out(out_shape.count(), 0.0);
    std::vector<std::size_t> groups(order), gi(order);
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::size_t rem = f;
        for (std::size_t k = order; k-- > 0;) {
            groups[k] = rem % group_counts[k];
            rem /= group_counts[k];
        }
        double acc = 0.0;
        for (std::size_t e = 0; e < g.count(); ++e) {
            std::size_t grem = e;
            for (std::size_t k = order; k-- > 0;) {
                gi[k] = grem % g.shape().dims()[k];
                grem /= g.shape().dims()[k];
            }
            double prod = g.at_flat(e);
            for (std::size_t k = 0; k < order && prod != 0.0; ++k) {
                prod *= factors[k].at_flat(groups[k] * g.shape().dims()[k] + gi[k]);
            }
            acc += prod;
        }
        out[f] = acc;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor ref_self_contraction(const DenseTensor& a) {
    if (a.order() < 2) {
        throw shape_error("ref_self_contraction: needs order >= 2, got order " +
                          std::to_string(a.order()));
    }
    const std::size_t j = a.shape().dims()[0];
    if (a.shape().dims()[a.order() - 1] != j) {
        throw shape_error("ref_self_contraction: first and last sizes " +
                          std::to_string(j) + " and " +
                          std::to_string(a.shape().dims()[a.order() - 1]) + " differ");
    }
    std::vector<std::size_t> dims(a.shape().dims().begin() + 1,
                                  a.shape().dims().end() - 1);
    Shape out_shape(std::move(dims));
    const std::size_t mid = out_shape.count();
    require_work(checked_mul(mid, j), "ref_self_contraction");
    std::vector<double> out(mid, 0.0);
    for (std::size_t m = 0; m < mid; ++m) {
        double acc = 0.0;
        for (std::size_t t = 0; t < j; ++t) {
            acc += a.at_flat((t * mid + m) * j + t);
        }
        out[m] = acc;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

double ref_dot(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "ref_dot");
    require_work(a.count(), "ref_dot");
    double acc = 0.0;
    for (std::size_t f = 0; f < a.count(); ++f) acc += a.at_flat(f) * b.at_flat(f);
    return acc;
}

DenseTensor ref_matvec(const DenseTensor& a, const DenseTensor& x,
                       const std::vector<std::size_t>& row_dims) {
    if (a.order() != 2) {
        throw shape_error("ref_matvec: operator must be order 2, got order " +
                          std::to_string(a.order()));
    }
    const std::size_t rows = a.shape().dims()[0];
    const std::size_t cols = a.shape().dims()[1];
    if (cols != x.count()) {
        throw shape_error("ref_matvec: operator has " + std::to_string(cols) +
                          " columns, tensor has " + std::to_string(x.count()) +
                          " entries");
    }
    Shape out_shape(row_dims);
    if (out_shape.count() != rows) {
        throw shape_error("ref_matvec: row shape " + out_shape.to_string() +
                          " holds " + std::to_string(out_shape.count()) +
                          " entries, operator has " + std::to_string(rows) + " rows");
    }
    require_work(checked_mul(rows, cols), "ref_matvec");
    std::vector<double> out(rows, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            acc += a.at_flat(r * cols + c) * x.at_flat(c);
        }
        out[r] = acc;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

double ref_quadform(const DenseTensor& a, const DenseTensor& x) {
    if (a.order() != 2 || a.shape().dims()[0] != a.shape().dims()[1]) {
        throw shape_error("ref_quadform: operator must be a square order-2 tensor");
    }
    const std::size_t nn = a.shape().dims()[0];
    if (nn != x.count()) {
        throw shape_error("ref_quadform: operator size " + std::to_string(nn) +
                          " does not match tensor entry count " +
                          std::to_string(x.count()));
    }
    require_work(checked_mul(nn, nn), "ref_quadform");
    double acc = 0.0;
    for (std::size_t r = 0; r < nn; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < nn; ++c) {
            row += a.at_flat(r * nn + c) * x.at_flat(c);
        }
        acc += x.at_flat(r) * row;
    }
    return acc;
}

std::vector<double> prefix_singular_values(const DenseTensor& a, std::size_t n) {
    if (n > a.order()) {
        throw shape_error("prefix_singular_values: split " + std::to_string(n) +
                          " out of range for an order-" + std::to_string(a.order()) +
                          " tensor");
    }
    const std::size_t rows = dim_product(a.shape(), 1, n);
    const std::size_t cols = a.count() / rows;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                a.at_flat(r * cols + c);
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double unfolding_tail(const DenseTensor& a, std::size_t n, std::size_t rank) {
    const std::vector<double> sv = prefix_singular_values(a, n);
    double acc = 0.0;
    for (std::size_t k = rank; k < sv.size(); ++k) acc += sv[k] * sv[k];
    return std::sqrt(acc);
}

namespace {

// Relative error with a zero-safe denominator: a zero reference passes only
// an exactly zero result.
double rel_of(double abs_err, double scale) {
    if (scale > 0.0) return abs_err / scale;
    return abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

OracleReport finish_report(OracleReport report) {
    report.pass = std::isfinite(report.max_rel_err) && report.max_rel_err <= report.tolerance;
    return report;
}

} // namespace

std::string OracleReport::to_line() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, " max_abs=%.3e max_rel=%.3e tol=%.3e",
                  max_abs_err, max_rel_err, tolerance);
    return std::string(pass ? "PASS " : "FAIL ") + name + " " + instance + buf;
}

OracleReport compare_dense(const std::string& name, const std::string& instance,
                           const DenseTensor& got, const DenseTensor& want,
                           double tolerance) {
    OracleReport report{name, instance, 0.0, 0.0, tolerance, false};
    if (got.shape() != want.shape()) {
        report.max_abs_err = std::numeric_limits<double>::infinity();
        report.max_rel_err = report.max_abs_err;
        return finish_report(std::move(report));
    }
    double scale = 0.0;
    for (std::size_t f = 0; f < want.count(); ++f) {
        const double mag = std::abs(want.at_flat(f));
        if (!(mag <= scale)) scale = mag;
    }
    for (std::size_t f = 0; f < got.count(); ++f) {
        const double err = std::abs(got.at_flat(f) - want.at_flat(f));
        if (!(err <= report.max_abs_err)) report.max_abs_err = err;
    }
    report.max_rel_err = rel_of(report.max_abs_err, scale);
    return finish_report(std::move(report));
}

OracleReport compare_scalar(const std::string& name, const std::string& instance,
                            double got, double want, double tolerance) {
    OracleReport report{name, instance, std::abs(got - want), 0.0, tolerance, false};
    report.max_rel_err = rel_of(report.max_abs_err, std::abs(want));
    return finish_report(std::move(report));
}

} // namespace ttkit::oracle
