#include "ttkit/dense_ops.hpp"

#include <string>

#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

// Advances a 0-based multi-index in row-major order (last mode fastest);
// returns false once all positions have been visited.
bool advance(const std::vector<std::size_t>& dims, std::vector<std::size_t>& idx) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        if (++idx[k] < dims[k]) return true;
        idx[k] = 0;
    }
    return false;
}

void require_same_order(const DenseTensor& a, const DenseTensor& b, const char* what) {
    if (a.order() != b.order()) {
        throw shape_error(std::string(what) + ": operand orders " +
                          std::to_string(a.order()) + " and " +
                          std::to_string(b.order()) + " differ");
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

void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* what) {
    require_same_order(a, b, what);
    for (std::size_t k = 0; k < a.order(); ++k) require_mode_match(a, b, k, what);
}

// Contracts mode `n` of `a` against the last mode of `f` and splices the
// leading modes of `f` in its place.  Shared kernel behind mode_n_product,
// mode_n_vector_product and tucker_operator.
DenseTensor mode_n_multiproduct(const DenseTensor& a, const DenseTensor& f, std::size_t n,
                                const char* what) {
    const std::size_t ax = mode_axis(a.order(), n, what);
    if (f.order() < 1) {
        throw shape_error(std::string(what) + ": factor for mode " + std::to_string(n) +
                          " has order 0");
    }
    const std::size_t r = a.shape().dims()[ax];
    if (f.shape().dims()[f.order() - 1] != r) {
        throw shape_error(std::string(what) + ": factor's last mode has size " +
                          std::to_string(f.shape().dims()[f.order() - 1]) +
                          " but mode " + std::to_string(n) + " has size " +
                          std::to_string(r));
    }

    std::vector<std::size_t> out_dims;
    out_dims.insert(out_dims.end(), a.shape().dims().begin(), a.shape().dims().begin() + ax);
    out_dims.insert(out_dims.end(), f.shape().dims().begin(), f.shape().dims().end() - 1);
    out_dims.insert(out_dims.end(), a.shape().dims().begin() + ax + 1, a.shape().dims().end());
    Shape out_shape(std::move(out_dims));

    std::size_t q = 1;
    for (std::size_t k = ax + 1; k < a.order(); ++k) q *= a.shape().dims()[k];
    const std::size_t p = a.count() / (r * q);
    const std::size_t u = f.count() / r;

    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t ip = 0; ip < p; ++ip) {
        for (std::size_t iu = 0; iu < u; ++iu) {
            for (std::size_t iq = 0; iq < q; ++iq) {
                double s = 0.0;
                for (std::size_t ir = 0; ir < r; ++ir) {
                    s += f.values()[iu * r + ir] * a.values()[(ip * r + ir) * q + iq];
                }
                out[(ip * u + iu) * q + iq] = s;
            }
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

} // namespace

DenseTensor matricize(const DenseTensor& a, std::size_t n) {
    const std::size_t ax = mode_axis(a.order(), n, "matricize");
    const auto& dims = a.shape().dims();
    const std::size_t rows = dims[ax];
    const std::size_t cols = a.count() / rows;

    std::vector<std::size_t> col_stride(a.order(), 0);
    std::size_t stride = 1;
    for (std::size_t k = a.order(); k-- > 0;) {
        if (k == ax) continue;
        col_stride[k] = stride;
        stride *= dims[k];
    }

    std::vector<double> out(a.count());
    std::vector<std::size_t> idx(a.order(), 0);
    std::size_t flat = 0;
    do {
        std::size_t col = 0;
        for (std::size_t k = 0; k < a.order(); ++k) {
            if (k != ax) col += idx[k] * col_stride[k];
        }
        out[idx[ax] * cols + col] = a.values()[flat];
        ++flat;
    } while (advance(dims, idx));
    return DenseTensor(Shape({rows, cols}), std::move(out));
}

DenseTensor matricize_prefix(const DenseTensor& a, std::size_t n) {
    if (n > a.order()) {
        throw shape_error("matricize_prefix: split " + std::to_string(n) +
                          " out of range for an order-" + std::to_string(a.order()) +
                          " tensor");
    }
    std::size_t rows = 1;
    for (std::size_t k = 0; k < n; ++k) rows *= a.shape().dims()[k];
    const std::size_t cols = a.count() / rows;
    std::vector<double> v(a.values().begin(), a.values().end());
    return DenseTensor(Shape({rows, cols}), std::move(v));
}

DenseTensor vectorize(const DenseTensor& a) {
    std::vector<double> v(a.values().begin(), a.values().end());
    return DenseTensor(Shape({a.count()}), std::move(v));
}

DenseTensor transpose(const DenseTensor& a) {
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    std::vector<double> out(a.count());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out[j * r + i] = a.values()[i * c + j];
        }
    }
    return DenseTensor(Shape({c, r}), std::move(out));
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "add");
    std::vector<double> out(a.count());
    for (std::size_t k = 0; k < a.count(); ++k) out[k] = a.values()[k] + b.values()[k];
    return DenseTensor(a.shape(), std::move(out));
}

DenseTensor scale(const DenseTensor& a, double c) {
    std::vector<double> out(a.count());
    for (std::size_t k = 0; k < a.count(); ++k) out[k] = c * a.values()[k];
    return DenseTensor(a.shape(), std::move(out));
}

DenseTensor kron(const DenseTensor& a, const DenseTensor& b) {
    require_same_order(a, b, "kron");
    const std::size_t order = a.order();
    std::vector<std::size_t> out_dims(order);
    for (std::size_t k = 0; k < order; ++k) {
        out_dims[k] = checked_mul(a.shape().dims()[k], b.shape().dims()[k]);
    }
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count());
    std::vector<std::size_t> ia(order, 0), ib(order, 0), ic(order, 0);
    std::size_t fa = 0;
    do {
        std::size_t fb = 0;
        std::fill(ib.begin(), ib.end(), 0);
        do {
            for (std::size_t k = 0; k < order; ++k) {
                ic[k] = ia[k] * b.shape().dims()[k] + ib[k];
            }
            out[flatten_index(out_shape, ic)] = a.values()[fa] * b.values()[fb];
            ++fb;
        } while (advance(b.shape().dims(), ib));
        ++fa;
    } while (advance(a.shape().dims(), ia));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor kron_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "kron_mode");
    const std::size_t ax = mode_axis(a.order(), n, "kron_mode");
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != ax) require_mode_match(a, b, k, "kron_mode");
    }
    const std::size_t jn = b.shape().dims()[ax];
    std::vector<std::size_t> out_dims = a.shape().dims();
    out_dims[ax] = checked_mul(out_dims[ax], jn);
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count());
    std::vector<std::size_t> ia(a.order(), 0), ib(a.order(), 0), ic(a.order(), 0);
    do {
        ib = ia;
        for (std::size_t j = 0; j < jn; ++j) {
            ib[ax] = j;
            ic = ia;
            ic[ax] = ia[ax] * jn + j;
            out[flatten_index(out_shape, ic)] = a(ia) * b(ib);
        }
    } while (advance(a.shape().dims(), ia));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor kron_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "kron_bar");
    const std::size_t ax = mode_axis(a.order(), n, "kron_bar");
    require_mode_match(a, b, ax, "kron_bar");
    std::vector<std::size_t> out_dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        out_dims[k] = (k == ax) ? a.shape().dims()[k]
                                : checked_mul(a.shape().dims()[k], b.shape().dims()[k]);
    }
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count());
    std::vector<std::size_t> ia(a.order(), 0), ib(a.order(), 0), ic(a.order(), 0);
    do {
        std::fill(ib.begin(), ib.end(), 0);
        do {
            if (ib[ax] != ia[ax]) continue;
            for (std::size_t k = 0; k < a.order(); ++k) {
                ic[k] = (k == ax) ? ia[k] : ia[k] * b.shape().dims()[k] + ib[k];
            }
            out[flatten_index(out_shape, ic)] = a(ia) * b(ib);
        } while (advance(b.shape().dims(), ib));
    } while (advance(a.shape().dims(), ia));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "hadamard");
    std::vector<double> out(a.count());
    for (std::size_t k = 0; k < a.count(); ++k) out[k] = a.values()[k] * b.values()[k];
    return DenseTensor(a.shape(), std::move(out));
}

DenseTensor outer(const DenseTensor& a, const DenseTensor& b) {
    std::vector<std::size_t> out_dims = a.shape().dims();
    out_dims.insert(out_dims.end(), b.shape().dims().begin(), b.shape().dims().end());
    Shape out_shape(std::move(out_dims));
    std::vector<double> out(out_shape.count());
    for (std::size_t fa = 0; fa < a.count(); ++fa) {
        for (std::size_t fb = 0; fb < b.count(); ++fb) {
            out[fa * b.count() + fb] = a.values()[fa] * b.values()[fb];
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor direct_sum(const DenseTensor& a, const DenseTensor& b) {
    require_same_order(a, b, "direct_sum");
    if (a.order() == 0) {
        return DenseTensor::scalar(a.values()[0] + b.values()[0]);
    }
    std::vector<std::size_t> out_dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        out_dims[k] = a.shape().dims()[k] + b.shape().dims()[k];
    }
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count(), 0.0);
    std::vector<std::size_t> idx(a.order(), 0), ic(a.order(), 0);
    std::size_t flat = 0;
    do {
        out[flatten_index(out_shape, idx)] = a.values()[flat];
        ++flat;
    } while (advance(a.shape().dims(), idx));
    std::fill(idx.begin(), idx.end(), 0);
    flat = 0;
    do {
        for (std::size_t k = 0; k < a.order(); ++k) ic[k] = idx[k] + a.shape().dims()[k];
        out[flatten_index(out_shape, ic)] = b.values()[flat];
        ++flat;
    } while (advance(b.shape().dims(), idx));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor direct_sum_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "direct_sum_mode");
    const std::size_t ax = mode_axis(a.order(), n, "direct_sum_mode");
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (k != ax) require_mode_match(a, b, k, "direct_sum_mode");
    }
    std::vector<std::size_t> out_dims = a.shape().dims();
    out_dims[ax] += b.shape().dims()[ax];
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count(), 0.0);
    std::vector<std::size_t> idx(a.order(), 0), ic(a.order(), 0);
    std::size_t flat = 0;
    do {
        out[flatten_index(out_shape, idx)] = a.values()[flat];
        ++flat;
    } while (advance(a.shape().dims(), idx));
    std::fill(idx.begin(), idx.end(), 0);
    flat = 0;
    do {
        ic = idx;
        ic[ax] += a.shape().dims()[ax];
        out[flatten_index(out_shape, ic)] = b.values()[flat];
        ++flat;
    } while (advance(b.shape().dims(), idx));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor direct_sum_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    require_same_order(a, b, "direct_sum_bar");
    const std::size_t ax = mode_axis(a.order(), n, "direct_sum_bar");
    require_mode_match(a, b, ax, "direct_sum_bar");
    if (a.order() == 1) {
        return add(a, b);
    }
    std::vector<std::size_t> out_dims(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        out_dims[k] = (k == ax) ? a.shape().dims()[k]
                                : a.shape().dims()[k] + b.shape().dims()[k];
    }
    Shape out_shape(std::move(out_dims));

    std::vector<double> out(out_shape.count(), 0.0);
    std::vector<std::size_t> idx(a.order(), 0), ic(a.order(), 0);
    std::size_t flat = 0;
    do {
        out[flatten_index(out_shape, idx)] = a.values()[flat];
        ++flat;
    } while (advance(a.shape().dims(), idx));
    std::fill(idx.begin(), idx.end(), 0);
    flat = 0;
    do {
        for (std::size_t k = 0; k < a.order(); ++k) {
            ic[k] = (k == ax) ? idx[k] : idx[k] + a.shape().dims()[k];
        }
        out[flatten_index(out_shape, ic)] = b.values()[flat];
        ++flat;
    } while (advance(b.shape().dims(), idx));
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor mode_n_product(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    if (b.order() != 2) {
        throw shape_error("mode_n_product: factor has order " +
                          std::to_string(b.order()) + ", expected a matrix");
    }
    return mode_n_multiproduct(a, b, n, "mode_n_product");
}

DenseTensor mode_n_vector_product(const DenseTensor& a, const DenseTensor& b, std::size_t n) {
    if (b.order() != 1) {
        throw shape_error("mode_n_vector_product: factor has order " +
                          std::to_string(b.order()) + ", expected a vector");
    }
    return mode_n_multiproduct(a, b, n, "mode_n_vector_product");
}

DenseTensor tucker_operator(const DenseTensor& g, const std::vector<DenseTensor>& factors) {
    if (factors.size() != g.order()) {
        throw shape_error("tucker_operator: " + std::to_string(factors.size()) +
                          " factors for an order-" + std::to_string(g.order()) +
                          " core tensor");
    }
    DenseTensor x = g;
    for (std::size_t n = g.order(); n >= 1; --n) {
        x = mode_n_multiproduct(x, factors[n - 1], n, "tucker_operator");
    }
    return x;
}

DenseTensor contracted_product(const DenseTensor& a, const DenseTensor& b) {
    if (a.order() < 1 || b.order() < 1) {
        throw shape_error("contracted_product: operands must have order >= 1");
    }
    const std::size_t k = a.shape().dims()[a.order() - 1];
    if (b.shape().dims()[0] != k) {
        throw shape_error("contracted_product: last mode of size " + std::to_string(k) +
                          " does not match first mode of size " +
                          std::to_string(b.shape().dims()[0]));
    }
    std::vector<std::size_t> out_dims(a.shape().dims().begin(), a.shape().dims().end() - 1);
    out_dims.insert(out_dims.end(), b.shape().dims().begin() + 1, b.shape().dims().end());
    Shape out_shape(std::move(out_dims));

    const std::size_t p = a.count() / k;
    const std::size_t q = b.count() / k;
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t ip = 0; ip < p; ++ip) {
        for (std::size_t ik = 0; ik < k; ++ik) {
            const double av = a.values()[ip * k + ik];
            if (av == 0.0) continue;
            for (std::size_t iq = 0; iq < q; ++iq) {
                out[ip * q + iq] += av * b.values()[ik * q + iq];
            }
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

DenseTensor self_contraction(const DenseTensor& a) {
    if (a.order() < 2) {
        throw shape_error("self_contraction: tensor of order " +
                          std::to_string(a.order()) + " has no mode pair to trace");
    }
    const std::size_t j = a.shape().dims()[0];
    if (a.shape().dims()[a.order() - 1] != j) {
        throw shape_error("self_contraction: first mode of size " + std::to_string(j) +
                          " does not match last mode of size " +
                          std::to_string(a.shape().dims()[a.order() - 1]));
    }
    std::vector<std::size_t> out_dims(a.shape().dims().begin() + 1, a.shape().dims().end() - 1);
    Shape out_shape(std::move(out_dims));
    const std::size_t mid = out_shape.count();
    std::vector<double> out(mid, 0.0);
    for (std::size_t m = 0; m < mid; ++m) {
        double s = 0.0;
        for (std::size_t ij = 0; ij < j; ++ij) {
            s += a.values()[(ij * mid + m) * j + ij];
        }
        out[m] = s;
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

} // namespace ttkit
