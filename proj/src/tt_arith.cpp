#include "ttkit/tt_arith.hpp"

#include <algorithm>
#include <string>

#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

void require_same_dims(const TTTensor& x, const TTTensor& y, const char* what) {
    if (x.order() != y.order()) {
        throw shape_error(std::string(what) + ": operand orders " +
                          std::to_string(x.order()) + " and " +
                          std::to_string(y.order()) + " differ");
    }
    for (std::size_t k = 0; k < x.order(); ++k) {
        if (x.cores()[k].dim() != y.cores()[k].dim()) {
            throw shape_error(std::string(what) + ": mode " + std::to_string(k + 1) +
                              " sizes " + std::to_string(x.cores()[k].dim()) + " and " +
                              std::to_string(y.cores()[k].dim()) + " differ");
        }
    }
}

void require_applicable(const TTMatrix& a, const TTTensor& x, const char* what) {
    if (a.order() != x.order()) {
        throw shape_error(std::string(what) + ": operator order " +
                          std::to_string(a.order()) + " does not match tensor order " +
                          std::to_string(x.order()));
    }
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (a.cores()[k].col_dim() != x.cores()[k].dim()) {
            throw shape_error(std::string(what) + ": mode " + std::to_string(k + 1) +
                              " operator column size " +
                              std::to_string(a.cores()[k].col_dim()) +
                              " does not match tensor mode size " +
                              std::to_string(x.cores()[k].dim()));
        }
    }
}

void require_square(const TTMatrix& a, const char* what) {
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (a.cores()[k].row_dim() != a.cores()[k].col_dim()) {
            throw shape_error(std::string(what) + ": mode " + std::to_string(k + 1) +
                              " block is " + std::to_string(a.cores()[k].row_dim()) +
                              " x " + std::to_string(a.cores()[k].col_dim()) +
                              ", expected square");
        }
    }
}

// One site of the matrix-vector product: Z_i = sum_j A_{i,j} (x) X_j, with
// the operator bond in the slow position of each merged bond.
DenseTensor apply_core_data(const MTTCore& a, const DenseTensor& x) {
    const std::size_t p = a.r_left(), in = a.row_dim(), jn = a.col_dim(), p2 = a.r_right();
    const std::size_t q = x.shape().dims()[0], q2 = x.shape().dims()[2];
    Shape out_shape({p * q, in, p2 * q2});
    std::vector<double> out(out_shape.count(), 0.0);
    for (std::size_t ip = 0; ip < p; ++ip) {
        for (std::size_t iq = 0; iq < q; ++iq) {
            for (std::size_t i = 0; i < in; ++i) {
                const std::size_t out_base = ((ip * q + iq) * in + i) * (p2 * q2);
                for (std::size_t j = 0; j < jn; ++j) {
                    const std::size_t a_base = ((ip * in + i) * jn + j) * p2;
                    const std::size_t x_base = (iq * jn + j) * q2;
                    for (std::size_t ip2 = 0; ip2 < p2; ++ip2) {
                        const double av = a.data().values()[a_base + ip2];
                        if (av == 0.0) continue;
                        for (std::size_t iq2 = 0; iq2 < q2; ++iq2) {
                            out[out_base + ip2 * q2 + iq2] +=
                                av * x.values()[x_base + iq2];
                        }
                    }
                }
            }
        }
    }
    return DenseTensor(std::move(out_shape), std::move(out));
}

// One site of the (bra, operator, ket) chain: contracts the order-3 boundary
// b (R_y x R_a x R_w, row-major) with the three site tensors.
std::vector<double> bilinear_step(const std::vector<double>& b, const DenseTensor& y,
                                  const DenseTensor& a, const DenseTensor& w) {
    const std::size_t ryl = y.shape().dims()[0], in = y.shape().dims()[1],
                      ryr = y.shape().dims()[2];
    const std::size_t ral = a.shape().dims()[0], jn = a.shape().dims()[2],
                      rar = a.shape().dims()[3];
    const std::size_t rwl = w.shape().dims()[0], rwr = w.shape().dims()[2];

    // t1(ryl, ral, j, rwr) = sum_rwl b(ryl, ral, rwl) w(rwl, j, rwr)
    std::vector<double> t1(ryl * ral * jn * rwr, 0.0);
    for (std::size_t iy = 0; iy < ryl; ++iy) {
        for (std::size_t ia = 0; ia < ral; ++ia) {
            for (std::size_t iw = 0; iw < rwl; ++iw) {
                const double bv = b[(iy * ral + ia) * rwl + iw];
                if (bv == 0.0) continue;
                for (std::size_t j = 0; j < jn; ++j) {
                    for (std::size_t cw = 0; cw < rwr; ++cw) {
                        t1[((iy * ral + ia) * jn + j) * rwr + cw] +=
                            bv * w.values()[(iw * jn + j) * rwr + cw];
                    }
                }
            }
        }
    }

    // t2(ryl, i, rar, rwr) = sum_{ral, j} t1(ryl, ral, j, rwr) a(ral, i, j, rar)
    std::vector<double> t2(ryl * in * rar * rwr, 0.0);
    for (std::size_t iy = 0; iy < ryl; ++iy) {
        for (std::size_t ia = 0; ia < ral; ++ia) {
            for (std::size_t i = 0; i < in; ++i) {
                for (std::size_t j = 0; j < jn; ++j) {
                    for (std::size_t ca = 0; ca < rar; ++ca) {
                        const double av = a.values()[((ia * in + i) * jn + j) * rar + ca];
                        if (av == 0.0) continue;
                        for (std::size_t cw = 0; cw < rwr; ++cw) {
                            t2[((iy * in + i) * rar + ca) * rwr + cw] +=
                                av * t1[((iy * ral + ia) * jn + j) * rwr + cw];
                        }
                    }
                }
            }
        }
    }

    // out(ryr, rar, rwr) = sum_{ryl, i} y(ryl, i, ryr) t2(ryl, i, rar, rwr)
    std::vector<double> out(ryr * rar * rwr, 0.0);
    for (std::size_t iy = 0; iy < ryl; ++iy) {
        for (std::size_t i = 0; i < in; ++i) {
            for (std::size_t cy = 0; cy < ryr; ++cy) {
                const double yv = y.values()[(iy * in + i) * ryr + cy];
                if (yv == 0.0) continue;
                for (std::size_t ca = 0; ca < rar; ++ca) {
                    for (std::size_t cw = 0; cw < rwr; ++cw) {
                        out[(cy * rar + ca) * rwr + cw] +=
                            yv * t2[((iy * in + i) * rar + ca) * rwr + cw];
                    }
                }
            }
        }
    }
    return out;
}

void require_core_shape(const DenseTensor& given, const TTCore& expected,
                        const char* name, const char* what) {
    if (given.shape() != expected.data().shape()) {
        throw shape_error(std::string(what) + ": " + name + " has shape " +
                          given.shape().to_string() + ", expected the site core shape " +
                          expected.data().shape().to_string());
    }
}

} // namespace

TTTensor tt_add(const TTTensor& x, const TTTensor& y) {
    require_same_dims(x, y, "tt_add");
    const std::size_t n = x.order();
    std::vector<TTCore> cores;
    cores.reserve(n);
    if (n == 1) {
        cores.emplace_back(add(x.cores()[0].data(), y.cores()[0].data()));
        return TTTensor(std::move(cores));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const DenseTensor& xc = x.cores()[k].data();
        const DenseTensor& yc = y.cores()[k].data();
        if (k == 0) {
            cores.emplace_back(direct_sum_mode(xc, yc, 3));
        } else if (k + 1 == n) {
            cores.emplace_back(direct_sum_mode(xc, yc, 1));
        } else {
            cores.emplace_back(direct_sum_bar(xc, yc, 2));
        }
    }
    return TTTensor(std::move(cores));
}

TTTensor tt_hadamard(const TTTensor& x, const TTTensor& y) {
    require_same_dims(x, y, "tt_hadamard");
    std::vector<TTCore> cores;
    cores.reserve(x.order());
    for (std::size_t k = 0; k < x.order(); ++k) {
        cores.emplace_back(kron_bar(x.cores()[k].data(), y.cores()[k].data(), 2));
    }
    return TTTensor(std::move(cores));
}

DenseTensor core_contraction(const TTCore& x, const TTCore& y) {
    if (x.dim() != y.dim()) {
        throw shape_error("core_contraction: physical sizes " + std::to_string(x.dim()) +
                          " and " + std::to_string(y.dim()) + " differ");
    }
    const std::size_t rxl = x.r_left(), rxr = x.r_right();
    const std::size_t ryl = y.r_left(), ryr = y.r_right();
    const std::size_t in = x.dim();
    const std::size_t cols = rxr * ryr;
    std::vector<double> out(rxl * ryl * cols, 0.0);
    for (std::size_t i = 0; i < in; ++i) {
        for (std::size_t a = 0; a < rxl; ++a) {
            for (std::size_t c = 0; c < rxr; ++c) {
                const double xv = x.data().values()[(a * in + i) * rxr + c];
                if (xv == 0.0) continue;
                for (std::size_t b = 0; b < ryl; ++b) {
                    for (std::size_t d = 0; d < ryr; ++d) {
                        out[(a * ryl + b) * cols + (c * ryr + d)] +=
                            xv * y.data().values()[(b * in + i) * ryr + d];
                    }
                }
            }
        }
    }
    return DenseTensor(Shape({rxl * ryl, cols}), std::move(out));
}

double tt_dot(const TTTensor& x, const TTTensor& y) {
    require_same_dims(x, y, "tt_dot");
    std::vector<double> b{1.0};
    for (std::size_t k = 0; k < x.order(); ++k) {
        const TTCore& xc = x.cores()[k];
        const TTCore& yc = y.cores()[k];
        const std::size_t rxl = xc.r_left(), rxr = xc.r_right();
        const std::size_t ryl = yc.r_left(), ryr = yc.r_right();
        const std::size_t in = xc.dim();
        std::vector<double> nb(rxr * ryr, 0.0);
        std::vector<double> t(rxr * ryl);
        for (std::size_t i = 0; i < in; ++i) {
            std::fill(t.begin(), t.end(), 0.0);
            for (std::size_t a = 0; a < rxl; ++a) {
                for (std::size_t c = 0; c < rxr; ++c) {
                    const double xv = xc.data().values()[(a * in + i) * rxr + c];
                    if (xv == 0.0) continue;
                    for (std::size_t bb = 0; bb < ryl; ++bb) {
                        t[c * ryl + bb] += xv * b[a * ryl + bb];
                    }
                }
            }
            for (std::size_t c = 0; c < rxr; ++c) {
                for (std::size_t bb = 0; bb < ryl; ++bb) {
                    const double tv = t[c * ryl + bb];
                    if (tv == 0.0) continue;
                    for (std::size_t d = 0; d < ryr; ++d) {
                        nb[c * ryr + d] += tv * yc.data().values()[(bb * in + i) * ryr + d];
                    }
                }
            }
        }
        b = std::move(nb);
    }
    return b[0];
}

TTTensor ttm_apply(const TTMatrix& a, const TTTensor& x) {
    require_applicable(a, x, "ttm_apply");
    std::vector<TTCore> cores;
    cores.reserve(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        cores.emplace_back(apply_core_data(a.cores()[k], x.cores()[k].data()));
    }
    return TTTensor(std::move(cores));
}

double quadratic_form(const TTTensor& x, const TTMatrix& a) {
    require_square(a, "quadratic_form");
    require_applicable(a, x, "quadratic_form");
    std::vector<double> b{1.0};
    for (std::size_t k = 0; k < a.order(); ++k) {
        b = bilinear_step(b, x.cores()[k].data(), a.cores()[k].data(),
                          x.cores()[k].data());
    }
    return b[0];
}

DenseTensor localized_map_apply(const TTMatrix& a, const TTTensor& x, std::size_t site,
                                const DenseTensor& w, std::size_t mem_cap_bytes) {
    require_applicable(a, x, "localized_map_apply");
    mode_axis(x.order(), site, "localized_map_apply");
    require_core_shape(w, x.cores()[site - 1], "w", "localized_map_apply");
    std::vector<TTCore> cores;
    cores.reserve(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        const DenseTensor& ket = (k + 1 == site) ? w : x.cores()[k].data();
        cores.emplace_back(apply_core_data(a.cores()[k], ket));
    }
    return tt_to_dense(TTTensor(std::move(cores)), mem_cap_bytes);
}

double localized_bilinear_form(const TTMatrix& a, const TTTensor& x, std::size_t site,
                               const DenseTensor& y_core, const DenseTensor& w_core) {
    require_square(a, "localized_bilinear_form");
    require_applicable(a, x, "localized_bilinear_form");
    mode_axis(x.order(), site, "localized_bilinear_form");
    require_core_shape(y_core, x.cores()[site - 1], "y_core", "localized_bilinear_form");
    require_core_shape(w_core, x.cores()[site - 1], "w_core", "localized_bilinear_form");
    std::vector<double> b{1.0};
    for (std::size_t k = 0; k < a.order(); ++k) {
        const DenseTensor& bra = (k + 1 == site) ? y_core : x.cores()[k].data();
        const DenseTensor& ket = (k + 1 == site) ? w_core : x.cores()[k].data();
        b = bilinear_step(b, bra, a.cores()[k].data(), ket);
    }
    return b[0];
}

} // namespace ttkit
