#include "ttkit/tt.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "ttkit/block.hpp"
#include "ttkit/dense_ops.hpp"
#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstRowMap = Eigen::Map<const RowMat>;

ConstRowMap map_matrix(const DenseTensor& t, std::size_t rows, std::size_t cols) {
    return ConstRowMap(t.values().data(), static_cast<Eigen::Index>(rows),
                       static_cast<Eigen::Index>(cols));
}

std::vector<double> to_buffer(const RowMat& m) {
    return std::vector<double>(m.data(), m.data() + m.size());
}

// Numerical rank under the per-split truncation rule: singular values below
// 1e-12 * sigma_max count as zero, then trailing values are dropped while the
// discarded tail stays strictly inside the delta budget (a tie keeps the
// value, so the rank rounds up).  The result is clamped to [1, cap].
std::size_t truncation_rank(const Eigen::VectorXd& sv, double delta, std::size_t cap) {
    const double zero_cut = 1e-12 * sv(0);
    std::size_t r = 0;
    while (r < static_cast<std::size_t>(sv.size()) && sv(r) >= zero_cut) ++r;
    double tail2 = 0.0;
    for (std::size_t k = r; k < static_cast<std::size_t>(sv.size()); ++k) {
        tail2 += sv(k) * sv(k);
    }
    const double budget = delta * delta;
    while (r > 1 && tail2 + sv(r - 1) * sv(r - 1) < budget) {
        tail2 += sv(r - 1) * sv(r - 1);
        --r;
    }
    return std::max<std::size_t>(1, std::min(r, cap));
}

void validate_spec(const TruncationSpec& spec, std::size_t bonds, const char* what) {
    if (spec.epsilon && *spec.epsilon < 0.0) {
        throw shape_error(std::string(what) + ": epsilon must be nonnegative");
    }
    if (spec.max_ranks) {
        const auto& mr = *spec.max_ranks;
        if (mr.size() != 1 && mr.size() != bonds) {
            throw shape_error(std::string(what) + ": max_ranks lists " +
                              std::to_string(mr.size()) + " caps for " +
                              std::to_string(bonds) + " internal bonds");
        }
        for (std::size_t v : mr) {
            if (v == 0) {
                throw shape_error(std::string(what) + ": max_ranks entries must be >= 1");
            }
        }
    }
}

TTTensor zero_tt(const std::vector<std::size_t>& dims) {
    std::vector<TTCore> cores;
    cores.reserve(dims.size());
    for (std::size_t d : dims) {
        cores.emplace_back(1, d, 1, std::vector<double>(d, 0.0));
    }
    return TTTensor(std::move(cores));
}

} // namespace

TTCore::TTCore(std::size_t r_left, std::size_t dim, std::size_t r_right,
               std::vector<double> values, OrthFlag orth)
    : data_(Shape({r_left, dim, r_right}), std::move(values)), orth_(orth) {}

TTCore::TTCore(DenseTensor data, OrthFlag orth) : data_(std::move(data)), orth_(orth) {
    if (data_.order() != 3) {
        throw shape_error("TTCore: data of order " + std::to_string(data_.order()) +
                          ", expected 3");
    }
}

DenseTensor TTCore::slice(std::size_t i) const {
    if (i >= dim()) {
        throw shape_error("TTCore::slice: index " + std::to_string(i) +
                          " out of range for mode size " + std::to_string(dim()));
    }
    const std::size_t rl = r_left(), rr = r_right();
    std::vector<double> out(rl * rr);
    for (std::size_t a = 0; a < rl; ++a) {
        for (std::size_t c = 0; c < rr; ++c) {
            out[a * rr + c] = data_.values()[(a * dim() + i) * rr + c];
        }
    }
    return DenseTensor(Shape({rl, rr}), std::move(out));
}

DenseTensor vertical_unfolding(const TTCore& core) {
    std::vector<double> v(core.data().values().begin(), core.data().values().end());
    return DenseTensor(Shape({core.r_left() * core.dim(), core.r_right()}), std::move(v));
}

DenseTensor horizontal_unfolding(const TTCore& core) {
    std::vector<double> v(core.data().values().begin(), core.data().values().end());
    return DenseTensor(Shape({core.r_left(), core.dim() * core.r_right()}), std::move(v));
}

bool is_left_orthogonal(const TTCore& core, double tol) {
    const auto v = map_matrix(core.data(), core.r_left() * core.dim(), core.r_right());
    const Eigen::MatrixXd gram = v.transpose() * v;
    const Eigen::Index r = gram.rows();
    return (gram - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff() <= tol;
}

bool is_right_orthogonal(const TTCore& core, double tol) {
    const auto h = map_matrix(core.data(), core.r_left(), core.dim() * core.r_right());
    const Eigen::MatrixXd gram = h * h.transpose();
    const Eigen::Index r = gram.rows();
    return (gram - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff() <= tol;
}

TTTensor::TTTensor(std::vector<TTCore> cores) : cores_(std::move(cores)) {
    if (cores_.empty()) {
        throw shape_error("tensor train needs at least one core");
    }
    if (cores_.front().r_left() != 1) {
        throw shape_error("left boundary rank is " +
                          std::to_string(cores_.front().r_left()) + ", expected 1");
    }
    if (cores_.back().r_right() != 1) {
        throw shape_error("right boundary rank is " +
                          std::to_string(cores_.back().r_right()) + ", expected 1");
    }
    for (std::size_t k = 0; k + 1 < cores_.size(); ++k) {
        if (cores_[k].r_right() != cores_[k + 1].r_left()) {
            throw shape_error("bond " + std::to_string(k + 1) + ": right rank " +
                              std::to_string(cores_[k].r_right()) + " of core " +
                              std::to_string(k + 1) + " does not match left rank " +
                              std::to_string(cores_[k + 1].r_left()) + " of core " +
                              std::to_string(k + 2));
        }
    }
}

std::vector<std::size_t> TTTensor::dims() const {
    std::vector<std::size_t> d(cores_.size());
    for (std::size_t k = 0; k < cores_.size(); ++k) d[k] = cores_[k].dim();
    return d;
}

std::size_t TTTensor::rank(std::size_t n) const {
    if (n > order()) {
        throw shape_error("TTTensor::rank: bond " + std::to_string(n) +
                          " out of range 0.." + std::to_string(order()));
    }
    return (n == 0) ? 1 : cores_[n - 1].r_right();
}

std::vector<std::size_t> TTTensor::bond_ranks() const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k + 1 < cores_.size(); ++k) r.push_back(cores_[k].r_right());
    return r;
}

const TTCore& TTTensor::core(std::size_t n) const {
    return cores_[mode_axis(order(), n, "TTTensor::core")];
}

std::size_t TTTensor::storage_bytes() const {
    std::size_t total = 0;
    for (const auto& c : cores_) total += c.data().storage_bytes();
    return total;
}

TTTensor tt_validate(std::vector<TTCore> cores) { return TTTensor(std::move(cores)); }

std::size_t TruncationSpec::cap_for_bond(std::size_t n, std::size_t bonds) const {
    if (!max_ranks) return std::numeric_limits<std::size_t>::max();
    const auto& mr = *max_ranks;
    if (mr.size() == 1) return mr[0];
    if (n < 1 || n > bonds || mr.size() != bonds) {
        throw shape_error("TruncationSpec: no cap for bond " + std::to_string(n));
    }
    return mr[n - 1];
}

double tt_entry(const TTTensor& x, std::span<const std::size_t> idx) {
    if (idx.size() != x.order()) {
        throw shape_error("tt_entry: multi-index has " + std::to_string(idx.size()) +
                          " entries for an order-" + std::to_string(x.order()) +
                          " tensor");
    }
    std::vector<double> v{1.0};
    for (std::size_t k = 0; k < x.order(); ++k) {
        const TTCore& c = x.cores()[k];
        if (idx[k] >= c.dim()) {
            throw shape_error("tt_entry: index " + std::to_string(idx[k]) +
                              " out of range for mode " + std::to_string(k + 1) +
                              " of size " + std::to_string(c.dim()));
        }
        const std::size_t rl = c.r_left(), rr = c.r_right(), i = idx[k];
        std::vector<double> w(rr, 0.0);
        for (std::size_t a = 0; a < rl; ++a) {
            const double va = v[a];
            if (va == 0.0) continue;
            for (std::size_t b = 0; b < rr; ++b) {
                w[b] += va * c.data().values()[(a * c.dim() + i) * rr + b];
            }
        }
        v = std::move(w);
    }
    return v[0];
}

namespace {

// Row-major buffer of the (I_1 * ... * I_n) x R_n prefix chain product.
std::vector<double> chain_prefix(const TTTensor& x, std::size_t n, std::size_t cap) {
    const TTCore& first = x.cores().front();
    std::vector<double> buf(first.data().values().begin(), first.data().values().end());
    std::size_t rows = first.dim();
    require_within_cap(buf.size(), cap, "partial chain product");
    for (std::size_t k = 1; k < n; ++k) {
        const TTCore& c = x.cores()[k];
        const std::size_t count =
            checked_mul(checked_mul(rows, c.dim()), c.r_right());
        require_within_cap(count, cap, "partial chain product");
        ConstRowMap cur(buf.data(), rows, c.r_left());
        const auto h = map_matrix(c.data(), c.r_left(), c.dim() * c.r_right());
        RowMat next = cur * h;
        buf = to_buffer(next);
        rows *= c.dim();
    }
    return buf;
}

} // namespace

DenseTensor tt_to_dense(const TTTensor& x, std::size_t mem_cap_bytes) {
    std::vector<double> buf = chain_prefix(x, x.order(), mem_cap_bytes);
    return DenseTensor(Shape(x.dims()), std::move(buf));
}

DenseTensor tt_vectorize_strong_kron(const TTTensor& x, std::size_t mem_cap_bytes) {
    auto core_block = [](const TTCore& c) {
        std::vector<DenseTensor> blocks;
        blocks.reserve(c.r_left() * c.r_right());
        for (std::size_t a = 0; a < c.r_left(); ++a) {
            for (std::size_t b = 0; b < c.r_right(); ++b) {
                std::vector<double> fiber(c.dim());
                for (std::size_t i = 0; i < c.dim(); ++i) {
                    fiber[i] = c.data().values()[(a * c.dim() + i) * c.r_right() + b];
                }
                blocks.emplace_back(Shape({c.dim(), std::size_t(1)}), std::move(fiber));
            }
        }
        return BlockMatrix(c.r_left(), c.r_right(), std::move(blocks));
    };

    BlockMatrix acc = core_block(x.cores().front());
    std::size_t rows = x.cores().front().dim();
    for (std::size_t k = 1; k < x.order(); ++k) {
        const TTCore& c = x.cores()[k];
        rows = checked_mul(rows, c.dim());
        require_within_cap(checked_mul(rows, c.r_right()), mem_cap_bytes,
                           "tt_vectorize_strong_kron");
        acc = strong_kron(acc, core_block(c));
    }
    const DenseTensor& column = acc.block(0, 0);
    std::vector<double> v(column.values().begin(), column.values().end());
    return DenseTensor(Shape({column.rows()}), std::move(v));
}

TTTensor tt_svd(const DenseTensor& x, const TruncationSpec& spec) {
    const std::size_t n = x.order();
    if (n == 0) {
        throw shape_error("tt_svd: an order-0 tensor has no tensor-train form");
    }
    validate_spec(spec, n - 1, "tt_svd");
    const auto& dims = x.shape().dims();
    const double norm = x.frobenius_norm();
    if (norm == 0.0) return zero_tt(dims);
    const double delta = (spec.epsilon && n > 1)
                             ? *spec.epsilon * norm / std::sqrt(double(n - 1))
                             : 0.0;

    std::vector<double> buf(x.values().begin(), x.values().end());
    std::size_t rows = dims[0];
    std::size_t cols = x.count() / dims[0];
    std::size_t r_prev = 1;
    std::vector<TTCore> cores;
    cores.reserve(n);
    for (std::size_t ax = 0; ax + 1 < n; ++ax) {
        ConstRowMap m(buf.data(), rows, cols);
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sv = svd.singularValues();
        std::size_t r;
        RowMat u, carry;
        if (sv.size() == 0 || sv(0) == 0.0) {
            r = 1;
            u = RowMat::Zero(rows, 1);
            carry = RowMat::Zero(1, cols);
        } else {
            r = truncation_rank(sv, delta, spec.cap_for_bond(ax + 1, n - 1));
            u = svd.matrixU().leftCols(r);
            carry = sv.head(r).asDiagonal() * svd.matrixV().leftCols(r).transpose();
        }
        cores.emplace_back(r_prev, dims[ax], r, to_buffer(u), OrthFlag::left);
        buf = to_buffer(carry);
        r_prev = r;
        rows = r * dims[ax + 1];
        cols /= dims[ax + 1];
    }
    cores.emplace_back(r_prev, dims[n - 1], 1, std::move(buf));
    return TTTensor(std::move(cores));
}

std::vector<std::size_t> separation_ranks(const DenseTensor& x) {
    const std::size_t n = x.order();
    std::vector<std::size_t> out;
    if (n <= 1) return out;
    std::size_t rows = 1;
    for (std::size_t split = 1; split < n; ++split) {
        rows *= x.shape().dims()[split - 1];
        ConstRowMap m(x.values().data(), rows, x.count() / rows);
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
        const Eigen::VectorXd& sv = svd.singularValues();
        std::size_t r = 0;
        if (sv.size() > 0 && sv(0) > 0.0) {
            const double cut = 1e-12 * sv(0);
            while (r < static_cast<std::size_t>(sv.size()) && sv(r) >= cut) ++r;
        }
        out.push_back(r);
    }
    return out;
}

DenseTensor partial_product_left(const TTTensor& x, std::size_t n,
                                 std::size_t mem_cap_bytes) {
    if (n > x.order()) {
        throw shape_error("partial_product_left: site " + std::to_string(n) +
                          " out of range 0.." + std::to_string(x.order()));
    }
    if (n == 0) return DenseTensor::scalar(1.0);
    std::vector<double> buf = chain_prefix(x, n, mem_cap_bytes);
    const std::vector<std::size_t> all = x.dims();
    std::vector<std::size_t> dims(all.begin(), all.begin() + n);
    dims.push_back(x.rank(n));
    return DenseTensor(Shape(std::move(dims)), std::move(buf));
}

DenseTensor partial_product_right(const TTTensor& x, std::size_t n,
                                  std::size_t mem_cap_bytes) {
    const std::size_t order = x.order();
    if (n < 1 || n > order + 1) {
        throw shape_error("partial_product_right: site " + std::to_string(n) +
                          " out of range 1.." + std::to_string(order + 1));
    }
    if (n == order + 1) return DenseTensor::scalar(1.0);
    const TTCore& last = x.cores().back();
    std::vector<double> buf(last.data().values().begin(), last.data().values().end());
    std::size_t cols = last.dim();
    require_within_cap(buf.size(), mem_cap_bytes, "partial chain product");
    for (std::size_t k = order - 1; k >= n; --k) {
        const TTCore& c = x.cores()[k - 1];
        const std::size_t count =
            checked_mul(checked_mul(c.r_left(), c.dim()), cols);
        require_within_cap(count, mem_cap_bytes, "partial chain product");
        const auto v = map_matrix(c.data(), c.r_left() * c.dim(), c.r_right());
        ConstRowMap cur(buf.data(), c.r_right(), cols);
        RowMat next = v * cur;
        buf = to_buffer(next);
        cols = checked_mul(cols, c.dim());
    }
    const std::vector<std::size_t> all = x.dims();
    std::vector<std::size_t> dims;
    dims.push_back(x.rank(n - 1));
    dims.insert(dims.end(), all.begin() + (n - 1), all.end());
    return DenseTensor(Shape(std::move(dims)), std::move(buf));
}

DenseTensor frame_matrix(const TTTensor& x, std::size_t n, std::size_t mem_cap_bytes) {
    mode_axis(x.order(), n, "frame_matrix");
    const DenseTensor left = (n == 1)
                                 ? DenseTensor::constant(Shape({1, 1}), 1.0)
                                 : matricize_prefix(
                                       partial_product_left(x, n - 1, mem_cap_bytes), n - 1);
    const DenseTensor right =
        (n == x.order())
            ? DenseTensor::constant(Shape({1, 1}), 1.0)
            : transpose(matricize_prefix(
                  partial_product_right(x, n + 1, mem_cap_bytes), 1));
    const std::size_t in = x.cores()[n - 1].dim();
    const std::size_t rows = checked_mul(checked_mul(left.rows(), in), right.rows());
    const std::size_t cols = checked_mul(checked_mul(left.cols(), in), right.cols());
    require_within_cap(checked_mul(rows, cols), mem_cap_bytes, "frame_matrix");
    return kron(kron(left, DenseTensor::identity(in)), right);
}

DenseTensor frame_matrix_pair(const TTTensor& x, std::size_t n, std::size_t mem_cap_bytes) {
    if (n < 1 || n + 1 > x.order()) {
        throw shape_error("frame_matrix_pair: sites (" + std::to_string(n) + "," +
                          std::to_string(n + 1) + ") out of range for order " +
                          std::to_string(x.order()));
    }
    const DenseTensor left = (n == 1)
                                 ? DenseTensor::constant(Shape({1, 1}), 1.0)
                                 : matricize_prefix(
                                       partial_product_left(x, n - 1, mem_cap_bytes), n - 1);
    const DenseTensor right =
        (n + 1 == x.order())
            ? DenseTensor::constant(Shape({1, 1}), 1.0)
            : transpose(matricize_prefix(
                  partial_product_right(x, n + 2, mem_cap_bytes), 1));
    const std::size_t in = x.cores()[n - 1].dim();
    const std::size_t in1 = x.cores()[n].dim();
    const std::size_t rows =
        checked_mul(checked_mul(checked_mul(left.rows(), in), in1), right.rows());
    const std::size_t cols =
        checked_mul(checked_mul(checked_mul(left.cols(), in), in1), right.cols());
    require_within_cap(checked_mul(rows, cols), mem_cap_bytes, "frame_matrix_pair");
    return kron(kron(kron(left, DenseTensor::identity(in)), DenseTensor::identity(in1)),
                right);
}

namespace {

TTCore absorb_from_left(const Eigen::MatrixXd& m, const TTCore& c, OrthFlag flag) {
    const auto h = map_matrix(c.data(), c.r_left(), c.dim() * c.r_right());
    RowMat next = m * h;
    return TTCore(static_cast<std::size_t>(m.rows()), c.dim(), c.r_right(),
                  to_buffer(next), flag);
}

TTCore absorb_from_right(const TTCore& c, const Eigen::MatrixXd& m, OrthFlag flag) {
    const auto v = map_matrix(c.data(), c.r_left() * c.dim(), c.r_right());
    RowMat next = v * m;
    return TTCore(c.r_left(), c.dim(), static_cast<std::size_t>(m.cols()),
                  to_buffer(next), flag);
}

// Thin QR with the R factor's diagonal made nonnegative, so the factorization
// of an already orthonormal matrix is the identity up to roundoff.
void signed_thin_qr(const Eigen::MatrixXd& m, Eigen::MatrixXd& q, Eigen::MatrixXd& r) {
    const Eigen::Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), k);
    r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    for (Eigen::Index d = 0; d < k; ++d) {
        if (r(d, d) < 0.0) {
            r.row(d) = -r.row(d);
            q.col(d) = -q.col(d);
        }
    }
}

} // namespace

TTTensor left_orthogonalize(const TTTensor& x, std::size_t site) {
    mode_axis(x.order(), site, "left_orthogonalize");
    std::vector<TTCore> cores = x.cores();
    Eigen::MatrixXd pending;
    bool has_pending = false;
    for (std::size_t k = 0; k + 1 < site; ++k) {
        if (!has_pending && cores[k].orth() == OrthFlag::left) continue;
        TTCore c = has_pending ? absorb_from_left(pending, cores[k], OrthFlag::none)
                               : cores[k];
        const auto v = map_matrix(c.data(), c.r_left() * c.dim(), c.r_right());
        Eigen::MatrixXd q, r;
        signed_thin_qr(v, q, r);
        RowMat qr_q = q;
        cores[k] = TTCore(c.r_left(), c.dim(), static_cast<std::size_t>(q.cols()),
                          to_buffer(qr_q), OrthFlag::left);
        pending = r;
        has_pending = true;
    }
    if (has_pending) {
        cores[site - 1] = absorb_from_left(pending, cores[site - 1], OrthFlag::none);
    }
    return TTTensor(std::move(cores));
}

TTTensor right_orthogonalize(const TTTensor& x, std::size_t site) {
    mode_axis(x.order(), site, "right_orthogonalize");
    std::vector<TTCore> cores = x.cores();
    Eigen::MatrixXd pending;
    bool has_pending = false;
    for (std::size_t k = x.order(); k-- > site;) {
        if (!has_pending && cores[k].orth() == OrthFlag::right) continue;
        TTCore c = has_pending ? absorb_from_right(cores[k], pending, OrthFlag::none)
                               : cores[k];
        const auto h = map_matrix(c.data(), c.r_left(), c.dim() * c.r_right());
        Eigen::MatrixXd q, r;
        signed_thin_qr(h.transpose(), q, r);
        RowMat qt = q.transpose();
        cores[k] = TTCore(static_cast<std::size_t>(q.cols()), c.dim(), c.r_right(),
                          to_buffer(qt), OrthFlag::right);
        pending = r.transpose();
        has_pending = true;
    }
    if (has_pending) {
        cores[site - 1] = absorb_from_right(cores[site - 1], pending, OrthFlag::none);
    }
    return TTTensor(std::move(cores));
}

TTTensor mixed_canonical(const TTTensor& x, std::size_t site) {
    return right_orthogonalize(left_orthogonalize(x, site), site);
}

TTTensor tt_round(const TTTensor& x, const TruncationSpec& spec) {
    const std::size_t n = x.order();
    validate_spec(spec, n - 1, "tt_round");
    if (n == 1) return x;

    TTTensor y = right_orthogonalize(x, 1);
    const double norm = y.cores().front().data().frobenius_norm();
    if (norm == 0.0) return zero_tt(x.dims());
    const double delta =
        spec.epsilon ? *spec.epsilon * norm / std::sqrt(double(n - 1)) : 0.0;

    std::vector<TTCore> cores = y.cores();
    Eigen::MatrixXd carry;
    bool has_carry = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        TTCore c = has_carry ? absorb_from_left(carry, cores[k], OrthFlag::none)
                             : cores[k];
        const auto v = map_matrix(c.data(), c.r_left() * c.dim(), c.r_right());
        Eigen::BDCSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sv = svd.singularValues();
        std::size_t r;
        RowMat u;
        if (sv.size() == 0 || sv(0) == 0.0) {
            r = 1;
            u = RowMat::Zero(static_cast<Eigen::Index>(c.r_left() * c.dim()), 1);
            carry = Eigen::MatrixXd::Zero(1, static_cast<Eigen::Index>(c.r_right()));
        } else {
            r = truncation_rank(sv, delta, spec.cap_for_bond(k + 1, n - 1));
            u = svd.matrixU().leftCols(r);
            carry = sv.head(r).asDiagonal() * svd.matrixV().leftCols(r).transpose();
        }
        cores[k] = TTCore(c.r_left(), c.dim(), r, to_buffer(u), OrthFlag::left);
        has_carry = true;
    }
    cores[n - 1] = absorb_from_left(carry, cores[n - 1], OrthFlag::none);
    return TTTensor(std::move(cores));
}

TTTensor tt_scalar_mul(const TTTensor& x, double c) {
    if (c == 1.0) return x;
    std::vector<TTCore> cores = x.cores();
    const TTCore& first = cores.front();
    std::vector<double> buf(first.data().values().begin(), first.data().values().end());
    for (double& v : buf) v *= c;
    const OrthFlag flag = (c == -1.0) ? first.orth() : OrthFlag::none;
    cores.front() = TTCore(first.r_left(), first.dim(), first.r_right(), std::move(buf), flag);
    return TTTensor(std::move(cores));
}

} // namespace ttkit
