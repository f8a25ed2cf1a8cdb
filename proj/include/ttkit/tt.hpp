#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ttkit/dense_tensor.hpp"

namespace ttkit {

/// Default densification budget: refuse to materialize more than 1 GiB.
inline constexpr std::size_t kDefaultMemCapBytes = std::size_t(1) << 30;

/// Advisory orthogonality marker carried by a core.  `left` claims the
/// vertical unfolding has orthonormal columns, `right` claims the horizontal
/// unfolding has orthonormal rows.  The flag is a cache: routines that
/// produce orthogonal cores set it, and consumers may re-verify via
/// is_left_orthogonal / is_right_orthogonal.
enum class OrthFlag : std::uint8_t { none = 0, left = 1, right = 2 };

/// One order-3 tensor-train core of shape R_left x I x R_right, stored
/// row-major (right bond fastest).
class TTCore {
public:
    TTCore(std::size_t r_left, std::size_t dim, std::size_t r_right,
           std::vector<double> values, OrthFlag orth = OrthFlag::none);

    /// Wraps an order-3 tensor; throws shape_error on any other order.
    explicit TTCore(DenseTensor data, OrthFlag orth = OrthFlag::none);

    std::size_t r_left() const { return data_.shape().dims()[0]; }
    std::size_t dim() const { return data_.shape().dims()[1]; }
    std::size_t r_right() const { return data_.shape().dims()[2]; }

    const DenseTensor& data() const { return data_; }
    OrthFlag orth() const { return orth_; }

    /// Lateral slice at physical index i as an R_left x R_right matrix.
    DenseTensor slice(std::size_t i) const;

private:
    DenseTensor data_;
    OrthFlag orth_;
};

/// Reshape of a core to its (R_left * I) x R_right column form.
DenseTensor vertical_unfolding(const TTCore& core);

/// Reshape of a core to its R_left x (I * R_right) row form.
DenseTensor horizontal_unfolding(const TTCore& core);

/// Whether the vertical unfolding has orthonormal columns within tol.
bool is_left_orthogonal(const TTCore& core, double tol = 1e-10);

/// Whether the horizontal unfolding has orthonormal rows within tol.
bool is_right_orthogonal(const TTCore& core, double tol = 1e-10);

/// Tensor in tensor-train form: cores of shapes R_{n-1} x I_n x R_n with
/// R_0 = R_N = 1.  Immutable after construction.
class TTTensor {
public:
    /// Validates the chain: at least one core, boundary ranks 1, adjacent
    /// bond ranks equal.  Errors name the offending end or bond.
    explicit TTTensor(std::vector<TTCore> cores);

    std::size_t order() const { return cores_.size(); }

    /// Mode sizes (I_1, ..., I_N).
    std::vector<std::size_t> dims() const;

    /// Bond rank R_n for 0 <= n <= N (R_0 = R_N = 1).
    std::size_t rank(std::size_t n) const;

    /// Internal bond ranks (R_1, ..., R_{N-1}); empty when N = 1.
    std::vector<std::size_t> bond_ranks() const;

    const TTCore& core(std::size_t n) const;  // 1-based site
    const std::vector<TTCore>& cores() const { return cores_; }

    std::size_t storage_bytes() const;

private:
    std::vector<TTCore> cores_;
};

/// Factory form of the chain validation in the TTTensor constructor.
TTTensor tt_validate(std::vector<TTCore> cores);

/// Requested truncation for tt_svd / tt_round.  epsilon is a relative
/// Frobenius-norm budget; max_ranks caps the internal bonds (a single entry
/// broadcasts to every bond).  Both are enforced when present.
struct TruncationSpec {
    std::optional<double> epsilon;
    std::optional<std::vector<std::size_t>> max_ranks;

    /// Validated cap for bond n of a chain with `bonds` internal bonds.
    std::size_t cap_for_bond(std::size_t n, std::size_t bonds) const;
};

/// Entry x(i) as the product of lateral slices.  idx is 0-based.
double tt_entry(const TTTensor& x, std::span<const std::size_t> idx);

/// Full dense tensor by left-to-right chain contraction.
DenseTensor tt_to_dense(const TTTensor& x, std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Full vectorization as the strong Kronecker product of the per-core block
/// matrices (R_{n-1} I_n) x R_n; agrees with vectorize(tt_to_dense(x)).
DenseTensor tt_vectorize_strong_kron(const TTTensor& x,
                                     std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Tensor-train decomposition of a dense tensor by successive SVD of the
/// prefix matricizations.  With the per-split threshold derived from
/// spec.epsilon (delta = epsilon * |x|_F / sqrt(N-1)), the reconstruction
/// error is at most epsilon * |x|_F; with epsilon 0 (or absent) the
/// decomposition is exact up to numerically zero singular values.  All cores
/// except the last are left-orthogonal.  The all-zero tensor yields unit bond
/// ranks with zero cores.
TTTensor tt_svd(const DenseTensor& x, const TruncationSpec& spec = {});

/// Ranks of the prefix matricizations X_([n]) for n = 1..N-1, with singular
/// values below 1e-12 * sigma_max counted as zero.
std::vector<std::size_t> separation_ranks(const DenseTensor& x);

/// Partial chain product of cores 1..n, of shape I_1 x ... x I_n x R_n.
/// n = 0 yields the order-0 scalar 1.
DenseTensor partial_product_left(const TTTensor& x, std::size_t n,
                                 std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Partial chain product of cores n..N, of shape R_{n-1} x I_n x ... x I_N.
/// n = N + 1 yields the order-0 scalar 1.
DenseTensor partial_product_right(const TTTensor& x, std::size_t n,
                                  std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Frame matrix at site n: the Kronecker product of the transposed left
/// partial-product matricization, I_{I_n}, and the transposed right
/// partial-product matricization.  Satisfies vec(x) = frame * vec(core n).
DenseTensor frame_matrix(const TTTensor& x, std::size_t n,
                         std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Two-site frame at sites (n, n+1), 1 <= n <= N-1; satisfies vec(x) =
/// frame * vec(core n contracted with core n+1).
DenseTensor frame_matrix_pair(const TTTensor& x, std::size_t n,
                              std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// QR sweep making cores 1..site-1 left-orthogonal; the densified value is
/// unchanged and bond ranks never increase.  Cores already flagged
/// left-orthogonal are skipped when nothing is pending absorption.
TTTensor left_orthogonalize(const TTTensor& x, std::size_t site);

/// QR sweep making cores site+1..N right-orthogonal.
TTTensor right_orthogonalize(const TTTensor& x, std::size_t site);

/// Mixed-canonical form at `site`: left sweep up to it, right sweep down to
/// it.
TTTensor mixed_canonical(const TTTensor& x, std::size_t site);

/// Rank truncation: right-to-left orthogonalization sweep followed by a
/// left-to-right SVD sweep with per-split threshold epsilon * |x|_F /
/// sqrt(N-1).  Result cores are left-orthogonal except the last.
TTTensor tt_round(const TTTensor& x, const TruncationSpec& spec = {});

/// Scales the tensor by c (applied to the first core).
TTTensor tt_scalar_mul(const TTTensor& x, double c);

} // namespace ttkit
