#pragma once

#include "ttkit/dense_tensor.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/ttm.hpp"

namespace ttkit {

// Arithmetic on tensor trains.  Wherever two chains are merged, the combined
// bond index puts the first operand (the operator for matrix-vector products,
// the bra factor for inner products) in the slow position:
// merged = r_first * R_second + r_second.

/// Sum of two trains over the same mode sizes.  Internal bond ranks add; no
/// rounding is applied.
TTTensor tt_add(const TTTensor& x, const TTTensor& y);

/// Entrywise product of two trains over the same mode sizes.  Internal bond
/// ranks multiply; no rounding is applied.
TTTensor tt_hadamard(const TTTensor& x, const TTTensor& y);

/// Core contraction at one site: the (R^x_{n-1} R^y_{n-1}) x (R^x_n R^y_n)
/// matrix sum_i X_i (x) Y_i.
DenseTensor core_contraction(const TTCore& x, const TTCore& y);

/// Scalar product <x, y> evaluated left to right through the chain of core
/// contractions, carrying only an R^x_n x R^y_n boundary matrix (no block
/// larger than one core-contraction matrix is ever materialized).
double tt_dot(const TTTensor& x, const TTTensor& y);

/// Matrix-vector product in train form: slice rule Z_i = sum_j A_{i,j} (x)
/// X_j at every site.  Bond ranks multiply; cores are materialized eagerly
/// and no rounding is applied.
TTTensor ttm_apply(const TTMatrix& a, const TTTensor& x);

/// Quadratic form <x, A x> for an operator with square per-mode blocks,
/// evaluated through the chain with an order-3 boundary (bra, operator, ket)
/// carried site by site.
double quadratic_form(const TTTensor& x, const TTMatrix& a);

/// Localized linear map at `site`: applies A to the train obtained from x by
/// substituting the core values w (shaped like x's site core), and returns
/// the dense result of shape I_1 x ... x I_N.
DenseTensor localized_map_apply(const TTMatrix& a, const TTTensor& x, std::size_t site,
                                const DenseTensor& w,
                                std::size_t mem_cap_bytes = kDefaultMemCapBytes);

/// Localized bilinear form at `site`: the quadratic-form chain with the bra
/// core replaced by y_core and the ket core replaced by w_core (both shaped
/// like x's site core).
double localized_bilinear_form(const TTMatrix& a, const TTTensor& x, std::size_t site,
                               const DenseTensor& y_core, const DenseTensor& w_core);

} // namespace ttkit
