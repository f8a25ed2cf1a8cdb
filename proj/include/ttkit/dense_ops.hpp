#pragma once

#include <vector>

#include "ttkit/dense_tensor.hpp"

namespace ttkit {

// Generalized multilinear operations on dense tensors.  Variants are selected
// by the function name (full / mode-n / mode-n-bar), never inferred from the
// operand shapes.  Mode numbers are 1-based.

/// Mode-n matricization: rows = mode n, columns = the remaining modes in
/// increasing order with the last varying fastest.
DenseTensor matricize(const DenseTensor& a, std::size_t n);

/// Prefix matricization: rows = modes 1..n merged, columns = modes n+1..N
/// merged, both with the last constituent varying fastest.  0 <= n <= N;
/// n = 0 and n = N give a single row / single column.  Because storage is
/// row-major this is a pure reshape.
DenseTensor matricize_prefix(const DenseTensor& a, std::size_t n);

/// Reshape to a single column of length count() (the vectorization).
DenseTensor vectorize(const DenseTensor& a);

/// Matrix transpose of an order-2 tensor.
DenseTensor transpose(const DenseTensor& a);

/// Entrywise sum; shapes must match.
DenseTensor add(const DenseTensor& a, const DenseTensor& b);

/// Entrywise scaling by c.
DenseTensor scale(const DenseTensor& a, double c);

/// Kronecker product of same-order tensors: every mode size multiplies,
/// c(i1 j1 bar, ..., iN jN bar) = a(i) * b(j).  For order-0 operands this is
/// the scalar product.
DenseTensor kron(const DenseTensor& a, const DenseTensor& b);

/// Mode-n Kronecker product: mode n sizes multiply, all other modes are
/// shared between the operands and must match.
DenseTensor kron_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Mode-n-bar Kronecker product: mode n is shared (sizes must match), every
/// other mode size multiplies.
DenseTensor kron_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Entrywise (Hadamard) product; shapes must match.
DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b);

/// Outer product: order M + N, c(i, j) = a(i) * b(j).
DenseTensor outer(const DenseTensor& a, const DenseTensor& b);

/// Direct sum: every mode size adds, a occupies the leading corner, b the
/// trailing corner, zeros elsewhere.  The direct sum of order-0 tensors is
/// scalar addition.
DenseTensor direct_sum(const DenseTensor& a, const DenseTensor& b);

/// Mode-n direct sum: mode n sizes add (fibers concatenate), all other modes
/// are shared and must match.
DenseTensor direct_sum_mode(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Mode-n-bar direct sum: mode n is shared, every other mode size adds.  For
/// order-1 operands this degenerates to entrywise addition.
DenseTensor direct_sum_bar(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Mode-n matrix product: c = a x_n b with b a J x I_n matrix; mode n becomes
/// size J.  Equivalently C_(n) = b * A_(n).
DenseTensor mode_n_product(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Mode-n vector product: contracts mode n against a length-I_n vector and
/// removes that mode.
DenseTensor mode_n_vector_product(const DenseTensor& a, const DenseTensor& b, std::size_t n);

/// Mode-(M,1) contracted product: contracts the last mode of a (order M)
/// against the first mode of b (order N); result has order M + N - 2.  For
/// two vectors this is the scalar product (order 0).
DenseTensor contracted_product(const DenseTensor& a, const DenseTensor& b);

/// Tucker operator: applies one factor per mode of g.  factors[n-1] has order
/// M_n + 1 with its last mode matching mode n of g; mode n of g is replaced
/// by the factor's M_n leading modes (an order-1 factor removes the mode).
DenseTensor tucker_operator(const DenseTensor& g, const std::vector<DenseTensor>& factors);

/// Self-contraction: traces the first mode of an order-(N+1) tensor against
/// its last (sizes must match), dropping both.  For a square matrix this is
/// the trace (an order-0 result).
DenseTensor self_contraction(const DenseTensor& a);

} // namespace ttkit
