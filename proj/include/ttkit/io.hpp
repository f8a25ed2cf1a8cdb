#pragma once

#include <string>

#include "ttkit/dense_tensor.hpp"
#include "ttkit/tt.hpp"
#include "ttkit/ttm.hpp"

namespace ttkit {

// Binary container formats.  All integers are little-endian; all values are
// IEEE-754 binary64 written bit-exactly, so write/read round-trips reproduce
// every payload byte.
//
//   .dnst  "DNS1"  u32 order, order x u64 mode sizes, count x f64 values
//   .ttv   "TTV1"  u32 N, then per core: u64 r_left, u64 dim, u64 r_right,
//                  payload f64s (row-major), u8 orthogonality flag (0/1/2)
//   .ttm   "TTM1"  u32 N, then per core: u64 r_left, u64 row dim, u64 col dim,
//                  u64 r_right, payload f64s (row-major)
//
// Readers take the whole file and reject bad magic, truncation, trailing
// bytes, zero sizes, invalid flags, and inconsistent bond ranks with io_error
// messages that name the path.

void write_dense(const std::string& path, const DenseTensor& x);
DenseTensor read_dense(const std::string& path);

void write_tt(const std::string& path, const TTTensor& x);
TTTensor read_tt(const std::string& path);

void write_ttm(const std::string& path, const TTMatrix& a);
TTMatrix read_ttm(const std::string& path);

} // namespace ttkit
