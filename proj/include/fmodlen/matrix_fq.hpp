// Copyright 2026 The fmodlen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FMODLEN_MATRIX_FQ_HPP_
#define FMODLEN_MATRIX_FQ_HPP_

#include <vector>

#include "fmodlen/fq.hpp"

namespace fmodlen {

using FqVec = std::vector<FqElem>;

// Dense row-major matrix over F_q. Gaussian elimination picks the first
// nonzero pivot in column order, so echelon forms are deterministic.
class MatFq {
 public:
  MatFq() = default;
  MatFq(FqPtr field, int rows, int cols);
  static MatFq identity(FqPtr field, int n);

  const FqPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FqElem at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, FqElem v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }

  bool is_zero() const;
  MatFq transpose() const;
  MatFq multiply(const MatFq& o) const;
  FqVec apply(const FqVec& v) const;  // matrix * column vector
  MatFq entrywise_frob(int direction) const;

  // Reduced row echelon form; appends pivot column indices to *pivots.
  MatFq rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Columns form the canonical basis of the right kernel (one per free
  // column of the RREF, ascending).
  MatFq kernel_basis() const;
  // Columns form the echelon basis of the column space.
  MatFq column_space_echelon() const;

  friend bool operator==(const MatFq& a, const MatFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FqPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FqElem> a_;
};

}  // namespace fmodlen

#endif  // FMODLEN_MATRIX_FQ_HPP_
