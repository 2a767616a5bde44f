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

#include "fmodlen/matrix_fq.hpp"

#include <stdexcept>

namespace fmodlen {

MatFq::MatFq(FqPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), FqElem{0});
}

MatFq MatFq::identity(FqPtr field, int n) {
  MatFq m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, m.field_->one());
  return m;
}

bool MatFq::is_zero() const {
  for (const auto& x : a_)
    if (x.v != 0) return false;
  return true;
}

MatFq MatFq::transpose() const {
  MatFq t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

MatFq MatFq::multiply(const MatFq& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  MatFq r(field_, rows_, o.cols_);
  const auto& fq = *field_;
  if (fq.e() == 1) {
    // Prime field: accumulate in uint64 and reduce once per entry.
    uint64_t p = fq.p();
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < o.cols_; ++j) {
        uint64_t acc = 0;
        for (int k = 0; k < cols_; ++k) {
          acc += static_cast<uint64_t>(at(i, k).v) * o.at(k, j).v;
          if (acc >= (1ull << 62)) acc %= p;
        }
        r.set(i, j, FqElem{static_cast<uint32_t>(acc % p)});
      }
    }
    return r;
  }
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      FqElem acc = fq.zero();
      for (int k = 0; k < cols_; ++k) acc = fq.add(acc, fq.mul(at(i, k), o.at(k, j)));
      r.set(i, j, acc);
    }
  }
  return r;
}

FqVec MatFq::apply(const FqVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  const auto& fq = *field_;
  FqVec out(static_cast<size_t>(rows_), fq.zero());
  for (int i = 0; i < rows_; ++i) {
    FqElem acc = fq.zero();
    for (int j = 0; j < cols_; ++j) acc = fq.add(acc, fq.mul(at(i, j), v[static_cast<size_t>(j)]));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

MatFq MatFq::entrywise_frob(int direction) const {
  MatFq r = *this;
  for (auto& x : r.a_) x = field_->frob(x, direction);
  return r;
}

MatFq MatFq::rref(std::vector<int>* pivots) const {
  MatFq m = *this;
  const auto& fq = *field_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i) {
      if (!fq.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols_; ++j) {
        FqElem t = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    FqElem inv = fq.inv(m.at(r, c));
    for (int j = c; j < cols_; ++j) m.set(r, j, fq.mul(m.at(r, j), inv));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      FqElem f = m.at(i, c);
      if (fq.is_zero(f)) continue;
      for (int j = c; j < cols_; ++j)
        m.set(i, j, fq.sub(m.at(i, j), fq.mul(f, m.at(r, j))));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int MatFq::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

MatFq MatFq::kernel_basis() const {
  std::vector<int> pivots;
  MatFq r = rref(&pivots);
  const auto& fq = *field_;
  std::vector<int> pivot_of_col(static_cast<size_t>(cols_), -1);
  for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[static_cast<size_t>(pivots[k])] = static_cast<int>(k);
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (pivot_of_col[static_cast<size_t>(c)] < 0) free_cols.push_back(c);
  MatFq k(field_, cols_, static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.set(f, static_cast<int>(fi), fq.one());
    for (int c = 0; c < cols_; ++c) {
      int pr = pivot_of_col[static_cast<size_t>(c)];
      if (pr >= 0) k.set(c, static_cast<int>(fi), fq.neg(r.at(pr, f)));
    }
  }
  return k;
}

MatFq MatFq::column_space_echelon() const {
  std::vector<int> pivots;
  MatFq r = transpose().rref(&pivots);
  MatFq out(field_, rows_, static_cast<int>(pivots.size()));
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(k), r.at(static_cast<int>(k), i));
  return out;
}

}  // namespace fmodlen
