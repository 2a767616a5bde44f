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

#include "fmodlen/semilinear.hpp"

#include <stdexcept>
#include <utility>

namespace fmodlen {

SemilinearOp SemilinearOp::make(FqPtr field, MatFq a, int twist) {
  if (!field) throw std::invalid_argument("semilinear operator needs a field");
  if (a.rows() != a.cols()) throw std::invalid_argument("semilinear matrix must be square");
  if (twist != 1 && twist != -1)
    throw std::invalid_argument("twist must be +1 or -1");
  return SemilinearOp{std::move(field), std::move(a), twist};
}

FqVec SemilinearOp::apply(const FqVec& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw std::invalid_argument("vector length mismatch");
  FqVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = field->frob(v[i], twist);
  return a.apply(w);
}

MatFq semilinear_power(const SemilinearOp& op, int r) {
  if (r < 0) throw std::invalid_argument("semilinear power exponent must be >= 0");
  MatFq prod = MatFq::identity(op.field, op.dim());
  MatFq twisted = op.a;
  for (int s = 0; s < r; ++s) {
    prod = prod.multiply(twisted);
    if (s + 1 < r) twisted = twisted.entrywise_frob(op.twist);
  }
  return prod;
}

StablePart stable_part(const SemilinearOp& op) {
  StablePart out;
  int prev_rank = op.dim();
  MatFq prev_power = MatFq::identity(op.field, op.dim());
  MatFq prod = prev_power;
  MatFq twisted = op.a;
  for (int r = 1; r <= op.dim() + 1; ++r) {
    prod = prod.multiply(twisted);
    twisted = twisted.entrywise_frob(op.twist);
    int rank = prod.rank();
    if (rank == prev_rank) {
      out.dim = rank;
      out.index = r - 1;
      out.basis = prev_power.column_space_echelon();
      return out;
    }
    prev_rank = rank;
    prev_power = prod;
  }
  // Ranks strictly decrease until they repeat, so dim + 1 products suffice.
  throw std::logic_error("image chain failed to stabilize");
}

int stable_dim(const SemilinearOp& op) { return stable_part(op).dim; }

int fixed_dim(const SemilinearOp& op, uint32_t r) {
  if (op.twist != 1)
    throw std::invalid_argument("fixed points defined for p-semilinear only");
  if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (op.dim() == 0) return 0;
  FieldExtension fe = extend_field(op.field, r);
  const Fq& ext = *fe.ext;
  int m = op.dim();
  int d = m * static_cast<int>(ext.e());

  MatFq aext(fe.ext, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) aext.set(i, j, fe.map(op.a.at(i, j)));

  // v |-> A v^[p] - v is F_p-linear on the restriction of scalars; the fixed
  // space is its kernel. Columns run over the coordinate basis g^c * e_j.
  FqPtr fp = Fq::make(ext.p(), 1);
  MatFq lin(fp, d, d);
  std::vector<uint32_t> unit(ext.e(), 0);
  for (int j = 0; j < m; ++j)
    for (uint32_t c = 0; c < ext.e(); ++c) {
      unit[c] = 1;
      FqElem b = ext.from_coeffs(unit);
      unit[c] = 0;
      FqElem bp = ext.frob(b, 1);
      for (int i = 0; i < m; ++i) {
        FqElem w = ext.mul(aext.at(i, j), bp);
        if (i == j) w = ext.sub(w, b);
        std::vector<uint32_t> wc = ext.coeffs(w);
        for (uint32_t t = 0; t < ext.e(); ++t)
          lin.set(i * static_cast<int>(ext.e()) + static_cast<int>(t),
                  j * static_cast<int>(ext.e()) + static_cast<int>(c),
                  fp->from_int(wc[t]));
      }
    }
  return d - lin.rank();
}

SemilinearOp dual_op(const SemilinearOp& op) {
  return SemilinearOp{op.field, op.a.transpose(), -op.twist};
}

}  // namespace fmodlen
