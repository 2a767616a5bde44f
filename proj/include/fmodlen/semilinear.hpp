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

#ifndef FMODLEN_SEMILINEAR_HPP_
#define FMODLEN_SEMILINEAR_HPP_

#include "fmodlen/matrix_fq.hpp"

namespace fmodlen {

// phi(v) = A * frob^twist(v) on V = F_q^dim, entrywise Frobenius on
// coordinates. twist +1 is p-semilinear, twist -1 is p^{-1}-semilinear.
struct SemilinearOp {
  FqPtr field;
  MatFq a;
  int twist = 1;

  // Validates that a is square and twist is +1 or -1.
  static SemilinearOp make(FqPtr field, MatFq a, int twist);

  int dim() const { return a.rows(); }
  FqVec apply(const FqVec& v) const;
};

// Matrix of phi^r: A * A^[p^t] * A^[p^2t] * ... * A^[p^(r-1)t], t = twist.
// r = 0 gives the identity.
MatFq semilinear_power(const SemilinearOp& op, int r);

// The stable part is the intersection of the images of all phi^r. Images
// descend and stabilize within dim steps; the echelon column basis at
// stabilization is canonical.
struct StablePart {
  int dim = 0;
  int index = 0;  // least r >= 0 with im(phi^r) = im(phi^(r+1))
  MatFq basis;    // dim columns, echelon basis of the stable image
};

StablePart stable_part(const SemilinearOp& op);
int stable_dim(const SemilinearOp& op);

// dim_{F_p} of {v in V tensor F_{q^r} : phi(v) = v} with phi extended
// p-semilinearly, computed by F_p-linearization over the extension. Throws
// std::invalid_argument on twist -1: a p^{-1}-semilinear operator has no
// F_p-linear fixed equation.
int fixed_dim(const SemilinearOp& op, uint32_t r);

// The transpose operator with the opposite twist. The r-th power matrices
// of op and dual_op(op) are entrywise-Frobenius conjugates of each other's
// transposes, so every image rank and hence the stable dimension agree.
SemilinearOp dual_op(const SemilinearOp& op);

}  // namespace fmodlen

#endif  // FMODLEN_SEMILINEAR_HPP_
