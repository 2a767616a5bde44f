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

#ifndef FMODLEN_FROBENIUS_HPP_
#define FMODLEN_FROBENIUS_HPP_

#include <vector>

#include "fmodlen/homalg.hpp"
#include "fmodlen/semilinear.hpp"

namespace fmodlen {

// Pullback along the p^iterate-power endomorphism of the ring: twists and
// exponents scale by p^iterate, coefficients pass through the same Frobenius
// power. Flatness of Frobenius over a polynomial ring keeps pulled-back
// resolutions exact.
GradedMatrix frobenius_pullback(const GradedMatrix& m, int iterate = 1);

// Chain map u over the surjection R/I^{[p^iterate]} -> R/I covering the
// identity of F_0 = R: maps[l] : F^* F_l -> F_l satisfies
// d_l o maps[l] = maps[l-1] o F^* d_l, maps[0] = 1. Requires every twist of
// res.f0 to be zero. Levels beyond a completed resolution come back with
// rank-zero sources.
std::vector<GradedMatrix> lift_frobenius(const FreeResolution& res, int levels,
                                         int iterate = 1, const Budget* budget = nullptr);

// Matrix, over piece.representatives(), of the p^{-iterate}-semilinear
// operator induced on Ext^i(R/I, R)_{-nvars} by the surjection
// R/I^{[p^iterate]} -> R/I. u must be the level-i lift for the same iterate.
// Composing a cocycle with u and projecting onto the x^{(p^k-1)(1,..,1)}
// component of the pullback decomposition divides all exponents by p^k, so
// the operator preserves the degree -nvars piece and no other.
MatFq cartier_matrix(const ExtPiece& piece, const GradedMatrix& u, int iterate = 1);

// Homology coordinates of the Cartier image of a single cocycle, given by
// coordinates in piece.basis(). Column j of cartier_matrix is this applied
// to representative j; exposed separately so well-definedness checks can
// feed perturbed representatives through the same code path.
FqVec cartier_apply(const ExtPiece& piece, const GradedMatrix& u, const FqVec& coords,
                    int iterate = 1);

// One-call form: minimal resolution, lift, piece at degree -nvars.
SemilinearOp cartier_operator(const Ideal& ideal, int i, const Budget* budget = nullptr);

// Cartier matrix of the degree-d hypersurface f on the monomials of degree
// d - nvars (descending ring order): entry (v, u) is the p-th root of the
// coefficient of x^(p mv + (p-1)(1,..,1) - mu) in f^(p-1). Agrees entrywise
// with cartier_matrix for the resolution 0 -> R(-d) -f-> R.
MatFq hasse_witt_matrix(const Poly& f);
SemilinearOp hasse_witt_operator(const Poly& f);

}  // namespace fmodlen

#endif  // FMODLEN_FROBENIUS_HPP_
