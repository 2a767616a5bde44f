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

#ifndef FMODLEN_HOMALG_HPP_
#define FMODLEN_HOMALG_HPP_

#include <map>
#include <vector>

#include "fmodlen/budget.hpp"
#include "fmodlen/graded.hpp"
#include "fmodlen/groebner.hpp"
#include "fmodlen/ideal.hpp"

namespace fmodlen {

// Chain of graded free modules F_len -> ... -> F_1 -> F_0 with d o d = 0 and
// exact rows (each diff's columns generate the kernel of the previous one).
// diffs[k] is d_{k+1}: F_{k+1} -> F_0-indexed level k+1 -> k.
struct FreeResolution {
  RingPtr ring;
  GradedFreeModule f0;
  std::vector<GradedMatrix> diffs;
  bool complete = false;  // the kernel of the last differential is zero

  int length() const { return static_cast<int>(diffs.size()); }
  const GradedFreeModule& module(int i) const;
  // d_i for i >= 1; beyond the computed chain returns a zero map with a
  // rank-zero source (only valid when complete).
  GradedMatrix diff(int i) const;
};

// Iterated syzygies starting from the generator row of I, pruned to the
// minimal resolution unless prune is false. Stops early when the resolution
// terminates.
FreeResolution free_resolution(const Ideal& ideal, int length, bool prune = true,
                               const Budget* budget = nullptr);
// Same, starting from an arbitrary presentation matrix (F_0 = d1.target()).
FreeResolution resolve_presentation(const GradedMatrix& d1, int length, bool prune = true,
                                    const Budget* budget = nullptr);

// delta^i = Hom(d_{i+1}, R): D_i -> D_{i+1} where D_i = module(i) dualized.
GradedMatrix dual_delta(const FreeResolution& res, int i);
// All of delta^0 .. delta^{length-1}.
std::vector<GradedMatrix> dualize(const FreeResolution& res);

// Entrywise composite check d_i o d_{i+1} = 0 for the whole chain.
bool resolution_dd_zero(const FreeResolution& res);
// Rank check of exactness at F_i in one degree: ker(d_i)_d = im(d_{i+1})_d.
bool resolution_exact_at(const FreeResolution& res, int i, int degree);

// The degree-d piece of Ext^i = ker(delta^i)/im(delta^{i-1}) as an explicit
// F_q-space: canonical cocycle representatives (reduced row echelon of the
// kernel modulo the image) plus the reduction map onto their span.
class ExtPiece {
 public:
  ExtPiece(const FreeResolution& res, int i, int degree);

  int hom_index() const { return i_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  const PieceBasis& basis() const { return basis_; }  // of D_i at degree
  // Canonical representatives, coordinates in basis().
  const std::vector<FqVec>& representatives() const { return reps_; }

  bool is_cocycle(const FqVec& v) const;
  // Coordinates of the class of v over representatives(); throws if v is not
  // a cocycle modulo the image.
  FqVec homology_coords(const FqVec& v) const;

 private:
  struct Row {
    int pivot;
    FqVec v;
    int rep_slot;  // -1 for image rows
  };
  // Inserts into the shared echelon structure; false when v reduces to zero.
  bool insert(FqVec v, bool is_rep);

  FqPtr field_;
  int i_;
  int degree_;
  PieceBasis basis_;
  MatFq cocycle_mat_;  // piece matrix of delta^i, for membership checks
  std::vector<Row> rows_;
  std::vector<FqVec> reps_;
};

ExtPiece ext_graded_piece(const FreeResolution& res, int i, int degree);
// Convenience: resolves R/I far enough first. i must lie in [0, nvars].
ExtPiece ext_graded_piece(const Ideal& ideal, int i, int degree,
                          const Budget* budget = nullptr);

// Cokernel presentation of a graded matrix; gens are target summands.
struct PresentedModule {
  GradedMatrix presentation;

  const GradedFreeModule& gens() const { return presentation.target(); }
};

// Ext^i(R/I, R) as a presented module: generators are the kernel generators
// of delta^i, relations come from coboundaries and kernel syzygies. The
// returned presentation is minimal.
PresentedModule present_homology(const FreeResolution& res, int i,
                                 const Budget* budget = nullptr);

// Removes unit entries from a presentation (iterated row/column reduction);
// the result presents an isomorphic module with a minimal generator set.
PresentedModule minimalize(const PresentedModule& m);

// Hilbert series as numerator(t) / (1-t)^nvars, numerator a Laurent
// polynomial with integer coefficients read off a minimal free resolution.
struct HilbertSeries {
  std::map<int, long long> numerator;
  int denominator_power = 0;
};

HilbertSeries hilbert_series(const PresentedModule& m, const Budget* budget = nullptr);
long long hilbert_coefficient(const HilbertSeries& h, int degree);
// dim_k M_d computed directly from the presentation piece in degree d,
// independent of the resolution-based series.
int graded_dim(const PresentedModule& m, int degree);

// Finite length <=> the Hilbert series is a (Laurent) polynomial <=>
// (1-t)^nvars divides the numerator. The zero module has finite length.
bool is_finite_length(const PresentedModule& m, const Budget* budget = nullptr);
bool is_zero_module(const PresentedModule& m);

}  // namespace fmodlen

#endif  // FMODLEN_HOMALG_HPP_
