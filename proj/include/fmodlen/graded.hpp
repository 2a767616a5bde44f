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

#ifndef FMODLEN_GRADED_HPP_
#define FMODLEN_GRADED_HPP_

#include <unordered_map>
#include <utility>
#include <vector>

#include "fmodlen/matrix_fq.hpp"
#include "fmodlen/poly.hpp"

namespace fmodlen {

// Direct sum of twisted line summands: summand t is R(-twists[t]), so its
// degree-d piece is R_{d - twists[t]}.
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  GradedFreeModule dual() const {
    GradedFreeModule d = *this;
    for (auto& a : d.twists) a = -a;
    return d;
  }
  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
    return a.twists == b.twists;
  }
};

// Degree-preserving map of graded free modules, stored row-major over the
// target. Entry (i, j) must be homogeneous of degree source.twists[j] -
// target.twists[i] (or zero); set_entry enforces this.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source);
  static GradedMatrix identity(const RingPtr& ring, const GradedFreeModule& m);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }

  const Poly& entry(int i, int j) const { return e_[static_cast<size_t>(i) * cols() + j]; }
  void set_entry(int i, int j, Poly f);

  std::vector<Poly> column(int j) const;
  bool is_zero() const;

  // this o rhs; requires source() == rhs.target().
  GradedMatrix compose(const GradedMatrix& rhs) const;
  // Hom(-, R): the map D(target) -> D(source) with entry (j, i) = entry(i, j).
  GradedMatrix transpose_dual() const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.target_ == b.target_ && a.source_ == b.source_ && a.e_ == b.e_;
  }

 private:
  RingPtr ring_;
  GradedFreeModule target_, source_;
  std::vector<Poly> e_;
};

// Ordered coordinate basis of the degree-d piece of a graded free module:
// pairs (component, monomial), components ascending, monomials descending in
// the ring order.
class PieceBasis {
 public:
  static PieceBasis make(const RingPtr& ring, const GradedFreeModule& m, int degree);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  const std::pair<int, Monomial>& at(int k) const { return elems_[static_cast<size_t>(k)]; }
  int index_of(int comp, const Monomial& mon) const;  // -1 if absent

 private:
  struct Key {
    int comp;
    Monomial mon;
    bool operator==(const Key& o) const { return comp == o.comp && mon == o.mon; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return k.mon.hash() ^ (static_cast<size_t>(k.comp) * 0x9e3779b97f4a7c15ULL);
    }
  };

  int degree_ = 0;
  std::vector<std::pair<int, Monomial>> elems_;
  std::unordered_map<Key, int, KeyHash> index_;
};

// Coordinate matrix of the degree-d piece of m, mapping source coordinates to
// target coordinates.
MatFq piece_matrix(const GradedMatrix& m, const PieceBasis& source_basis,
                   const PieceBasis& target_basis);

// Coordinates of a homogeneous column vector (length = module rank) in a
// piece basis; throws if some coefficient falls outside the piece.
FqVec polys_to_coords(const RingPtr& ring, const std::vector<Poly>& v, const PieceBasis& basis);
std::vector<Poly> coords_to_polys(const RingPtr& ring, const FqVec& coords,
                                  const PieceBasis& basis, int rank);

}  // namespace fmodlen

#endif  // FMODLEN_GRADED_HPP_
