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

#ifndef FMODLEN_GROEBNER_HPP_
#define FMODLEN_GROEBNER_HPP_

#include <memory>
#include <vector>

#include "fmodlen/budget.hpp"
#include "fmodlen/graded.hpp"
#include "fmodlen/poly.hpp"

namespace fmodlen {

// Reduced Groebner basis: monic elements, every term of each element
// irreducible by the leading terms of the others, sorted ascending by leading
// monomial. Unique for a given ideal and order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> elements;
};

// Buchberger with the normal pair-selection strategy (least lcm degree, ties
// by index) and the product and chain criteria.
GroebnerBasis reduced_groebner(const RingPtr& ring, const std::vector<Poly>& gens,
                               const Budget* budget = nullptr);

// Unique normal form with respect to a Groebner basis; remainder of division.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// Full certificate audit: every S-polynomial reduces to zero, no criteria
// applied. Quadratic in the basis size; meant for verify mode and tests.
bool groebner_certificate(const GroebnerBasis& gb);

namespace detail {
class ModuleBasisImpl;
}

// Groebner data for the column module of a graded matrix, with tracked
// representations. Built once, then reused for membership tests, division
// with quotients, and the syzygy matrix.
//
// Internally this runs Buchberger over F + R^k where F is the target module
// and the R^k part tracks how each element writes in the original columns
// (block order with F >> tracker, TOP within a block). Elements of the
// reduced basis with no F part are exactly a reduced Groebner basis of the
// syzygy module.
class ColumnBasis {
 public:
  explicit ColumnBasis(const GradedMatrix& m, const Budget* budget = nullptr);
  ~ColumnBasis();
  ColumnBasis(ColumnBasis&&) noexcept;
  ColumnBasis& operator=(ColumnBasis&&) noexcept;

  const GradedMatrix& matrix() const;

  struct Division {
    std::vector<Poly> remainder;  // normal form of v modulo the column module
    std::vector<Poly> quotient;   // v = remainder + sum_t quotient[t] * column t
  };
  // v must have length matrix().target().rank() and be homogeneous per
  // component (degree of v[i] + target twist i constant where nonzero).
  Division divide(const std::vector<Poly>& v) const;
  bool contains(const std::vector<Poly>& v) const;

  // Reduced Groebner basis of ker(matrix), as a graded matrix into source.
  const GradedMatrix& syzygy_matrix() const;

 private:
  std::unique_ptr<detail::ModuleBasisImpl> impl_;
};

// Generators of the syzygy module of m: a graded matrix s with target
// m.source() such that m.compose(s) == 0 and the columns of s generate all
// relations among the columns of m.
GradedMatrix syzygies(const GradedMatrix& m, const Budget* budget = nullptr);

}  // namespace fmodlen

#endif  // FMODLEN_GROEBNER_HPP_
