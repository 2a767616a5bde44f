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

#include "fmodlen/graded.hpp"

#include <stdexcept>

namespace fmodlen {

GradedMatrix::GradedMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)) {
  e_.assign(static_cast<size_t>(target_.rank()) * static_cast<size_t>(source_.rank()),
            Poly::zero(ring_));
}

GradedMatrix GradedMatrix::identity(const RingPtr& ring, const GradedFreeModule& m) {
  GradedMatrix out(ring, m, m);
  for (int i = 0; i < m.rank(); ++i)
    out.set_entry(i, i, Poly::constant(ring, ring->field()->one()));
  return out;
}

void GradedMatrix::set_entry(int i, int j, Poly f) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw std::out_of_range("graded matrix index");
  if (!f.is_zero()) {
    int want = source_.twists[static_cast<size_t>(j)] - target_.twists[static_cast<size_t>(i)];
    if (f.degree() != want)
      throw std::invalid_argument("entry degree violates the grading: got " +
                                  std::to_string(f.degree()) + ", want " + std::to_string(want));
  }
  e_[static_cast<size_t>(i) * cols() + j] = std::move(f);
}

std::vector<Poly> GradedMatrix::column(int j) const {
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(rows()));
  for (int i = 0; i < rows(); ++i) out.push_back(entry(i, j));
  return out;
}

bool GradedMatrix::is_zero() const {
  for (const auto& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& rhs) const {
  if (!(source_ == rhs.target_))
    throw std::invalid_argument("graded matrix composition mismatch");
  GradedMatrix out(ring_, target_, rhs.source_);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < rhs.cols(); ++j) {
      Poly acc = Poly::zero(ring_);
      for (int k = 0; k < cols(); ++k) {
        const Poly& a = entry(i, k);
        const Poly& b = rhs.entry(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc + a * b;
      }
      out.set_entry(i, j, std::move(acc));
    }
  }
  return out;
}

GradedMatrix GradedMatrix::transpose_dual() const {
  GradedMatrix out(ring_, source_.dual(), target_.dual());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out.set_entry(j, i, entry(i, j));
  return out;
}

PieceBasis PieceBasis::make(const RingPtr& ring, const GradedFreeModule& m, int degree) {
  PieceBasis b;
  b.degree_ = degree;
  for (int t = 0; t < m.rank(); ++t) {
    for (const auto& mon : ring->monomials_of_degree(degree - m.twists[static_cast<size_t>(t)])) {
      b.index_.emplace(Key{t, mon}, static_cast<int>(b.elems_.size()));
      b.elems_.emplace_back(t, mon);
    }
  }
  return b;
}

int PieceBasis::index_of(int comp, const Monomial& mon) const {
  auto it = index_.find(Key{comp, mon});
  return it == index_.end() ? -1 : it->second;
}

MatFq piece_matrix(const GradedMatrix& m, const PieceBasis& source_basis,
                   const PieceBasis& target_basis) {
  MatFq out(m.ring()->field(), target_basis.dim(), source_basis.dim());
  for (int k = 0; k < source_basis.dim(); ++k) {
    const auto& [j, mon] = source_basis.at(k);
    for (int i = 0; i < m.rows(); ++i) {
      const Poly& f = m.entry(i, j);
      if (f.is_zero()) continue;
      Poly g = f.times_term(mon, m.ring()->field()->one());
      for (const auto& t : g.terms()) {
        int row = target_basis.index_of(i, t.mon);
        if (row < 0) throw std::logic_error("piece image misses the target basis");
        out.set(row, k, m.ring()->field()->add(out.at(row, k), t.coef));
      }
    }
  }
  return out;
}

FqVec polys_to_coords(const RingPtr& ring, const std::vector<Poly>& v, const PieceBasis& basis) {
  FqVec out(static_cast<size_t>(basis.dim()), ring->field()->zero());
  for (size_t comp = 0; comp < v.size(); ++comp) {
    for (const auto& t : v[comp].terms()) {
      int k = basis.index_of(static_cast<int>(comp), t.mon);
      if (k < 0) throw std::invalid_argument("vector does not lie in the graded piece");
      out[static_cast<size_t>(k)] = ring->field()->add(out[static_cast<size_t>(k)], t.coef);
    }
  }
  return out;
}

std::vector<Poly> coords_to_polys(const RingPtr& ring, const FqVec& coords,
                                  const PieceBasis& basis, int rank) {
  if (static_cast<int>(coords.size()) != basis.dim())
    throw std::invalid_argument("coordinate length mismatch");
  std::vector<std::vector<Term>> terms(static_cast<size_t>(rank));
  for (int k = 0; k < basis.dim(); ++k) {
    if (ring->field()->is_zero(coords[static_cast<size_t>(k)])) continue;
    const auto& [comp, mon] = basis.at(k);
    terms[static_cast<size_t>(comp)].push_back(Term{mon, coords[static_cast<size_t>(k)]});
  }
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(rank));
  for (auto& ts : terms) out.push_back(Poly::from_terms(ring, std::move(ts)));
  return out;
}

}  // namespace fmodlen
