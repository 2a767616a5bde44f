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

#include "fmodlen/frobenius.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace fmodlen {

namespace {

int pow_int(uint32_t p, int k) {
  long long v = 1;
  for (int s = 0; s < k; ++s) {
    v *= p;
    if (v > (1 << 20)) throw std::overflow_error("Frobenius iterate too large");
  }
  return static_cast<int>(v);
}

FqElem frob_root(const Fq& fq, FqElem c, int k) {
  for (int s = 0; s < k; ++s) c = fq.frob(c, -1);
  return c;
}

// The x^((pk-1)(1,..,1)) component of w in the decomposition of the pullback:
// keep terms with every exponent congruent to pk-1, shift down, divide by pk,
// take pk-th roots of coefficients.
Poly extract_cartier_component(const Poly& z, const Poly& u, int pk, int k) {
  const RingPtr& ring = z.ring();
  const Fq& fq = *ring->field();
  int nv = ring->nvars();

  std::unordered_map<Monomial, std::vector<const Term*>, MonomialHash> by_residue;
  for (const Term& t : z.terms())
    by_residue[t.mon.pth_remainder(pk)].push_back(&t);

  Monomial all = Monomial::one(nv);
  for (int i = 0; i < nv; ++i) all.set_exponent(i, pk - 1);

  std::unordered_map<Monomial, FqElem, MonomialHash> acc;
  for (const Term& tu : u.terms()) {
    Monomial need = tu.mon.pth_remainder(pk);
    for (int i = 0; i < nv; ++i) need.set_exponent(i, pk - 1 - need.exponent(i));
    auto it = by_residue.find(need);
    if (it == by_residue.end()) continue;
    for (const Term* tz : it->second) {
      Monomial g = tz->mon.times(tu.mon).divided_by(all).pth_quotient(pk);
      FqElem c = frob_root(fq, fq.mul(tz->coef, tu.coef), k);
      auto [slot, fresh] = acc.emplace(g, c);
      if (!fresh) slot->second = fq.add(slot->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [mon, c] : acc)
    if (!fq.is_zero(c)) terms.push_back(Term{mon, c});
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace

GradedMatrix frobenius_pullback(const GradedMatrix& m, int iterate) {
  if (iterate < 0) throw std::invalid_argument("pullback iterate must be >= 0");
  int pk = pow_int(m.ring()->field()->p(), iterate);
  GradedFreeModule target = m.target(), source = m.source();
  for (auto& a : target.twists) a *= pk;
  for (auto& a : source.twists) a *= pk;
  GradedMatrix out(m.ring(), target, source);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& f = m.entry(i, j);
      if (!f.is_zero()) out.set_entry(i, j, f.frobenius_power(iterate));
    }
  return out;
}

std::vector<GradedMatrix> lift_frobenius(const FreeResolution& res, int levels,
                                         int iterate, const Budget* budget) {
  if (levels < 0) throw std::invalid_argument("lift level must be >= 0");
  if (iterate < 1) throw std::invalid_argument("lift iterate must be >= 1");
  for (int a : res.f0.twists)
    if (a != 0)
      throw std::invalid_argument("Frobenius lift needs F_0 generated in degree zero");
  const RingPtr& ring = res.ring;

  std::vector<GradedMatrix> maps;
  maps.reserve(static_cast<size_t>(levels) + 1);
  GradedMatrix u0 = GradedMatrix::identity(ring, res.f0);
  maps.push_back(std::move(u0));
  for (int l = 1; l <= levels; ++l) {
    if (budget) budget->check("Frobenius lift");
    GradedMatrix dl = res.diff(l);
    GradedMatrix fd = frobenius_pullback(dl, 1);
    GradedMatrix rhs = maps.back().compose(fd);
    ColumnBasis cb(dl, budget);
    GradedMatrix ul(ring, dl.source(), fd.source());
    for (int t = 0; t < rhs.cols(); ++t) {
      auto div = cb.divide(rhs.column(t));
      for (const auto& r : div.remainder)
        if (!r.is_zero())
          throw std::logic_error("Frobenius lift column misses the image");
      for (int s = 0; s < ul.rows(); ++s)
        if (!div.quotient[static_cast<size_t>(s)].is_zero())
          ul.set_entry(s, t, div.quotient[static_cast<size_t>(s)]);
    }
    maps.push_back(std::move(ul));
  }
  if (iterate > 1) {
    std::vector<GradedMatrix> cur = maps;
    for (int step = 2; step <= iterate; ++step)
      for (int l = 0; l <= levels; ++l)
        cur[static_cast<size_t>(l)] =
            maps[static_cast<size_t>(l)].compose(
                frobenius_pullback(cur[static_cast<size_t>(l)], 1));
    return cur;
  }
  return maps;
}

FqVec cartier_apply(const ExtPiece& piece, const GradedMatrix& u, const FqVec& coords,
                    int iterate) {
  const RingPtr& ring = u.ring();
  int nv = ring->nvars();
  if (piece.degree() != -nv)
    throw std::invalid_argument("Cartier operator lives on the degree -nvars piece");
  int pk = pow_int(ring->field()->p(), iterate);
  int rank = u.rows();
  std::vector<Poly> z = coords_to_polys(ring, coords, piece.basis(), rank);
  std::vector<Poly> v;
  v.reserve(static_cast<size_t>(u.cols()));
  for (int t = 0; t < u.cols(); ++t) {
    Poly w = Poly::zero(ring);
    for (int s = 0; s < rank; ++s) {
      const Poly& us = u.entry(s, t);
      if (us.is_zero() || z[static_cast<size_t>(s)].is_zero()) continue;
      w = w + extract_cartier_component(z[static_cast<size_t>(s)], us, pk, iterate);
    }
    v.push_back(std::move(w));
  }
  return piece.homology_coords(polys_to_coords(ring, v, piece.basis()));
}

MatFq cartier_matrix(const ExtPiece& piece, const GradedMatrix& u, int iterate) {
  int m = piece.dim();
  MatFq b(u.ring()->field(), m, m);
  for (int j = 0; j < m; ++j) {
    FqVec col =
        cartier_apply(piece, u, piece.representatives()[static_cast<size_t>(j)], iterate);
    for (int i = 0; i < m; ++i) b.set(i, j, col[static_cast<size_t>(i)]);
  }
  return b;
}

SemilinearOp cartier_operator(const Ideal& ideal, int i, const Budget* budget) {
  const RingPtr& ring = ideal.ring();
  int nv = ring->nvars();
  if (i < 0 || i > nv)
    throw std::out_of_range("homological index out of range [0, " + std::to_string(nv) + "]");
  FreeResolution res = free_resolution(ideal, i + 1, /*prune=*/true, budget);
  ExtPiece piece(res, i, -nv);
  std::vector<GradedMatrix> lift = lift_frobenius(res, i, 1, budget);
  MatFq b = cartier_matrix(piece, lift[static_cast<size_t>(i)], 1);
  return SemilinearOp::make(ring->field(), std::move(b), -1);
}

MatFq hasse_witt_matrix(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("hypersurface polynomial is zero");
  const RingPtr& ring = f.ring();
  const Fq& fq = *ring->field();
  int nv = ring->nvars();
  int d = f.degree() - nv;
  if (d < 0) return MatFq(ring->field(), 0, 0);
  std::vector<Monomial> mons = ring->monomials_of_degree(d);
  int m = static_cast<int>(mons.size());
  int p = static_cast<int>(fq.p());
  Poly g = f.pow(static_cast<uint32_t>(p - 1));
  Monomial all = Monomial::one(nv);
  for (int i = 0; i < nv; ++i) all.set_exponent(i, p - 1);

  MatFq b(ring->field(), m, m);
  for (int v = 0; v < m; ++v) {
    Monomial top = mons[static_cast<size_t>(v)].scaled(p).times(all);
    for (int u = 0; u < m; ++u) {
      if (!mons[static_cast<size_t>(u)].divides(top)) continue;
      FqElem c = g.coefficient(top.divided_by(mons[static_cast<size_t>(u)]));
      if (!fq.is_zero(c)) b.set(v, u, fq.frob(c, -1));
    }
  }
  return b;
}

SemilinearOp hasse_witt_operator(const Poly& f) {
  return SemilinearOp::make(f.ring()->field(), hasse_witt_matrix(f), -1);
}

}  // namespace fmodlen
