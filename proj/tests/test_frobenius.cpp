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

#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

#include "fmodlen/frobenius.hpp"

using namespace fmodlen;

namespace {

Ideal parse_ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Poly> polys;
  for (const auto& s : gens) polys.push_back(parse_poly(r, s));
  return Ideal(r, polys);
}

FqElem eval_poly(const Poly& f, const std::vector<FqElem>& point) {
  const FqPtr& fq = f.ring()->field();
  FqElem acc = fq->zero();
  for (const Term& t : f.terms()) {
    FqElem v = t.coef;
    for (int i = 0; i < f.ring()->nvars(); ++i)
      v = fq->mul(v, fq->pow(point[static_cast<size_t>(i)],
                             static_cast<uint64_t>(t.mon.exponent(i))));
    acc = fq->add(acc, v);
  }
  return acc;
}

// Number of F_p-rational points of the plane projective curve f = 0.
int count_projective_points(const Poly& f) {
  const FqPtr& fq = f.ring()->field();
  uint32_t p = fq->p();
  REQUIRE(fq->e() == 1);
  REQUIRE(f.ring()->nvars() == 3);
  int count = 0;
  auto zero_at = [&](uint32_t x, uint32_t y, uint32_t z) {
    std::vector<FqElem> pt = {FqElem{x}, FqElem{y}, FqElem{z}};
    return fq->is_zero(eval_poly(f, pt));
  };
  for (uint32_t x = 0; x < p; ++x)
    for (uint32_t y = 0; y < p; ++y)
      if (zero_at(x, y, 1)) ++count;
  for (uint32_t x = 0; x < p; ++x)
    if (zero_at(x, 1, 0)) ++count;
  if (zero_at(1, 0, 0)) ++count;
  return count;
}

}  // namespace

TEST_CASE("pullback squares entries and doubles twists in characteristic 2") {
  RingPtr r = PolyRing::make(Fq::make(2, 1), {"x", "y", "z"});
  Ideal m = parse_ideal(r, {"x", "y", "z"});
  FreeResolution res = free_resolution(m, 3);
  GradedMatrix d1 = res.diff(1);
  GradedMatrix f1 = frobenius_pullback(d1);
  CHECK(f1.target().twists == d1.target().twists);  // all zero
  CHECK(f1.source().twists == std::vector<int>{2, 2, 2});
  for (int j = 0; j < 3; ++j) {
    Poly x = d1.entry(0, j);
    CHECK(f1.entry(0, j) == x * x);
  }
  // Pullback of the whole chain is the Koszul complex on the squares.
  GradedMatrix d2 = frobenius_pullback(res.diff(2));
  CHECK(f1.compose(d2).is_zero());

  // Iterate composition: pulling back twice equals iterate 2.
  CHECK(frobenius_pullback(f1) == frobenius_pullback(d1, 2));
  CHECK(frobenius_pullback(res.diff(2), 2) ==
        frobenius_pullback(frobenius_pullback(res.diff(2))));
}

TEST_CASE("pullback respects composition and coefficient frobenius") {
  RingPtr r = PolyRing::make(Fq::make(2, 2), {"x", "y"});
  FqElem g = r->field()->gen();
  GradedMatrix a(r, GradedFreeModule{{0}}, GradedFreeModule{{1, 1}});
  a.set_entry(0, 0, Poly::term(r, Monomial::variable(2, 0), g));
  a.set_entry(0, 1, Poly::term(r, Monomial::variable(2, 1), r->field()->one()));
  GradedMatrix s = syzygies(a);
  CHECK(frobenius_pullback(a).compose(frobenius_pullback(s)) ==
        frobenius_pullback(a.compose(s)));
  // Coefficients pass through Frobenius: gen squares.
  CHECK(frobenius_pullback(a).entry(0, 0).leading_term().coef == r->field()->mul(g, g));
}

TEST_CASE("frobenius lift of the Koszul resolution is diagonal") {
  for (int p : {2, 3}) {
    RingPtr r = PolyRing::make(Fq::make(static_cast<uint32_t>(p), 1), {"x", "y"});
    FreeResolution res = free_resolution(parse_ideal(r, {"x", "y"}), 2);
    std::vector<GradedMatrix> u = lift_frobenius(res, 2);
    REQUIRE(u.size() == 3);
    CHECK(u[0] == GradedMatrix::identity(r, res.f0));
    // u_1 divides x^p by x and y^p by y.
    Poly xp1 = parse_poly(r, "x^" + std::to_string(p - 1));
    Poly yp1 = parse_poly(r, "y^" + std::to_string(p - 1));
    CHECK(u[1].entry(0, 0) == xp1);
    CHECK(u[1].entry(1, 1) == yp1);
    CHECK(u[1].entry(0, 1).is_zero());
    CHECK(u[1].entry(1, 0).is_zero());
    // Commuting squares at every level.
    for (int l = 1; l <= 2; ++l)
      CHECK(res.diff(l).compose(u[static_cast<size_t>(l)]) ==
            u[static_cast<size_t>(l - 1)].compose(frobenius_pullback(res.diff(l))));
  }
}

TEST_CASE("frobenius lift commutes on the twisted cubic at all levels") {
  RingPtr r = PolyRing::make(Fq::make(5, 1), {"x", "y", "z", "w"});
  Ideal i = parse_ideal(r, {"x*z + 4*y^2", "x*w + 4*y*z", "y*w + 4*z^2"});
  FreeResolution res = free_resolution(i, 4);
  REQUIRE(res.complete);
  for (int iterate : {1, 2}) {
    std::vector<GradedMatrix> u = lift_frobenius(res, res.length(), iterate);
    REQUIRE(u.size() == static_cast<size_t>(res.length()) + 1);
    for (int l = 1; l <= res.length(); ++l) {
      CAPTURE(iterate);
      CAPTURE(l);
      CHECK(res.diff(l).compose(u[static_cast<size_t>(l)]) ==
            u[static_cast<size_t>(l - 1)].compose(frobenius_pullback(res.diff(l), iterate)));
    }
  }
}

TEST_CASE("frobenius lift requires an untwisted augmentation") {
  RingPtr r = PolyRing::make(Fq::make(3, 1), {"x", "y"});
  GradedMatrix d1(r, GradedFreeModule{{1}}, GradedFreeModule{{2}});
  d1.set_entry(0, 0, parse_poly(r, "x"));
  FreeResolution res = resolve_presentation(d1, 2);
  CHECK_THROWS_WITH_AS(lift_frobenius(res, 1),
                       "Frobenius lift needs F_0 generated in degree zero",
                       std::invalid_argument);
}

TEST_CASE("hasse-witt entries of the four reference cubics") {
  // Over F_5 the x*z^2 cubic is ordinary and the z^3 cubic supersingular;
  // over F_7 the roles swap.
  struct Case {
    uint32_t p;
    std::string f;
    int hw;
    int points;
  };
  std::vector<Case> cases = {
      {5, "y^2*z + 4*x^3 + 4*x*z^2", 2, 4},
      {5, "y^2*z + 4*x^3 + 4*z^3", 0, 6},
      {7, "y^2*z + 6*x^3 + 6*z^3", 3, 12},
      {7, "y^2*z + 6*x^3 + 6*x*z^2", 0, 8},
  };
  for (const Case& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.f);
    RingPtr r = PolyRing::make(Fq::make(c.p, 1), {"x", "y", "z"});
    Poly f = parse_poly(r, c.f);
    MatFq hw = hasse_witt_matrix(f);
    REQUIRE(hw.rows() == 1);
    REQUIRE(hw.cols() == 1);
    CHECK(hw.at(0, 0) == r->field()->from_int(c.hw));

    // Independent oracle: the trace of Frobenius mod p via point counting.
    int n = count_projective_points(f);
    CHECK(n == c.points);
    int64_t ap = static_cast<int64_t>(c.p) + 1 - n;
    CHECK(hw.at(0, 0) == r->field()->from_int(ap));

    // Ordinary iff the entry is a unit; stable rank matches.
    SemilinearOp op = hasse_witt_operator(f);
    CHECK(op.twist == -1);
    CHECK(stable_dim(op) == (c.hw != 0 ? 1 : 0));
  }
}

TEST_CASE("cartier matrix on a hypersurface equals the hasse-witt matrix") {
  struct Case {
    uint32_t p;
    std::vector<std::string> vars;
    std::string f;
  };
  std::vector<Case> cases = {
      {5, {"x", "y", "z"}, "y^2*z + 4*x^3 + 4*x*z^2"},
      {7, {"x", "y", "z"}, "y^2*z + 6*x^3 + 6*z^3"},
      {3, {"x", "y", "z"}, "x^4 + y^4 + z^4 + x^2*y^2 + y^2*z^2"},
      {2, {"x", "y", "z"}, "x^5 + y^5 + z^5 + x^2*y^2*z + x*y*z^3"},
      {2, {"x", "y", "z", "w"}, "x^4 + y^4 + z^4 + w^4 + x*y*z*w"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.f);
    RingPtr r = PolyRing::make(Fq::make(c.p, 1), c.vars);
    Poly f = parse_poly(r, c.f);
    Ideal i(r, {f});
    SemilinearOp op = cartier_operator(i, 1);
    MatFq hw = hasse_witt_matrix(f);
    CHECK(op.a == hw);
  }
}

TEST_CASE("low-degree hypersurfaces have an empty critical piece") {
  RingPtr r = PolyRing::make(Fq::make(5, 1), {"x", "y", "z"});
  Poly f = parse_poly(r, "x");
  CHECK(hasse_witt_matrix(f).rows() == 0);
  SemilinearOp op = cartier_operator(Ideal(r, {f}), 1);
  CHECK(op.dim() == 0);
  CHECK(stable_dim(op) == 0);

  RingPtr r4 = PolyRing::make(Fq::make(3, 1), {"x", "y", "z", "w"});
  Poly q = parse_poly(r4, "x*y + 2*z*w");
  CHECK(hasse_witt_matrix(q).rows() == 0);
}

TEST_CASE("iterated cartier equals the semilinear power") {
  // Over F_4 the inverse-Frobenius twist matters: B_2 = B * B^[1/p].
  RingPtr r = PolyRing::make(Fq::make(2, 2), {"x", "y", "z"});
  std::string gen_name = "x^3 + y^3 + z^3";  // Fermat cubic, monic
  Poly f = parse_poly(r, gen_name);
  Ideal i(r, {f});
  FreeResolution res = free_resolution(i, 2);
  REQUIRE(res.complete);
  ExtPiece piece(res, 1, -3);
  REQUIRE(piece.dim() == 1);

  std::vector<GradedMatrix> u1 = lift_frobenius(res, 1, 1);
  std::vector<GradedMatrix> u2 = lift_frobenius(res, 1, 2);
  MatFq b1 = cartier_matrix(piece, u1[1], 1);
  MatFq b2 = cartier_matrix(piece, u2[1], 2);
  SemilinearOp op = SemilinearOp::make(r->field(), b1, -1);
  CHECK(b2 == semilinear_power(op, 2));

  // Same identity over a prime field, where it reduces to B^2.
  RingPtr r5 = PolyRing::make(Fq::make(5, 1), {"x", "y", "z"});
  Poly f5 = parse_poly(r5, "y^2*z + 4*x^3 + 4*x*z^2");
  FreeResolution res5 = free_resolution(Ideal(r5, {f5}), 2);
  ExtPiece piece5(res5, 1, -3);
  MatFq c1 = cartier_matrix(piece5, lift_frobenius(res5, 1, 1)[1], 1);
  MatFq c2 = cartier_matrix(piece5, lift_frobenius(res5, 1, 2)[1], 2);
  CHECK(c2 == c1.multiply(c1));
}

TEST_CASE("cartier apply matches matrix columns and ignores coboundaries") {
  RingPtr r = PolyRing::make(Fq::make(2, 1), {"x", "y"});
  Ideal i = parse_ideal(r, {"x^3", "y^3"});
  FreeResolution res = free_resolution(i, 2);
  REQUIRE(res.complete);
  ExtPiece piece(res, 2, -2);
  REQUIRE(piece.dim() == 1);
  CHECK(piece.basis().dim() == 5);

  std::vector<GradedMatrix> u = lift_frobenius(res, 2);
  MatFq b = cartier_matrix(piece, u[2]);

  // Column consistency.
  FqVec rep = piece.representatives()[0];
  FqVec image = cartier_apply(piece, u[2], rep);
  REQUIRE(image.size() == 1);
  CHECK(image[0] == b.at(0, 0));

  // Coboundaries at this degree form a 4-dimensional space; adding any of
  // them to the representative must not change the induced map.
  GradedMatrix delta1 = dual_delta(res, 1);
  PieceBasis below = PieceBasis::make(r, res.module(1).dual(), -2);
  MatFq cob = piece_matrix(delta1, below, piece.basis());
  MatFq cob_basis = cob.column_space_echelon();
  CHECK(cob_basis.cols() == 4);
  const FqPtr& f2 = r->field();
  for (int j = 0; j < cob_basis.cols(); ++j) {
    FqVec moved = rep;
    for (int k = 0; k < cob_basis.rows(); ++k)
      moved[static_cast<size_t>(k)] = f2->add(moved[static_cast<size_t>(k)], cob_basis.at(k, j));
    CHECK(piece.is_cocycle(moved));
    CHECK(piece.homology_coords(moved) == piece.homology_coords(rep));
    CHECK(cartier_apply(piece, u[2], moved) == image);
  }
}
