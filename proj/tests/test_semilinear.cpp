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
#include <set>
#include <vector>

#include "doctest.h"

#include "fmodlen/semilinear.hpp"

using namespace fmodlen;

namespace {

MatFq from_ints(const FqPtr& f, int n, const std::vector<int>& v) {
  MatFq m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, f->from_int(v[static_cast<size_t>(i * n + j)]));
  return m;
}

// Every matrix over F_q of the given dimension, entries enumerated by value.
// Only usable for tiny q^(n^2).
std::vector<MatFq> all_matrices(const FqPtr& f, int n) {
  uint64_t q = f->q();
  uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= q;
  std::vector<MatFq> out;
  out.reserve(static_cast<size_t>(total));
  for (uint64_t code = 0; code < total; ++code) {
    MatFq m(f, n, n);
    uint64_t c = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.set(i, j, FqElem{static_cast<uint32_t>(c % q)});
        c /= q;
      }
    out.push_back(std::move(m));
  }
  return out;
}

// Oracle: iterate v -> phi(v) on every vector and take the set union of the
// r-fold images until it stops shrinking; stable dim = log_q of the final
// image size. Exponential, for cross-checking only.
int stable_dim_by_enumeration(const SemilinearOp& op) {
  const FqPtr& f = op.field;
  uint64_t q = f->q();
  int n = op.dim();
  uint64_t total = 1;
  for (int k = 0; k < n; ++k) total *= q;

  auto encode = [&](const FqVec& v) {
    uint64_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * q + v[static_cast<size_t>(i)].v;
    return code;
  };
  auto decode = [&](uint64_t code) {
    FqVec v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      v[static_cast<size_t>(i)] = FqElem{static_cast<uint32_t>(code % q)};
      code /= q;
    }
    return v;
  };

  std::set<uint64_t> image;
  for (uint64_t code = 0; code < total; ++code) image.insert(code);
  while (true) {
    std::set<uint64_t> next;
    for (uint64_t code : image) next.insert(encode(op.apply(decode(code))));
    if (next == image) break;
    image.swap(next);
  }
  int dim = 0;
  uint64_t size = image.size();
  while (size > 1) {
    size /= q;
    ++dim;
  }
  return dim;
}

// Oracle for fixed points over the degree-r extension: enumerate all vectors.
int fixed_dim_by_enumeration(const SemilinearOp& op, uint32_t r) {
  FqPtr big;
  FieldExtension up = extend_field(op.field, r);
  big = up.ext;
  uint64_t q = big->q();
  int n = op.dim();
  uint64_t total = 1;
  for (int k = 0; k < n; ++k) total *= q;

  MatFq a_big(big, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a_big.set(i, j, up.map(op.a.at(i, j)));
  SemilinearOp big_op = SemilinearOp::make(big, a_big, op.twist);

  uint64_t count = 0;
  for (uint64_t code = 0; code < total; ++code) {
    FqVec v(static_cast<size_t>(n));
    uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[static_cast<size_t>(i)] = FqElem{static_cast<uint32_t>(c % q)};
      c /= q;
    }
    FqVec w = big_op.apply(v);
    if (w == v) ++count;
  }
  // Fixed points form an F_p-space; count = p^dim.
  int dim = 0;
  uint64_t p = op.field->p();
  while (count > 1) {
    count /= p;
    ++dim;
  }
  return dim;
}

}  // namespace

TEST_CASE("stable part of small explicit operators") {
  FqPtr f2 = Fq::make(2, 1);
  SemilinearOp nil = SemilinearOp::make(f2, from_ints(f2, 2, {0, 1, 0, 0}), 1);
  CHECK(stable_dim(nil) == 0);
  StablePart sp = stable_part(nil);
  CHECK(sp.dim == 0);
  CHECK(sp.index <= 2);
  CHECK(sp.basis.cols() == 0);

  SemilinearOp proj = SemilinearOp::make(f2, from_ints(f2, 2, {1, 0, 0, 0}), 1);
  CHECK(stable_dim(proj) == 1);
  CHECK(stable_part(proj).index == 1);

  SemilinearOp id = SemilinearOp::make(f2, MatFq::identity(f2, 3), 1);
  CHECK(stable_dim(id) == 3);
  CHECK(stable_part(id).index == 0);
}

TEST_CASE("semilinear power composes with a frobenius shift") {
  FqPtr f = Fq::make(2, 2);
  FqElem g = f->gen();
  MatFq a(f, 2, 2);
  a.set(0, 0, g);
  a.set(0, 1, f->one());
  a.set(1, 0, f->zero());
  a.set(1, 1, f->mul(g, g));
  for (int twist : {1, -1}) {
    SemilinearOp op = SemilinearOp::make(f, a, twist);
    CHECK(semilinear_power(op, 0) == MatFq::identity(f, 2));
    CHECK(semilinear_power(op, 1) == a);
    // phi^r as a matrix agrees with iterated application on basis vectors.
    for (int r = 2; r <= 4; ++r) {
      MatFq pr = semilinear_power(op, r);
      for (int j = 0; j < 2; ++j) {
        FqVec e(2, f->zero());
        e[static_cast<size_t>(j)] = f->one();
        FqVec v = e;
        for (int k = 0; k < r; ++k) v = op.apply(v);
        for (int i = 0; i < 2; ++i) CHECK(pr.at(i, j) == v[static_cast<size_t>(i)]);
      }
    }
  }
}

TEST_CASE("stable dimension matches set-image enumeration exhaustively") {
  // dim 2 over F_3 and F_4, dim 3 over F_2: every matrix.
  for (auto [p, e, n] : std::vector<std::tuple<int, int, int>>{{3, 1, 2}, {2, 2, 2}, {2, 1, 3}}) {
    FqPtr f = Fq::make(p, e);
    for (int twist : {1, -1}) {
      for (const MatFq& a : all_matrices(f, n)) {
        SemilinearOp op = SemilinearOp::make(f, a, twist);
        int fast = stable_dim(op);
        int slow = stable_dim_by_enumeration(op);
        CAPTURE(p);
        CAPTURE(e);
        CAPTURE(n);
        CAPTURE(twist);
        REQUIRE(fast == slow);
      }
    }
  }
}

TEST_CASE("fixed points of multiplication by 2 on F_3") {
  FqPtr f = Fq::make(3, 1);
  SemilinearOp op = SemilinearOp::make(f, from_ints(f, 1, {2}), 1);
  // phi(x) = 2x^3 on F_{3^r}: solutions of 2x^3 = x.
  CHECK(fixed_dim(op, 1) == 0);
  CHECK(fixed_dim(op, 2) == 1);
  CHECK(fixed_dim(op, 3) == 0);
  CHECK(stable_dim(op) == 1);
}

TEST_CASE("multiplication by a generator of F_4 is ordinary") {
  FqPtr f = Fq::make(2, 2);
  MatFq a(f, 1, 1);
  a.set(0, 0, f->gen());
  SemilinearOp op = SemilinearOp::make(f, a, 1);
  CHECK(stable_dim(op) == 1);
  CHECK(fixed_dim(op, 1) == 1);
}

TEST_CASE("fixed dimensions match enumeration and are divisor-monotone") {
  for (auto [p, e, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 1}, {2, 2, 1}}) {
    FqPtr f = Fq::make(p, e);
    for (const MatFq& a : all_matrices(f, n)) {
      SemilinearOp op = SemilinearOp::make(f, a, 1);
      int sd = stable_dim(op);
      std::vector<int> fd(7, 0);
      for (uint32_t r = 1; r <= 3; ++r) {
        fd[r] = fixed_dim(op, r);
        CAPTURE(r);
        // Enumeration stays cheap only for tiny q^(rn).
        if (static_cast<uint64_t>(r) * static_cast<uint64_t>(e) * n <= 8)
          REQUIRE(fd[r] == fixed_dim_by_enumeration(op, r));
        CHECK(fd[r] <= sd * static_cast<int>(r) * e);
      }
      // Monotone along divisor chains: fixed points over F_{q^r} embed in
      // F_{q^(rk)}.
      fd[4] = fixed_dim(op, 4);
      fd[6] = fixed_dim(op, 6);
      CHECK(fd[1] <= fd[2]);
      CHECK(fd[2] <= fd[4]);
      CHECK(fd[1] <= fd[3]);
      CHECK(fd[2] <= fd[6]);
      CHECK(fd[3] <= fd[6]);
    }
  }
}

TEST_CASE("fixed points are rejected for inverse twists") {
  FqPtr f = Fq::make(3, 1);
  SemilinearOp op = SemilinearOp::make(f, MatFq::identity(f, 1), -1);
  CHECK_THROWS_WITH_AS(fixed_dim(op, 1), "fixed points defined for p-semilinear only",
                       std::invalid_argument);
}

TEST_CASE("make validates shape and twist") {
  FqPtr f = Fq::make(3, 1);
  MatFq rect(f, 1, 2);
  CHECK_THROWS_AS(SemilinearOp::make(f, rect, 1), std::invalid_argument);
  CHECK_THROWS_AS(SemilinearOp::make(f, MatFq::identity(f, 1), 2), std::invalid_argument);
}

TEST_CASE("dual operator preserves the stable dimension") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    FqPtr f = Fq::make(p, e);
    for (const MatFq& a : all_matrices(f, 2)) {
      for (int twist : {1, -1}) {
        SemilinearOp op = SemilinearOp::make(f, a, twist);
        SemilinearOp dual = dual_op(op);
        CHECK(dual.twist == -twist);
        CHECK(stable_dim(op) == stable_dim(dual));
      }
    }
  }
}

TEST_CASE("operator restricted to its stable part is bijective") {
  FqPtr f = Fq::make(3, 1);
  for (const MatFq& a : all_matrices(f, 2)) {
    SemilinearOp op = SemilinearOp::make(f, a, 1);
    StablePart sp = stable_part(op);
    if (sp.dim == 0) continue;
    // phi maps the stable basis onto a spanning set of the same space.
    MatFq image(f, op.dim(), sp.dim);
    for (int j = 0; j < sp.dim; ++j) {
      FqVec col(static_cast<size_t>(op.dim()));
      for (int i = 0; i < op.dim(); ++i) col[static_cast<size_t>(i)] = sp.basis.at(i, j);
      FqVec w = op.apply(col);
      for (int i = 0; i < op.dim(); ++i) image.set(i, j, w[static_cast<size_t>(i)]);
    }
    CHECK(image.rank() == sp.dim);
    CHECK(image.column_space_echelon() == sp.basis.column_space_echelon());
  }
}

TEST_CASE("stable dimension is invariant under field extension") {
  FqPtr f = Fq::make(2, 1);
  FieldExtension up = extend_field(f, 2);
  for (const MatFq& a : all_matrices(f, 2)) {
    SemilinearOp op = SemilinearOp::make(f, a, 1);
    MatFq b(up.ext, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b.set(i, j, up.map(a.at(i, j)));
    SemilinearOp ext = SemilinearOp::make(up.ext, b, 1);
    CHECK(stable_dim(op) == stable_dim(ext));
  }
}
