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

#ifndef FMODLEN_POLY_HPP_
#define FMODLEN_POLY_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fmodlen/fq.hpp"
#include "fmodlen/monomial.hpp"

namespace fmodlen {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Graded ring F_q[x_0..x_n] with a fixed monomial order. Immutable.
class PolyRing {
 public:
  static RingPtr make(FqPtr field, std::vector<std::string> var_names,
                      MonomialOrder order = MonomialOrder::Grevlex);

  const FqPtr& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& var_names() const { return names_; }
  MonomialOrder order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b, order_); }

  // All monomials of total degree d, sorted descending in the ring order.
  // Degree < 0 yields the empty list.
  std::vector<Monomial> monomials_of_degree(int d) const;

  bool same_ring(const PolyRing& other) const;

 private:
  PolyRing(FqPtr field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(order) {}

  FqPtr field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Monomial mon;
  FqElem coef;
};

// Homogeneous polynomial: terms sorted strictly descending in the ring order,
// no zero coefficients, all of one total degree. The zero polynomial has no
// terms and degree() == -1. Homogeneity is an invariant, not a convention:
// operations that could break it throw instead.
class Poly {
 public:
  Poly() = default;  // null (no ring); usable only as a placeholder

  static Poly zero(RingPtr ring);
  static Poly constant(RingPtr ring, FqElem c);
  static Poly term(RingPtr ring, Monomial m, FqElem c);
  // Normalizes: sorts, merges, drops zeros; throws on mixed degrees.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  bool is_null() const { return ring_ == nullptr; }
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;  // throws on distinct nonzero degrees
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(FqElem c) const;
  Poly times_term(const Monomial& m, FqElem c) const;  // order-preserving
  Poly monic() const;
  Poly pow(uint32_t k) const;
  // Entrywise Frobenius: x^a c -> x^(p^it * a) c^(p^it). it >= 0.
  Poly frobenius_power(int iterate = 1) const;

  FqElem coefficient(const Monomial& m) const;  // 0 if absent

  std::string to_string() const;

 private:
  friend Poly poly_from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Trusted constructor for internal use: terms must already be sorted
// descending, merged, zero-free and homogeneous.
Poly poly_from_sorted_terms(RingPtr ring, std::vector<Term> terms);

// Writes f as sum over a of x^a * g_a^p with all exponents of a below p.
// Returns the (a, g_a) pairs with nonzero g_a, sorted bytewise by a.
std::vector<std::pair<Monomial, Poly>> pth_decompose(const Poly& f);

// Inverse of pth_decompose, for round-trip checks.
Poly pth_reassemble(const RingPtr& ring, const std::vector<std::pair<Monomial, Poly>>& parts);

// Parse error with a 0-based byte offset into the source string.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t offset, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Grammar: poly := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := integer | var ['^' integer]. Variable names come from the ring.
// Throws ParseError on syntax errors and on inhomogeneous input.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace fmodlen

#endif  // FMODLEN_POLY_HPP_
