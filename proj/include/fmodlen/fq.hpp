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

#ifndef FMODLEN_FQ_HPP_
#define FMODLEN_FQ_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fmodlen {

// Element of a finite field F_{p^e}. The value packs the coordinate vector
// (c_0, ..., c_{e-1}) in the modulus basis as sum c_i * p^i with c_i in
// [0, p). Elements carry no field pointer; they are only meaningful relative
// to the Fq that produced them, and mixing fields is a caller bug.
struct FqElem {
  uint32_t v = 0;

  friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
  friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
  // Packed-value order; used for deterministic tie-breaking, not algebra.
  friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Arithmetic context for F_{p^e} = F_p[y] / (modulus). Immutable after
// construction; share via FqPtr. Multiplication runs on discrete-log tables
// when q fits (q <= 2^16); the plain polynomial backend gives bit-identical
// results and is what the tables are built from.
class Fq {
 public:
  enum class Backend { Auto, Plain };

  // Default modulus: among monic irreducibles of degree e, the one whose
  // packed coefficient value sum c_i * p^i is least.
  static FqPtr make(uint32_t p, uint32_t e, Backend backend = Backend::Auto);
  // Explicit modulus: little-endian coefficients c_0..c_e, monic (c_e = 1).
  // Throws std::invalid_argument unless irreducible over F_p.
  static FqPtr make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus,
                    Backend backend = Backend::Auto);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(int64_t n) const;
  // Element with coordinate vector c (little-endian, length <= e).
  FqElem from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(FqElem a) const;  // little-endian, length e
  // Image of the polynomial variable y (for e = 1 this is -c_0).
  FqElem gen() const;

  bool is_zero(FqElem a) const { return a.v == 0; }
  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;  // throws std::domain_error on zero
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, uint64_t k) const;

  // frob(a, +1) = a^p, frob(a, -1) = the unique p-th root; mutually inverse
  // bijections. Any other direction throws.
  FqElem frob(FqElem a, int direction) const;

  std::string to_string(FqElem a) const;
  bool same_field(const Fq& other) const;

 private:
  Fq() = default;
  void init(uint32_t p, uint32_t e, std::vector<uint32_t> modulus, Backend backend);

  FqElem plain_mul(FqElem a, FqElem b) const;
  FqElem plain_pow(FqElem a, uint64_t k) const;

  uint32_t p_ = 0;
  uint32_t e_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> mod_;  // length e+1, monic
  bool tables_ = false;
  std::vector<uint32_t> exp_;  // exp_[i] = g^i, length q-1
  std::vector<uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
  uint64_t frob_back_exp_ = 0;  // p^(e-1)
};

// Embedding F_q -> F_{q^r} sending gen() to the least root (packed order) of
// the base modulus in the extension. A ring homomorphism, hence it commutes
// with the respective Frobenius maps.
struct FieldExtension {
  FqPtr base;
  FqPtr ext;
  uint32_t r = 1;
  FqElem gen_image;

  FqElem map(FqElem a) const;
};

FieldExtension extend_field(const FqPtr& base, uint32_t r);

}  // namespace fmodlen

#endif  // FMODLEN_FQ_HPP_
