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

#ifndef FMODLEN_MONOMIAL_HPP_
#define FMODLEN_MONOMIAL_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace fmodlen {

inline constexpr int kMaxVars = 12;
inline constexpr int kMaxExponent = 255;

enum class MonomialOrder { Grevlex, Grlex, Lex };

// Exponent vector with cached total degree. 16 bytes, trivially copyable.
// Individual exponents are capped at 255; total degree fits uint16.
class Monomial {
 public:
  Monomial() : deg_(0), nv_(0), pad_(0) { e_.fill(0); }

  static Monomial one(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("variable count out of range [1, 12]");
    Monomial m;
    m.nv_ = static_cast<uint8_t>(nvars);
    return m;
  }

  static Monomial variable(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.set_exponent(i, exp);
    return m;
  }

  int nvars() const { return nv_; }
  int degree() const { return deg_; }
  int exponent(int i) const { return e_[static_cast<size_t>(i)]; }

  void set_exponent(int i, int v) {
    if (i < 0 || i >= nv_) throw std::out_of_range("variable index");
    if (v < 0 || v > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    deg_ = static_cast<uint16_t>(deg_ - e_[static_cast<size_t>(i)] + v);
    e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
  }

  Monomial times(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < nv_; ++i) {
      int s = e_[static_cast<size_t>(i)] + o.e_[static_cast<size_t>(i)];
      if (s > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      m.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(s);
    }
    m.deg_ = static_cast<uint16_t>(deg_ + o.deg_);
    return m;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nv_; ++i)
      if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  Monomial divided_by(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < nv_; ++i) {
      int d = e_[static_cast<size_t>(i)] - o.e_[static_cast<size_t>(i)];
      if (d < 0) throw std::domain_error("monomial division is not exact");
      m.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(d);
    }
    m.deg_ = static_cast<uint16_t>(deg_ - o.deg_);
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    int deg = 0;
    for (int i = 0; i < a.nv_; ++i) {
      uint8_t v = a.e_[static_cast<size_t>(i)] > b.e_[static_cast<size_t>(i)]
                      ? a.e_[static_cast<size_t>(i)]
                      : b.e_[static_cast<size_t>(i)];
      m.e_[static_cast<size_t>(i)] = v;
      deg += v;
    }
    m.deg_ = static_cast<uint16_t>(deg);
    return m;
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < nv_; ++i)
      if (e_[static_cast<size_t>(i)] != 0 && o.e_[static_cast<size_t>(i)] != 0) return false;
    return true;
  }

  // Exponentwise scaling, used for Frobenius powers.
  Monomial scaled(int k) const {
    Monomial m = *this;
    int deg = 0;
    for (int i = 0; i < nv_; ++i) {
      int v = e_[static_cast<size_t>(i)] * k;
      if (v > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      m.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
      deg += v;
    }
    m.deg_ = static_cast<uint16_t>(deg);
    return m;
  }

  // Componentwise quotient and remainder by p; m = quotient.scaled(p) * remainder.
  Monomial pth_quotient(int p) const {
    Monomial m = *this;
    int deg = 0;
    for (int i = 0; i < nv_; ++i) {
      m.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(e_[static_cast<size_t>(i)] / p);
      deg += m.e_[static_cast<size_t>(i)];
    }
    m.deg_ = static_cast<uint16_t>(deg);
    return m;
  }

  Monomial pth_remainder(int p) const {
    Monomial m = *this;
    int deg = 0;
    for (int i = 0; i < nv_; ++i) {
      m.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(e_[static_cast<size_t>(i)] % p);
      deg += m.e_[static_cast<size_t>(i)];
    }
    m.deg_ = static_cast<uint16_t>(deg);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.nv_ == b.nv_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Order-independent total ordering for map keys and canonical listings.
  static bool byte_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return std::memcmp(a.e_.data(), b.e_.data(), sizeof(a.e_)) < 0;
  }

  size_t hash() const {
    uint64_t lo, hi;
    std::memcpy(&lo, this, 8);
    std::memcpy(&hi, reinterpret_cast<const char*>(this) + 8, 8);
    uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
    h ^= hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }

  // Bit i set iff variable i occurs; quick reject for divisibility scans.
  uint16_t support_mask() const {
    uint16_t m = 0;
    for (int i = 0; i < nv_; ++i)
      if (e_[static_cast<size_t>(i)] != 0) m |= static_cast<uint16_t>(1u << i);
    return m;
  }

 private:
  uint16_t deg_;
  uint8_t nv_;
  uint8_t pad_;
  std::array<uint8_t, kMaxVars> e_;
};

static_assert(sizeof(Monomial) == 16);

// Returns negative / zero / positive as a < b, a == b, a > b under the order.
// Grevlex: higher degree wins; on equal degree the smaller exponent at the
// last differing variable wins (so x0^2 > x0*x1 > x1^2 > x0*x2).
inline int monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = a.nvars(); i-- > 0;) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::Grlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = 0; i < a.nvars(); ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::Lex: {
      for (int i = 0; i < a.nvars(); ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace fmodlen

#endif  // FMODLEN_MONOMIAL_HPP_
