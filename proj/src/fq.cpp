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

#include "fmodlen/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmodlen {
namespace {

constexpr uint32_t kMaxQ = 1u << 20;  // packed elements must stay small
constexpr uint32_t kTableMaxQ = 1u << 16;

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense little-endian polynomials over F_p, used only for modulus validation
// and as the reduction step of the plain backend.
using Pol = std::vector<uint32_t>;

void pol_trim(Pol& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Pol pol_mul_mod(const Pol& a, const Pol& b, const Pol& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Pol c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  // f is monic of degree e; reduce from the top.
  size_t e = f.size() - 1;
  for (size_t i = c.size(); i-- > e;) {
    uint32_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < e; ++j)
      c[i - e + j] = (c[i - e + j] + static_cast<uint64_t>(t) * (p - f[j] % p)) % p;
  }
  c.resize(e);
  pol_trim(c);
  return c;
}

Pol pol_pow_mod(Pol base, uint64_t k, const Pol& f, uint32_t p) {
  Pol r = {1};
  while (k) {
    if (k & 1) r = pol_mul_mod(r, base, f, p);
    base = pol_mul_mod(base, base, f, p);
    k >>= 1;
  }
  return r;
}

Pol pol_gcd(Pol a, Pol b, uint32_t p) {
  pol_trim(a);
  pol_trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly.
    uint32_t lc = b.back();
    uint32_t lci = 1;
    {  // inverse of lc mod p
      uint64_t r = 1, base = lc, k = p - 2;
      while (k) {
        if (k & 1) r = r * base % p;
        base = base * base % p;
        k >>= 1;
      }
      lci = static_cast<uint32_t>(r);
    }
    while (a.size() >= b.size() && !a.empty()) {
      uint32_t t = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lci % p);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = (a[off + j] + static_cast<uint64_t>(t) * (p - b[j]) ) % p;
      pol_trim(a);
    }
    std::swap(a, b);
  }
  pol_trim(a);
  return a;
}

// Rabin irreducibility test for monic f of degree e over F_p.
bool is_irreducible(const Pol& f, uint32_t p) {
  size_t e = f.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;  // monic linear polynomials; x is not reduced mod f below
  Pol x = {0, 1};
  // x^(p^e) == x mod f
  Pol xe = x;
  for (size_t i = 0; i < e; ++i) xe = pol_pow_mod(xe, p, f, p);
  Pol diff = xe;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  pol_trim(diff);
  if (!diff.empty()) return false;
  for (uint32_t ell : prime_factors(static_cast<uint32_t>(e))) {
    Pol xk = x;
    for (size_t i = 0; i < e / ell; ++i) xk = pol_pow_mod(xk, p, f, p);
    Pol d = xk;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    pol_trim(d);
    Pol g = pol_gcd(d, f, p);
    if (g.size() != 1) return false;  // gcd must be a unit
  }
  return true;
}

}  // namespace

FqPtr Fq::make(uint32_t p, uint32_t e, Backend backend) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("field too large (q > 2^20)");
  }
  // Scan packed coefficient values ascending for the least irreducible.
  std::vector<uint32_t> low(e, 0);
  for (uint64_t c = 0; c < q; ++c) {
    uint64_t t = c;
    for (uint32_t i = 0; i < e; ++i) {
      low[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    Pol f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, p)) {
      std::vector<uint32_t> mod(f.begin(), f.end());
      auto fq = std::shared_ptr<Fq>(new Fq());
      fq->init(p, e, std::move(mod), backend);
      return fq;
    }
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

FqPtr Fq::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus,
               Backend backend) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  if (modulus.size() != e + 1) throw std::invalid_argument("modulus must have degree e");
  std::vector<uint32_t> mod(modulus);
  for (auto& c : mod) c %= p;
  if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
  Pol f(mod.begin(), mod.end());
  if (!is_irreducible(f, p)) throw std::invalid_argument("modulus is not irreducible");
  auto fq = std::shared_ptr<Fq>(new Fq());
  fq->init(p, e, std::move(mod), backend);
  return fq;
}

void Fq::init(uint32_t p, uint32_t e, std::vector<uint32_t> modulus, Backend backend) {
  p_ = p;
  e_ = e;
  mod_ = std::move(modulus);
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) q *= p;
  if (q > kMaxQ) throw std::invalid_argument("field too large (q > 2^20)");
  q_ = static_cast<uint32_t>(q);
  frob_back_exp_ = 1;
  for (uint32_t i = 0; i + 1 < e; ++i) frob_back_exp_ *= p;

  if (backend == Backend::Auto && q_ <= kTableMaxQ && e_ > 1) {
    // Find a multiplicative generator, then tabulate its powers.
    auto factors = prime_factors(q_ - 1);
    uint32_t g = 0;
    for (uint32_t cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (uint32_t ell : factors) {
        if (plain_pow({cand}, (q_ - 1) / ell).v == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
    if (g != 0) {
      exp_.assign(q_ - 1, 0);
      log_.assign(q_, 0);
      FqElem cur = one();
      for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur.v;
        log_[cur.v] = i;
        cur = plain_mul(cur, {g});
      }
      tables_ = true;
    }
  }
}

FqElem Fq::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

FqElem Fq::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > e_) throw std::invalid_argument("coefficient vector longer than degree");
  uint32_t v = 0;
  uint32_t scale = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    v += (c[i] % p_) * scale;
    scale *= p_;
  }
  return {v};
}

std::vector<uint32_t> Fq::coeffs(FqElem a) const {
  std::vector<uint32_t> out(e_);
  uint32_t v = a.v;
  for (uint32_t i = 0; i < e_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

FqElem Fq::gen() const {
  if (e_ == 1) return neg(FqElem{mod_[0]});
  return {p_};
}

FqElem Fq::add(FqElem a, FqElem b) const {
  if (p_ == 2) return {a.v ^ b.v};
  if (e_ == 1) {
    uint32_t s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  uint32_t v = 0, scale = 1, x = a.v, y = b.v;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    v += s * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return {v};
}

FqElem Fq::neg(FqElem a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
  uint32_t v = 0, scale = 1, x = a.v;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t d = x % p_;
    v += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return {v};
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::plain_mul(FqElem a, FqElem b) const {
  if (a.v == 0 || b.v == 0) return {0};
  Pol pa(e_), pb(e_);
  uint32_t x = a.v, y = b.v;
  for (uint32_t i = 0; i < e_; ++i) {
    pa[i] = x % p_;
    pb[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  Pol mod(mod_.begin(), mod_.end());
  Pol c = pol_mul_mod(pa, pb, mod, p_);
  uint32_t v = 0, scale = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    v += (i < c.size() ? c[i] : 0) * scale;
    scale *= p_;
  }
  return {v};
}

FqElem Fq::mul(FqElem a, FqElem b) const {
  if (e_ == 1) return {static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % p_)};
  if (a.v == 0 || b.v == 0) return {0};
  if (tables_) {
    uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  return plain_mul(a, b);
}

FqElem Fq::plain_pow(FqElem a, uint64_t k) const {
  FqElem r = one();
  FqElem base = a;
  while (k) {
    if (k & 1) r = plain_mul(r, base);
    base = plain_mul(base, base);
    k >>= 1;
  }
  return r;
}

FqElem Fq::pow(FqElem a, uint64_t k) const {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  if (tables_) {
    uint64_t l = static_cast<uint64_t>(log_[a.v]) * (k % (q_ - 1)) % (q_ - 1);
    return {exp_[l]};
  }
  if (e_ == 1) {
    uint64_t r = 1, base = a.v;
    k %= (p_ - 1);
    if (k == 0) return one();
    while (k) {
      if (k & 1) r = r * base % p_;
      base = base * base % p_;
      k >>= 1;
    }
    return {static_cast<uint32_t>(r)};
  }
  return plain_pow(a, k % (q_ - 1));
}

FqElem Fq::inv(FqElem a) const {
  if (a.v == 0) throw std::domain_error("division by zero");
  if (tables_) return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

FqElem Fq::frob(FqElem a, int direction) const {
  if (direction == 1) return pow(a, p_);
  if (direction == -1) return pow(a, frob_back_exp_);
  throw std::invalid_argument("frobenius direction must be +1 or -1");
}

std::string Fq::to_string(FqElem a) const {
  if (e_ == 1) return std::to_string(a.v);
  auto c = coeffs(a);
  std::string out;
  for (uint32_t i = e_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "g";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool Fq::same_field(const Fq& other) const {
  return p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_;
}

FqElem FieldExtension::map(FqElem a) const {
  // Horner evaluation of the coordinate polynomial at gen_image.
  auto c = base->coeffs(a);
  FqElem acc = ext->zero();
  for (size_t i = c.size(); i-- > 0;) {
    acc = ext->mul(acc, gen_image);
    acc = ext->add(acc, ext->from_int(c[i]));
  }
  return acc;
}

FieldExtension extend_field(const FqPtr& base, uint32_t r) {
  if (r == 0) throw std::invalid_argument("extension degree must be positive");
  FieldExtension fe;
  fe.base = base;
  fe.r = r;
  fe.ext = (r == 1) ? base : Fq::make(base->p(), base->e() * r);
  // Least root of the base modulus in the extension; exists and is unique up
  // to conjugacy since e | e*r.
  const auto& mod = base->modulus();
  for (uint32_t v = 0; v < fe.ext->q(); ++v) {
    FqElem x{v};
    FqElem acc = fe.ext->zero();
    for (size_t i = mod.size(); i-- > 0;) {
      acc = fe.ext->mul(acc, x);
      acc = fe.ext->add(acc, fe.ext->from_int(mod[i]));
    }
    if (fe.ext->is_zero(acc)) {
      fe.gen_image = x;
      return fe;
    }
  }
  throw std::logic_error("no root of base modulus in extension");  // unreachable
}

}  // namespace fmodlen
