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

#include "fmodlen/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fmodlen {

RingPtr PolyRing::make(FqPtr field, std::vector<std::string> var_names, MonomialOrder order) {
  if (!field) throw std::invalid_argument("null field");
  if (var_names.empty() || var_names.size() > kMaxVars)
    throw std::invalid_argument("variable count out of range [1, 12]");
  for (const auto& n : var_names) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw std::invalid_argument("variable name must start with a letter: '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("invalid character in variable name: '" + n + "'");
  }
  for (size_t i = 0; i < var_names.size(); ++i)
    for (size_t j = i + 1; j < var_names.size(); ++j)
      if (var_names[i] == var_names[j])
        throw std::invalid_argument("duplicate variable name: '" + var_names[i] + "'");
  return std::shared_ptr<const PolyRing>(new PolyRing(std::move(field), std::move(var_names), order));
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (d > kMaxExponent * nvars()) return out;
  Monomial m = Monomial::one(nvars());
  // Enumerate exponent vectors summing to d, then sort by the ring order.
  std::vector<int> e(static_cast<size_t>(nvars()), 0);
  int n = nvars();
  auto rec = [&](auto&& self, int i, int rest) -> void {
    if (i == n - 1) {
      if (rest > kMaxExponent) return;
      e[static_cast<size_t>(i)] = rest;
      Monomial mm = m;
      for (int k = 0; k < n; ++k) mm.set_exponent(k, e[static_cast<size_t>(k)]);
      out.push_back(mm);
      return;
    }
    for (int v = 0; v <= rest && v <= kMaxExponent; ++v) {
      e[static_cast<size_t>(i)] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; });
  return out;
}

bool PolyRing::same_ring(const PolyRing& other) const {
  return order_ == other.order_ && names_ == other.names_ &&
         field_->same_field(*other.field_);
}

Poly poly_from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Poly f;
  f.ring_ = std::move(ring);
  f.terms_ = std::move(terms);
  return f;
}

Poly Poly::zero(RingPtr ring) { return poly_from_sorted_terms(std::move(ring), {}); }

Poly Poly::constant(RingPtr ring, FqElem c) {
  if (ring->field()->is_zero(c)) return zero(std::move(ring));
  Monomial one = Monomial::one(ring->nvars());
  return poly_from_sorted_terms(std::move(ring), {Term{one, c}});
}

Poly Poly::term(RingPtr ring, Monomial m, FqElem c) {
  if (m.nvars() != ring->nvars()) throw std::invalid_argument("monomial/ring variable mismatch");
  if (ring->field()->is_zero(c)) return zero(std::move(ring));
  return poly_from_sorted_terms(std::move(ring), {Term{m, c}});
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& fq = *ring->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring->cmp(a.mon, b.mon) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.mon.nvars() != ring->nvars())
      throw std::invalid_argument("monomial/ring variable mismatch");
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef = fq.add(out.back().coef, t.coef);
      if (fq.is_zero(out.back().coef)) out.pop_back();
    } else if (!fq.is_zero(t.coef)) {
      out.push_back(t);
    }
  }
  for (const auto& t : out)
    if (t.mon.degree() != out.front().mon.degree())
      throw std::invalid_argument("inhomogeneous sum");
  return poly_from_sorted_terms(std::move(ring), std::move(out));
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.front();
}

Poly Poly::operator-() const {
  const auto& fq = *ring_->field();
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coef = fq.neg(t.coef);
  return poly_from_sorted_terms(ring_, std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree() != o.degree()) throw std::invalid_argument("inhomogeneous sum");
  const auto& fq = *ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->cmp(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      FqElem s = fq.add(terms_[i].coef, o.terms_[j].coef);
      if (!fq.is_zero(s)) out.push_back(Term{terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return poly_from_sorted_terms(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  const auto& fq = *ring_->field();
  if (o.terms_.size() == 1) return times_term(o.terms_[0].mon, o.terms_[0].coef);
  if (terms_.size() == 1) return o.times_term(terms_[0].mon, terms_[0].coef);
  std::unordered_map<Monomial, FqElem, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mon.times(b.mon);
      FqElem c = fq.mul(a.coef, b.coef);
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) it->second = fq.add(it->second, c);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (!fq.is_zero(c)) out.push_back(Term{m, c});
  std::sort(out.begin(), out.end(), [this](const Term& a, const Term& b) {
    return ring_->cmp(a.mon, b.mon) > 0;
  });
  return poly_from_sorted_terms(ring_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Poly Poly::scaled(FqElem c) const {
  const auto& fq = *ring_->field();
  if (fq.is_zero(c)) return zero(ring_);
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coef = fq.mul(t.coef, c);
  return poly_from_sorted_terms(ring_, std::move(out));
}

Poly Poly::times_term(const Monomial& m, FqElem c) const {
  const auto& fq = *ring_->field();
  if (fq.is_zero(c)) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a fixed monomial preserves the term order.
  for (const auto& t : terms_) out.push_back(Term{t.mon.times(m), fq.mul(t.coef, c)});
  return poly_from_sorted_terms(ring_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field()->inv(terms_.front().coef));
}

Poly Poly::pow(uint32_t k) const {
  Poly r = Poly::constant(ring_, ring_->field()->one());
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

Poly Poly::frobenius_power(int iterate) const {
  if (iterate < 0) throw std::invalid_argument("frobenius iterate must be >= 0");
  if (iterate == 0) return *this;
  const auto& fq = *ring_->field();
  int scale = 1;
  for (int i = 0; i < iterate; ++i) scale *= static_cast<int>(fq.p());
  std::vector<Term> out(terms_);
  for (auto& t : out) {
    t.mon = t.mon.scaled(scale);  // preserves relative order for graded orders
    for (int i = 0; i < iterate; ++i) t.coef = fq.frob(t.coef, 1);
  }
  return poly_from_sorted_terms(ring_, std::move(out));
}

FqElem Poly::coefficient(const Monomial& m) const {
  // Binary search over the descending-sorted terms.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [this](const Term& t, const Monomial& key) {
                               return ring_->cmp(t.mon, key) > 0;
                             });
  if (it != terms_.end() && it->mon == m) return it->coef;
  return ring_->field()->zero();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const auto& fq = *ring_->field();
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string piece;
    std::string c = fq.to_string(t.coef);
    if (t.mon.degree() == 0 || c != "1")
      piece = (c.find('+') == std::string::npos) ? c : "(" + c + ")";
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.mon.exponent(i);
      if (e == 0) continue;
      if (!piece.empty()) piece += "*";
      piece += ring_->var_name(i);
      if (e > 1) piece += "^" + std::to_string(e);
    }
    out += piece;
  }
  return out;
}

std::vector<std::pair<Monomial, Poly>> pth_decompose(const Poly& f) {
  const auto& ring = f.ring();
  const auto& fq = *ring->field();
  int p = static_cast<int>(fq.p());
  std::map<Monomial, std::vector<Term>, bool (*)(const Monomial&, const Monomial&)> parts(
      &Monomial::byte_less);
  for (const auto& t : f.terms()) {
    Monomial a = t.mon.pth_remainder(p);
    Monomial q = t.mon.pth_quotient(p);
    parts[a].push_back(Term{q, fq.frob(t.coef, -1)});
  }
  std::vector<std::pair<Monomial, Poly>> out;
  out.reserve(parts.size());
  for (auto& [a, terms] : parts)
    out.emplace_back(a, Poly::from_terms(ring, std::move(terms)));
  return out;
}

Poly pth_reassemble(const RingPtr& ring, const std::vector<std::pair<Monomial, Poly>>& parts) {
  std::vector<Term> all;
  for (const auto& [a, g] : parts) {
    Poly gp = g.frobenius_power(1);
    for (const auto& t : gp.terms()) all.push_back(Term{t.mon.times(a), t.coef});
  }
  return Poly::from_terms(ring, std::move(all));
}

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  uint64_t parse_int() {
    skip_ws();
    size_t start = i;
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      if (v > (1ull << 40)) throw ParseError(start, "integer literal too large");
      ++i;
    }
    if (i == start) throw ParseError(i, "expected an integer");
    return v;
  }

  int parse_var() {
    skip_ws();
    size_t start = i;
    if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      throw ParseError(i, "expected a variable or integer");
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    std::string name = s.substr(i, j - i);
    for (int k = 0; k < ring->nvars(); ++k) {
      if (ring->var_name(k) == name) {
        i = j;
        return k;
      }
    }
    throw ParseError(start, "unknown variable '" + name + "'");
  }

  // term := factor ('*' factor)*
  Term parse_term() {
    const auto& fq = *ring->field();
    FqElem coef = fq.one();
    Monomial mon = Monomial::one(ring->nvars());
    bool first = true;
    while (true) {
      skip_ws();
      if (!first) {
        if (i < s.size() && s[i] == '*') {
          ++i;
        } else {
          break;
        }
      }
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = fq.mul(coef, fq.from_int(static_cast<int64_t>(parse_int() % fq.p())));
      } else {
        int var = parse_var();
        int exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          size_t at = i;
          uint64_t e = parse_int();
          if (e > kMaxExponent) throw ParseError(at, "exponent exceeds 255");
          exp = static_cast<int>(e);
        }
        int cur = mon.exponent(var);
        if (cur + exp > kMaxExponent) throw ParseError(i, "exponent exceeds 255");
        mon.set_exponent(var, cur + exp);
      }
      first = false;
    }
    if (first) throw ParseError(i, "expected a term");
    return Term{mon, coef};
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser ps{ring, text};
  const auto& fq = *ring->field();
  std::vector<Term> terms;
  bool negate = false;
  ps.skip_ws();
  if (ps.i < text.size() && (text[ps.i] == '-' || text[ps.i] == '+')) {
    negate = text[ps.i] == '-';
    ++ps.i;
  }
  while (true) {
    size_t term_at = ps.i;
    Term t = ps.parse_term();
    if (negate) t.coef = fq.neg(t.coef);
    if (!fq.is_zero(t.coef)) {
      // Report inhomogeneity against the offending term, not the whole string.
      if (!terms.empty() && t.mon.degree() != terms.front().mon.degree())
        throw ParseError(term_at, "inhomogeneous generator");
      terms.push_back(t);
    }
    if (ps.at_end()) break;
    char c = text[ps.i];
    if (c == '+') {
      negate = false;
    } else if (c == '-') {
      negate = true;
    } else {
      throw ParseError(ps.i, std::string("unexpected character '") + c + "'");
    }
    ++ps.i;
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace fmodlen
