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

#include "fmodlen/ideal.hpp"

#include <mutex>
#include <stdexcept>

namespace fmodlen {

struct Ideal::State {
  RingPtr ring;
  std::vector<Poly> gens;
  mutable std::mutex mu;
  mutable std::shared_ptr<const GroebnerBasis> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : s_(std::make_shared<State>()) {
  if (!ring) throw std::invalid_argument("null ring");
  for (const auto& g : gens) {
    if (g.is_null()) throw std::invalid_argument("null generator");
    if (!g.ring()->same_ring(*ring)) throw std::invalid_argument("generator from a different ring");
  }
  s_->ring = std::move(ring);
  s_->gens = std::move(gens);
}

const RingPtr& Ideal::ring() const { return s_->ring; }
const std::vector<Poly>& Ideal::gens() const { return s_->gens; }

const GroebnerBasis& Ideal::groebner(const Budget* budget) const {
  {
    std::lock_guard<std::mutex> lock(s_->mu);
    if (s_->gb) return *s_->gb;
  }
  auto gb = std::make_shared<GroebnerBasis>(reduced_groebner(s_->ring, s_->gens, budget));
  std::lock_guard<std::mutex> lock(s_->mu);
  if (!s_->gb) s_->gb = std::move(gb);
  return *s_->gb;
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::equals(const Ideal& other) const {
  if (!s_->ring->same_ring(*other.ring())) return false;
  return groebner().elements == other.groebner().elements;
}

bool Ideal::is_zero() const {
  for (const auto& g : s_->gens)
    if (!g.is_zero()) return false;
  return true;
}

bool Ideal::contains_one() const {
  const auto& gb = groebner();
  return gb.elements.size() == 1 && gb.elements[0].degree() == 0;
}

Ideal Ideal::bracket_power(int iterate) const {
  if (iterate < 1) throw std::invalid_argument("bracket power iterate must be >= 1");
  std::vector<Poly> out;
  out.reserve(s_->gens.size());
  for (const auto& g : s_->gens) out.push_back(g.frobenius_power(iterate));
  return Ideal(s_->ring, std::move(out));
}

}  // namespace fmodlen
