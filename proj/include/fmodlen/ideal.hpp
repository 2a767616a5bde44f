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

#ifndef FMODLEN_IDEAL_HPP_
#define FMODLEN_IDEAL_HPP_

#include <memory>
#include <vector>

#include "fmodlen/groebner.hpp"
#include "fmodlen/poly.hpp"

namespace fmodlen {

// Homogeneous ideal with a lazily computed, cached reduced Groebner basis.
// Value semantics; copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const;
  const std::vector<Poly>& gens() const;

  const GroebnerBasis& groebner(const Budget* budget = nullptr) const;
  bool contains(const Poly& f) const;
  bool equals(const Ideal& other) const;  // compares reduced bases
  bool is_zero() const;                   // no nonzero generators
  bool contains_one() const;              // improper: the whole ring

  // Generators raised to the p^iterate power; generates the Frobenius bracket
  // power (independent of the generator choice).
  Ideal bracket_power(int iterate) const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

}  // namespace fmodlen

#endif  // FMODLEN_IDEAL_HPP_
