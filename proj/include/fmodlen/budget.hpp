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

#ifndef FMODLEN_BUDGET_HPP_
#define FMODLEN_BUDGET_HPP_

#include <chrono>
#include <stdexcept>
#include <string>

namespace fmodlen {

// Raised when a wall-clock budget runs out mid-computation. The pipeline
// turns this into a resumable-checkpoint failure (exit code 3); completed
// stages stay in the resolution cache.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& stage)
      : std::runtime_error("budget exceeded during " + stage), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Soft deadline checked between units of work. Pass nullptr for no limit.
class Budget {
 public:
  Budget() = default;
  static Budget seconds(double s) {
    Budget b;
    b.enabled_ = true;
    b.deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::microseconds(static_cast<int64_t>(s * 1e6));
    return b;
  }

  void check(const char* stage) const {
    if (enabled_ && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded(stage);
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace fmodlen

#endif  // FMODLEN_BUDGET_HPP_
