// Copyright 2026 The crkit Authors
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

#include "crkit/common.hpp"

namespace crkit {

std::optional<std::chrono::steady_clock::time_point> Deadline::until_;

void Deadline::set_after(std::chrono::milliseconds budget) {
  until_ = std::chrono::steady_clock::now() + budget;
}

void Deadline::clear() { until_.reset(); }

bool Deadline::active() { return until_.has_value(); }

void Deadline::check() {
  if (until_ && std::chrono::steady_clock::now() > *until_) {
    throw BudgetExceeded("wall-clock budget exceeded");
  }
}

}  // namespace crkit
