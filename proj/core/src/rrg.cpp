// Copyright 2026 The overdurfee Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "overdurfee/rrg.hpp"

#include <string>

#include "overdurfee/enumerate.hpp"

namespace overdurfee {

void check_gordon_params(int k, int i) {
  if (k < 2 || i < 1 || i > k) {
    throw PreconditionError("invalid (k, i) = (" + std::to_string(k) + ", " +
                            std::to_string(i) + "); need k >= 2 and 1 <= i <= k");
  }
}

bool is_rrg(const Overpartition& op, int k, int i) {
  check_gordon_params(k, i);
  const auto& parts = op.parts();
  std::size_t plain_ones = 0;
  for (const Part& p : parts) {
    if (p.value == 1 && !p.overlined) ++plain_ones;
  }
  if (plain_ones > static_cast<std::size_t>(i - 1)) return false;

  const auto window = static_cast<std::size_t>(k - 1);
  for (std::size_t j = 0; j + window < parts.size(); ++j) {
    const PartValue gap = parts[j].value - parts[j + window].value;
    if (gap < (parts[j].overlined ? 1U : 2U)) return false;
  }
  return true;
}

BigInt count_dki(unsigned n, int k, int i) {
  check_gordon_params(k, i);
  BigInt count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (is_rrg(op, k, i)) ++count;
  });
  return count;
}

}  // namespace overdurfee
