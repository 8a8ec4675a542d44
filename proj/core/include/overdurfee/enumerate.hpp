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

// Exhaustive enumerators. These are the counting oracles for every
// generating function in the library, so they stay as plain as possible.

#ifndef OVERDURFEE_ENUMERATE_HPP_
#define OVERDURFEE_ENUMERATE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "overdurfee/partition.hpp"

namespace overdurfee {

// Yields the partitions of n in lexicographically decreasing order, starting
// with (n). n = 0 yields the single empty partition.
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n);
  std::optional<Partition> next();

 private:
  std::vector<PartValue> current_;
  bool done_ = false;
  bool started_ = false;
};

// Yields the overpartitions of n. Order: underlying partitions as in
// PartitionStream; for each, overline masks counted upward from 0, where bit
// j stands for the j-th largest distinct value.
class OverpartitionStream {
 public:
  explicit OverpartitionStream(unsigned n);
  std::optional<Overpartition> next();

 private:
  PartitionStream partitions_;
  std::optional<Partition> current_;
  std::vector<PartValue> distinct_;
  std::uint64_t mask_ = 0;
};

std::vector<Partition> partitions_of(unsigned n);
std::vector<Overpartition> overpartitions_of(unsigned n);

template <typename Visitor>
void for_each_overpartition(unsigned n, Visitor&& visit) {
  OverpartitionStream stream(n);
  while (auto op = stream.next()) visit(*op);
}

}  // namespace overdurfee

#endif  // OVERDURFEE_ENUMERATE_HPP_
