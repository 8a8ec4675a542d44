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

#include "overdurfee/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>

namespace overdurfee {

Partition::Partition(std::vector<PartValue> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw PreconditionError("partition part must be positive");
    if (parts_[i] > kMaxPartValue) throw PreconditionError("partition part too large");
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw PreconditionError("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::from_unsorted(std::vector<PartValue> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Overpartition::Overpartition(std::vector<Part> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), canonical_before);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Part& p = parts_[i];
    if (p.value == 0) throw PreconditionError("overpartition part must be positive");
    if (p.value > kMaxPartValue) throw PreconditionError("overpartition part too large");
    if (i > 0 && p.overlined && parts_[i - 1].overlined &&
        parts_[i - 1].value == p.value) {
      throw PreconditionError("duplicate overlined value " + std::to_string(p.value));
    }
  }
}

std::size_t Overpartition::num_overlined() const {
  return static_cast<std::size_t>(std::count_if(
      parts_.begin(), parts_.end(), [](const Part& p) { return p.overlined; }));
}

Partition Overpartition::underlying() const {
  std::vector<PartValue> values;
  values.reserve(parts_.size());
  for (const Part& p : parts_) values.push_back(p.value);
  return Partition(std::move(values));
}

bool operator<(const Overpartition& a, const Overpartition& b) {
  return std::lexicographical_compare(
      a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
      [](const Part& x, const Part& y) {
        return std::tie(x.value, x.overlined) < std::tie(y.value, y.overlined);
      });
}

DistinctDelta::DistinctDelta(std::vector<PartValue> parts, std::size_t bound)
    : parts_(std::move(parts)), bound_(bound) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] >= bound_) {
      throw PreconditionError("delta part " + std::to_string(parts_[i]) +
                              " not below bound " + std::to_string(bound_));
    }
    if (i > 0 && parts_[i - 1] <= parts_[i]) {
      throw PreconditionError("delta parts must be strictly decreasing");
    }
  }
}

DistinctDelta DistinctDelta::from_unsorted(std::vector<PartValue> parts,
                                           std::size_t bound) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return DistinctDelta(std::move(parts), bound);
}

bool DistinctDelta::contains(PartValue v) const {
  return std::binary_search(parts_.begin(), parts_.end(), v, std::greater<>());
}

PartValue sigma(const Partition& p) {
  return std::accumulate(p.parts().begin(), p.parts().end(), PartValue{0});
}

PartValue sigma(const Overpartition& op) { return sigma(std::span(op.parts())); }

PartValue sigma(const DistinctDelta& d) {
  return std::accumulate(d.parts().begin(), d.parts().end(), PartValue{0});
}

PartValue sigma(std::span<const Part> rows) {
  PartValue total = 0;
  for (const Part& p : rows) total += p.value;
  return total;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<PartValue> columns(p[0], 0);
  for (PartValue row : p.parts()) {
    for (PartValue c = 0; c < row; ++c) ++columns[c];
  }
  return Partition(std::move(columns));
}

std::vector<Part> add_overlay_rows(std::span<const Part> rows,
                                   std::span<const PartValue> b) {
  if (b.size() > rows.size()) {
    throw PreconditionError("overlay has more rows than the base");
  }
  std::vector<Part> out(rows.begin(), rows.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) throw PreconditionError("overlay parts must be positive");
    out[i].value += b[i];
  }
  return out;
}

Overpartition add_overlay(const Overpartition& a, const Partition& b) {
  return Overpartition(add_overlay_rows(a.parts(), b.parts()));
}

Overpartition shift_overlined(const Overpartition& op, PartValue amount) {
  std::vector<Part> rows = op.parts();
  for (Part& p : rows) {
    if (p.overlined) p.value += amount;
  }
  return Overpartition(std::move(rows));
}

}  // namespace overdurfee
