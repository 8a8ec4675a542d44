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

#include "overdurfee/enumerate.hpp"

namespace overdurfee {

PartitionStream::PartitionStream(unsigned n) {
  if (n > 0) current_.push_back(n);
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(current_);
  }
  // Rightmost part greater than 1; everything after it is a run of 1s.
  std::size_t ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++ones;
  }
  if (current_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  const PartValue head = --current_.back();
  PartValue remainder = ones + 1;
  while (remainder > 0) {
    const PartValue piece = remainder < head ? remainder : head;
    current_.push_back(piece);
    remainder -= piece;
  }
  return Partition(current_);
}

OverpartitionStream::OverpartitionStream(unsigned n) : partitions_(n) {}

std::optional<Overpartition> OverpartitionStream::next() {
  if (!current_ || mask_ >> distinct_.size() != 0) {
    current_ = partitions_.next();
    if (!current_) return std::nullopt;
    distinct_.clear();
    for (PartValue v : current_->parts()) {
      if (distinct_.empty() || distinct_.back() != v) distinct_.push_back(v);
    }
    mask_ = 0;
  }
  std::vector<Part> rows;
  rows.reserve(current_->size());
  std::size_t group = 0;
  for (std::size_t i = 0; i < current_->size(); ++i) {
    const PartValue v = (*current_)[i];
    const bool first = i == 0 || (*current_)[i - 1] != v;
    if (first && i > 0) ++group;
    rows.push_back({v, first && ((mask_ >> group) & 1U) != 0});
  }
  ++mask_;
  return Overpartition(std::move(rows));
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Overpartition> overpartitions_of(unsigned n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

}  // namespace overdurfee
