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

// Partitions, overpartitions and the Ferrers-graph operations used by the
// Durfee dissection and the folding map.

#ifndef OVERDURFEE_PARTITION_HPP_
#define OVERDURFEE_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace overdurfee {

using BigInt = boost::multiprecision::cpp_int;
using PartValue = std::uint64_t;

// Largest part value accepted anywhere. Keeps every sum of parts, plus the
// shifts applied by the maps, far away from 64-bit overflow.
inline constexpr PartValue kMaxPartValue = PartValue{1} << 48;

// Raised when a caller hands an operation an argument outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a property that is supposed to hold by construction fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Part {
  PartValue value = 0;
  bool overlined = false;

  friend bool operator==(const Part&, const Part&) = default;
};

// Canonical precedence: larger values first; at equal value the overlined
// copy comes first.
constexpr bool canonical_before(const Part& a, const Part& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.overlined && !b.overlined;
}

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  // Throws PreconditionError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<PartValue> parts);
  static Partition from_unsorted(std::vector<PartValue> parts);

  const std::vector<PartValue>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  PartValue operator[](std::size_t i) const { return parts_[i]; }
  // parts_[i] if present, 0 otherwise.
  PartValue part_or_zero(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<PartValue> parts_;
};

// Partition in which the first occurrence of each value may be overlined.
// Always stored in canonical order.
class Overpartition {
 public:
  Overpartition() = default;
  // Sorts into canonical order. Throws PreconditionError on a zero value, a
  // value above kMaxPartValue, or two overlined parts of the same value.
  explicit Overpartition(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const Part& operator[](std::size_t i) const { return parts_[i]; }
  std::size_t num_overlined() const;
  Partition underlying() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
  friend bool operator<(const Overpartition& a, const Overpartition& b);

 private:
  std::vector<Part> parts_;
};

// Strictly decreasing nonnegative integers, each below `bound`.
class DistinctDelta {
 public:
  DistinctDelta() = default;
  DistinctDelta(std::vector<PartValue> parts, std::size_t bound);
  static DistinctDelta from_unsorted(std::vector<PartValue> parts,
                                     std::size_t bound);

  const std::vector<PartValue>& parts() const { return parts_; }
  std::size_t bound() const { return bound_; }
  std::size_t size() const { return parts_.size(); }
  bool contains(PartValue v) const;

  friend bool operator==(const DistinctDelta&, const DistinctDelta&) = default;

 private:
  std::vector<PartValue> parts_;
  std::size_t bound_ = 0;
};

PartValue sigma(const Partition& p);
PartValue sigma(const Overpartition& op);
PartValue sigma(const DistinctDelta& d);
PartValue sigma(std::span<const Part> rows);

// Transpose of the Ferrers graph.
Partition conjugate(const Partition& p);

// Row-wise sum of two Ferrers graphs. `rows` keeps its given order; row i of
// the result is overlined iff rows[i] is. `b` must not have more rows than
// `rows`.
std::vector<Part> add_overlay_rows(std::span<const Part> rows,
                                   std::span<const PartValue> b);

// add_overlay_rows over the canonical rows of `a`, re-canonicalized.
Overpartition add_overlay(const Overpartition& a, const Partition& b);

// Adds `amount` to every overlined part.
Overpartition shift_overlined(const Overpartition& op, PartValue amount);

}  // namespace overdurfee

#endif  // OVERDURFEE_PARTITION_HPP_
