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

// Maps connecting unrestricted overpartitions to those with a bounded number
// of successive Durfee squares.
//
// Square blocks (number of parts = generalized Durfee size N) are in
// bijection with pairs (base, shifts): base a partition into N distinct
// parts, shifts a set of distinct integers in [0, N-1]. assemble_block and
// split_block are the two directions.
//
// fold_squares sends every overpartition to one with at most k-1 successive
// squares. The number of preimages of a target is its weight in
//   pbar(n) = sum over targets beta of weight |fold^{-1}(beta)|.
// literal_weight evaluates the closed-form product proposed for that weight;
// WeightedIdentityReport records where the two disagree.

#ifndef OVERDURFEE_WEIGHTED_MAPS_HPP_
#define OVERDURFEE_WEIGHTED_MAPS_HPP_

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "overdurfee/partition.hpp"

namespace overdurfee {

class BlockPair {
 public:
  BlockPair() = default;
  // Throws PreconditionError unless `base` has distinct parts and `shifts`
  // is bounded by base.size().
  BlockPair(Partition base, DistinctDelta shifts);

  const Partition& base() const { return base_; }
  const DistinctDelta& shifts() const { return shifts_; }
  std::size_t size() const { return base_.size(); }

  friend bool operator==(const BlockPair&, const BlockPair&) = default;

 private:
  Partition base_;
  DistinctDelta shifts_;
};

PartValue sigma(const BlockPair& pair);

// Overlines every base part, then for each i in 1..N with i-1 among the
// shifts adds i-1 to the i-th base part and removes its overline.
Overpartition assemble_block(const BlockPair& pair);

// Inverse of assemble_block. Throws PreconditionError unless
// is_square_block(op).
BlockPair split_block(const Overpartition& op);

// All pairs of total weight n, in a deterministic order.
std::vector<BlockPair> block_pairs_of_weight(unsigned n);

// Identity when op has at most k-1 successive squares. Otherwise: add N_1 to
// every overlined part, sort, take the rows below the (k-1)-th square,
// conjugate them and add them row-wise onto the top rows, then subtract N_1
// from every overlined part.
Overpartition fold_squares(const Overpartition& op, int k);

// Closed-form weight for a target with at most k-1 squares:
//   1 if it has fewer than k-1 squares, otherwise, with beta' the target
//   shifted by N_1 on overlined parts and sorted,
//   prod_{i=1}^{N_{k-1}} (beta'_i - beta'_{i+1} + 1 - [beta'_{i+1} overlined])
// where missing rows read as a non-overlined 0.
BigInt literal_weight(const Overpartition& beta, int k);

struct FiberReport {
  Overpartition beta;
  std::vector<Overpartition> fiber;
  BigInt literal_weight;
  bool agrees = false;
};

// Exhaustive preimage of beta under fold_squares. Throws PreconditionError if
// beta has more than k-1 squares.
FiberReport fiber_of(const Overpartition& beta, int k);

// {"beta": op, "fiber": [op...], "literal_weight": "<int>", "fiber_count": n,
//  "agrees": b}
nlohmann::json to_json(const FiberReport& report);

struct WeightedEntry {
  Overpartition beta;
  std::size_t fiber_count = 0;
  BigInt literal_weight;
  bool agrees() const { return literal_weight == fiber_count; }
};

struct WeightedIdentityReport {
  unsigned n = 0;
  int k = 2;
  BigInt overpartition_count;  // pbar(n) by enumeration
  BigInt rrg_count;            // D_{k,k}(n) by enumeration
  // Every overpartition of n with at most k-1 squares, in enumeration order.
  std::vector<WeightedEntry> entries;
  BigInt fiber_sum;
  BigInt literal_sum;
  // Every image has weight n and at most k-1 squares.
  bool lands_in_targets = true;
  // fold(fold(x)) == fold(x) for every x.
  bool idempotent = true;
  // fold(beta) == beta for every target.
  bool fixes_targets = true;

  bool pass() const {
    return fiber_sum == overpartition_count && lands_in_targets && fixes_targets;
  }
  bool target_count_matches_rrg() const { return rrg_count == entries.size(); }
  std::vector<WeightedEntry> disagreements() const;
};

WeightedIdentityReport verify_weighted_identity(unsigned n, int k);

}  // namespace overdurfee

#endif  // OVERDURFEE_WEIGHTED_MAPS_HPP_
