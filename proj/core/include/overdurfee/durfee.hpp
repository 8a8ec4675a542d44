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

// Generalized Durfee square of an overpartition and the successive Durfee
// square dissection built on top of it.
//
// The generalized square has size N when N is the largest integer such that
// (#overlined parts) + (#non-overlined parts >= N) >= N. In Durfee order
// (overlined parts first, then non-overlined, each block decreasing) the
// square occupies the first N rows. Every row after it is non-overlined and
// at most N, so the deeper levels are ordinary Durfee squares of the plain
// partition that remains.

#ifndef OVERDURFEE_DURFEE_HPP_
#define OVERDURFEE_DURFEE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "overdurfee/partition.hpp"

namespace overdurfee {

struct DurfeeDissection {
  // N_1 >= N_2 >= ... ; empty only for the empty overpartition.
  std::vector<std::size_t> square_sizes;
  // levels[j] holds the square_sizes[j] rows of level j+1. Level 1 rows are in
  // Durfee order; deeper rows are never overlined.
  std::vector<std::vector<Part>> levels;

  std::size_t num_squares() const { return square_sizes.size(); }
  // Concatenation of all levels; equals durfee_order of the source.
  std::vector<Part> rows() const;
  // Number of rows in the first `count` levels.
  std::size_t rows_in_levels(std::size_t count) const;
};

std::vector<Part> durfee_order(const Overpartition& op);

std::size_t generalized_durfee_size(const Overpartition& op);

// Classical Durfee square: the largest d with parts[d-1] >= d.
std::size_t durfee_size(std::span<const PartValue> parts);

DurfeeDissection dissect(const Overpartition& op);

std::size_t num_successive_squares(const Overpartition& op);

// Overpartitions whose number of parts equals their generalized Durfee size.
bool is_square_block(const Overpartition& op);

// Brute-force counts over all overpartitions of n.
BigInt count_g(unsigned n);
BigInt count_at_most_squares(unsigned n, std::size_t max_squares);

// {"sizes": [...], "levels": [[{"v":..,"o":..}, ...], [5, 5, 3], ...]}
nlohmann::json to_json(const DurfeeDissection& d);

// ASCII Ferrers diagram in Durfee order. Every row is labelled with its part
// ("5o" for an overlined 5); the last node of an overlined row is drawn '*'.
// A '|' closes each level's square and a dashed line follows each level.
std::string render_ferrers(const DurfeeDissection& d);

}  // namespace overdurfee

#endif  // OVERDURFEE_DURFEE_HPP_
