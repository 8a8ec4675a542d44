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

#include "overdurfee/weighted_maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/text_format.hpp"

namespace overdurfee {
namespace {

void check_k(int k) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
}

bool has_distinct_parts(const Partition& p) {
  return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

}  // namespace

BlockPair::BlockPair(Partition base, DistinctDelta shifts)
    : base_(std::move(base)), shifts_(std::move(shifts)) {
  if (!has_distinct_parts(base_)) {
    throw PreconditionError("block base must have distinct parts");
  }
  if (shifts_.bound() != base_.size()) {
    throw PreconditionError("shift bound must equal the number of base parts");
  }
}

PartValue sigma(const BlockPair& pair) { return sigma(pair.base()) + sigma(pair.shifts()); }

Overpartition assemble_block(const BlockPair& pair) {
  std::vector<Part> rows;
  rows.reserve(pair.size());
  for (PartValue v : pair.base().parts()) rows.push_back({v, true});
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    if (pair.shifts().contains(i - 1)) {
      rows[i - 1].value += i - 1;
      rows[i - 1].overlined = false;
    }
  }
  return Overpartition(std::move(rows));
}

BlockPair split_block(const Overpartition& op) {
  if (!is_square_block(op)) {
    throw PreconditionError("'" + format(op) +
                            "' is not a square block (parts != generalized Durfee size)");
  }
  std::vector<PartValue> base;
  std::vector<PartValue> shifts;
  for (const Part& p : op.parts()) {
    if (p.overlined) base.push_back(p.value);
  }
  // Non-overlined parts in decreasing order. For each, the smallest m with
  // value - m > base[m] (base read as 0 past its end); base stays sorted.
  for (const Part& p : op.parts()) {
    if (p.overlined) continue;
    std::size_t m = 0;
    while (m < p.value && p.value - m <= (m < base.size() ? base[m] : 0)) ++m;
    const PartValue inserted = p.value - m;
    base.insert(std::upper_bound(base.begin(), base.end(), inserted, std::greater<>()),
                inserted);
    shifts.push_back(m);
  }
  Partition base_partition(std::move(base));
  const std::size_t bound = base_partition.size();
  return BlockPair(std::move(base_partition), DistinctDelta::from_unsorted(std::move(shifts), bound));
}

std::vector<BlockPair> block_pairs_of_weight(unsigned n) {
  std::vector<BlockPair> out;
  for (unsigned base_weight = n + 1; base_weight-- > 0;) {
    for (const Partition& base : partitions_of(base_weight)) {
      if (!has_distinct_parts(base)) continue;
      const std::size_t size = base.size();
      const PartValue shift_weight = n - base_weight;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        std::vector<PartValue> shifts;
        PartValue total = 0;
        for (std::size_t b = size; b-- > 0;) {
          if ((mask >> b) & 1U) {
            shifts.push_back(b);
            total += b;
          }
        }
        if (total == shift_weight) out.emplace_back(base, DistinctDelta(std::move(shifts), size));
      }
    }
  }
  return out;
}

Overpartition fold_squares(const Overpartition& op, int k) {
  check_k(k);
  const auto max_squares = static_cast<std::size_t>(k - 1);
  const DurfeeDissection original = dissect(op);
  if (original.num_squares() <= max_squares) return op;

  const PartValue first = original.square_sizes[0];
  const Overpartition shifted = shift_overlined(op, first);
  const DurfeeDissection layout = dissect(shifted);
  if (layout.square_sizes != original.square_sizes) {
    throw InvariantViolation("shifting overlined parts changed the square sizes of '" +
                             format(op) + "'");
  }

  const std::size_t top = layout.rows_in_levels(max_squares);
  const auto& rows = shifted.parts();
  std::vector<PartValue> below;
  for (std::size_t r = top; r < rows.size(); ++r) {
    if (rows[r].overlined) throw InvariantViolation("overlined row below the folded squares");
    below.push_back(rows[r].value);
  }
  std::vector<PartValue> expected_below;
  for (std::size_t j = max_squares; j < layout.levels.size(); ++j) {
    for (const Part& p : layout.levels[j]) expected_below.push_back(p.value);
  }
  if (below != expected_below) {
    throw InvariantViolation("sorted tail differs from the rows below the folded squares");
  }

  const Partition arm = conjugate(Partition(std::move(below)));
  std::vector<Part> folded = add_overlay_rows(std::span(rows).first(top), arm.parts());
  for (Part& p : folded) {
    if (p.overlined) p.value -= first;
  }
  Overpartition result;
  try {
    result = Overpartition(std::move(folded));
  } catch (const PreconditionError& e) {
    throw InvariantViolation("folding '" + format(op) + "' produced " + e.what());
  }
  if (sigma(result) != sigma(op) || num_successive_squares(result) > max_squares) {
    throw InvariantViolation("folding '" + format(op) + "' left the target set");
  }
  return result;
}

BigInt literal_weight(const Overpartition& beta, int k) {
  check_k(k);
  const auto max_squares = static_cast<std::size_t>(k - 1);
  const DurfeeDissection d = dissect(beta);
  if (d.num_squares() > max_squares) {
    throw PreconditionError("'" + format(beta) + "' has more than k-1 successive squares");
  }
  if (d.num_squares() < max_squares) return 1;

  const Overpartition shifted = shift_overlined(beta, d.square_sizes[0]);
  const auto& rows = shifted.parts();
  BigInt weight = 1;
  for (std::size_t i = 1; i <= d.square_sizes[max_squares - 1]; ++i) {
    const Part& upper = rows[i - 1];
    const Part lower = i < rows.size() ? rows[i] : Part{0, false};
    weight *= BigInt(upper.value) - BigInt(lower.value) + 1 - (lower.overlined ? 1 : 0);
  }
  return weight;
}

FiberReport fiber_of(const Overpartition& beta, int k) {
  check_k(k);
  if (num_successive_squares(beta) > static_cast<std::size_t>(k - 1)) {
    throw PreconditionError("'" + format(beta) + "' has more than k-1 successive squares");
  }
  FiberReport report{beta, {}, literal_weight(beta, k), false};
  for_each_overpartition(static_cast<unsigned>(sigma(beta)), [&](const Overpartition& op) {
    if (fold_squares(op, k) == beta) report.fiber.push_back(op);
  });
  report.agrees = report.literal_weight == report.fiber.size();
  return report;
}

nlohmann::json to_json(const FiberReport& report) {
  nlohmann::json fiber = nlohmann::json::array();
  for (const auto& op : report.fiber) fiber.push_back(to_json(op));
  return {{"beta", to_json(report.beta)},
          {"fiber", std::move(fiber)},
          {"literal_weight", report.literal_weight.str()},
          {"fiber_count", report.fiber.size()},
          {"agrees", report.agrees}};
}

std::vector<WeightedEntry> WeightedIdentityReport::disagreements() const {
  std::vector<WeightedEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const WeightedEntry& e) { return !e.agrees(); });
  return out;
}

WeightedIdentityReport verify_weighted_identity(unsigned n, int k) {
  check_k(k);
  const auto max_squares = static_cast<std::size_t>(k - 1);
  WeightedIdentityReport report;
  report.n = n;
  report.k = k;
  report.rrg_count = count_dki(n, k, k);

  std::map<Overpartition, std::size_t> fiber_sizes;
  std::vector<Overpartition> targets;
  for_each_overpartition(n, [&](const Overpartition& op) {
    ++report.overpartition_count;
    const Overpartition image = fold_squares(op, k);
    if (sigma(image) != n || num_successive_squares(image) > max_squares) {
      report.lands_in_targets = false;
    }
    if (fold_squares(image, k) != image) report.idempotent = false;
    ++fiber_sizes[image];
    if (num_successive_squares(op) <= max_squares) {
      targets.push_back(op);
      if (image != op) report.fixes_targets = false;
    }
  });

  std::size_t covered = 0;
  for (auto& beta : targets) {
    const auto it = fiber_sizes.find(beta);
    const std::size_t count = it == fiber_sizes.end() ? 0 : it->second;
    covered += count;
    WeightedEntry entry{std::move(beta), count, 0};
    entry.literal_weight = literal_weight(entry.beta, k);
    report.fiber_sum += entry.fiber_count;
    report.literal_sum += entry.literal_weight;
    report.entries.push_back(std::move(entry));
  }
  // Images outside the target list would be missing from fiber_sum.
  std::size_t total = 0;
  for (const auto& [image, count] : fiber_sizes) total += count;
  if (covered != total) report.lands_in_targets = false;
  return report;
}

}  // namespace overdurfee
