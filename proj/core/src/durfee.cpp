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

#include "overdurfee/durfee.hpp"

#include <algorithm>
#include <sstream>

#include "overdurfee/enumerate.hpp"
#include "overdurfee/text_format.hpp"

namespace overdurfee {

std::vector<Part> DurfeeDissection::rows() const {
  std::vector<Part> out;
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::size_t DurfeeDissection::rows_in_levels(std::size_t count) const {
  std::size_t total = 0;
  for (std::size_t j = 0; j < count && j < square_sizes.size(); ++j) {
    total += square_sizes[j];
  }
  return total;
}

std::vector<Part> durfee_order(const Overpartition& op) {
  // Canonical order already sorts each block decreasingly.
  std::vector<Part> out;
  out.reserve(op.size());
  for (const Part& p : op.parts()) {
    if (p.overlined) out.push_back(p);
  }
  for (const Part& p : op.parts()) {
    if (!p.overlined) out.push_back(p);
  }
  return out;
}

std::size_t generalized_durfee_size(const Overpartition& op) {
  const std::size_t overlined = op.num_overlined();
  std::vector<PartValue> plain;
  for (const Part& p : op.parts()) {
    if (!p.overlined) plain.push_back(p.value);
  }
  // The condition holds at N = #overlined, so only larger N need checking,
  // and it fails for every N above the number of parts.
  std::size_t best = overlined;
  for (std::size_t n = overlined + 1; n <= op.size(); ++n) {
    const std::size_t need = n - overlined;
    if (need <= plain.size() && plain[need - 1] >= n) best = n;
  }
  return best;
}

std::size_t durfee_size(std::span<const PartValue> parts) {
  std::size_t d = 0;
  while (d < parts.size() && parts[d] >= d + 1) ++d;
  return d;
}

DurfeeDissection dissect(const Overpartition& op) {
  DurfeeDissection out;
  if (op.empty()) return out;
  const std::vector<Part> ordered = durfee_order(op);
  const std::size_t first = generalized_durfee_size(op);
  out.square_sizes.push_back(first);
  out.levels.emplace_back(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(first));

  std::vector<PartValue> rest;
  for (std::size_t r = first; r < ordered.size(); ++r) {
    if (ordered[r].overlined || ordered[r].value > first) {
      throw InvariantViolation("row below the generalized Durfee square is overlined or too long");
    }
    rest.push_back(ordered[r].value);
  }
  std::span<const PartValue> remaining(rest);
  while (!remaining.empty()) {
    const std::size_t d = durfee_size(remaining);
    out.square_sizes.push_back(d);
    std::vector<Part> level;
    for (std::size_t r = 0; r < d; ++r) level.push_back({remaining[r], false});
    out.levels.push_back(std::move(level));
    remaining = remaining.subspan(d);
  }
  return out;
}

std::size_t num_successive_squares(const Overpartition& op) {
  return dissect(op).num_squares();
}

bool is_square_block(const Overpartition& op) {
  return op.size() == generalized_durfee_size(op);
}

BigInt count_g(unsigned n) {
  BigInt count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (is_square_block(op)) ++count;
  });
  return count;
}

BigInt count_at_most_squares(unsigned n, std::size_t max_squares) {
  if (max_squares == 0) throw PreconditionError("square bound must be positive");
  BigInt count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (num_successive_squares(op) <= max_squares) ++count;
  });
  return count;
}

nlohmann::json to_json(const DurfeeDissection& d) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    if (j == 0) {
      levels.push_back(to_json(std::span(d.levels[0])));
      continue;
    }
    nlohmann::json plain = nlohmann::json::array();
    for (const Part& p : d.levels[j]) plain.push_back(p.value);
    levels.push_back(std::move(plain));
  }
  return {{"sizes", d.square_sizes}, {"levels", std::move(levels)}};
}

std::string render_ferrers(const DurfeeDissection& d) {
  std::size_t label_width = 0;
  for (const auto& level : d.levels) {
    for (const Part& p : level) {
      label_width = std::max(label_width, std::to_string(p.value).size() + 1);
    }
  }
  std::ostringstream out;
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    const std::size_t size = d.square_sizes[j];
    for (const Part& p : d.levels[j]) {
      std::string label = std::to_string(p.value) + (p.overlined ? "o" : "");
      label.resize(label_width, ' ');
      std::string line = label + " ";
      const PartValue width = std::max<PartValue>(p.value, size);
      for (PartValue c = 0; c < width; ++c) {
        if (c == size) line += "| ";
        if (c < p.value) {
          line += (c + 1 == p.value && p.overlined) ? "* " : "o ";
        } else {
          line += "  ";
        }
      }
      if (p.value <= size) line += "|";
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line;
      out << '\n';
    }
    out << std::string(label_width + 1, ' ') << std::string(2 * size + 1, '-') << '\n';
  }
  return out.str();
}

}  // namespace overdurfee
