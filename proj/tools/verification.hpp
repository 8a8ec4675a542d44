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

// Batch verification sweeps behind `overdurfee verify`.

#ifndef OVERDURFEE_TOOLS_VERIFICATION_HPP_
#define OVERDURFEE_TOOLS_VERIFICATION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "overdurfee/partition.hpp"
#include "overdurfee/weighted_maps.hpp"

namespace overdurfee::tools {

struct VerificationRow {
  unsigned n = 0;
  std::string label;
  // Must all be equal for the row to pass.
  std::vector<std::pair<std::string, BigInt>> values;
  // Must all be true for the row to pass.
  std::vector<std::pair<std::string, bool>> checks;
  // Reported, never compared.
  std::vector<std::pair<std::string, BigInt>> info;

  bool ok() const;
};

struct Disagreement {
  unsigned n = 0;
  WeightedEntry entry;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, int>> params;
  std::vector<VerificationRow> rows;
  // Only filled by the weighted sweep.
  std::vector<Disagreement> disagreements;
  std::size_t targets_checked = 0;
  double elapsed_seconds = 0.0;

  bool pass() const;
};

VerificationReport verify_eq4(unsigned max_n, unsigned enum_max_n, unsigned jobs);
VerificationReport verify_thm21(unsigned max_n, unsigned jobs);
VerificationReport verify_thm22(unsigned max_n, int k, unsigned jobs);
// All i in [1, k] when `i` is empty.
VerificationReport verify_eq5(unsigned max_n, int k, std::optional<int> i, unsigned jobs);
VerificationReport verify_weighted(unsigned max_n, int k, unsigned jobs);

// Elapsed time is left out; the output is byte-reproducible.
nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

}  // namespace overdurfee::tools

#endif  // OVERDURFEE_TOOLS_VERIFICATION_HPP_
