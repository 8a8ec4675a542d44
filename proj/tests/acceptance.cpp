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

// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks,
// each with its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/generating_functions.hpp"
#include "overdurfee/qseries.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/text_format.hpp"
#include "overdurfee/weighted_maps.hpp"
#include "verification.hpp"

namespace od = overdurfee;

namespace {

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<std::string()> check;  // empty string on success
};

std::string eq4_equality() {
  const od::QSeries product = od::gf_overpartitions_product(40);
  const od::QSeries sum = od::gf_overpartitions_sum(40);
  for (unsigned n = 0; n <= 40; ++n) {
    if (product[n] != sum[n]) return "product != sum at n=" + std::to_string(n);
  }
  for (unsigned n = 0; n <= 30; ++n) {
    if (od::BigInt(od::overpartitions_of(n).size()) != product[n]) return "enumeration differs at n=" + std::to_string(n);
  }
  if (product[3] != 8 || product[4] != 14) return "spot values";
  return {};
}

std::string block_bijection() {
  const od::QSeries g = od::gf_g(25);
  for (unsigned n = 0; n <= 25; ++n) {
    if (od::count_g(n) != g[n]) return "count_g differs at n=" + std::to_string(n);
  }
  for (unsigned n = 0; n <= 20; ++n) {
    for (const od::BlockPair& pair : od::block_pairs_of_weight(n)) {
      if (od::split_block(od::assemble_block(pair)) != pair) return "pair round trip at n=" + std::to_string(n);
    }
    std::string failure;
    od::for_each_overpartition(n, [&](const od::Overpartition& x) {
      if (failure.empty() && od::is_square_block(x) && od::assemble_block(od::split_block(x)) != x) {
        failure = "block round trip at " + od::format(x);
      }
    });
    if (!failure.empty()) return failure;
  }
  const od::BlockPair worked(od::Partition({7, 6, 5, 2, 1}), od::DistinctDelta({4, 3, 0}, 5));
  const od::Overpartition alpha = od::parse_overpartition("6o,5o,7,5,5");
  if (od::assemble_block(worked) != alpha || od::split_block(alpha) != worked) return "worked example";
  return {};
}

std::string gordon_consistency() {
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i) {
      const od::QSeries s = od::gf_dki(k, i, 25);
      for (unsigned n = 0; n <= 25; ++n) {
        if (od::count_dki(n, k, i) != s[n]) {
          return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " n=" + std::to_string(n);
        }
      }
    }
  }
  return {};
}

std::string bounded_squares() {
  for (int k = 2; k <= 4; ++k) {
    const od::QSeries s = od::gf_dkk(k, 25);
    for (unsigned n = 0; n <= 25; ++n) {
      const od::BigInt squares = od::count_at_most_squares(n, static_cast<std::size_t>(k - 1));
      if (squares != s[n] || squares != od::count_dki(n, k, k)) {
        return "k=" + std::to_string(k) + " n=" + std::to_string(n);
      }
    }
  }
  if (od::count_at_most_squares(3, 1) != 4 || od::gf_dkk(2, 3)[3] != 4 || od::count_dki(3, 2, 2) != 4) {
    return "spot value n=3 k=2";
  }
  return {};
}

std::string refined_durfee() {
  constexpr unsigned kOrder = 20;
  const od::RefinedQSeries total = od::gf_durfee_refined_total(kOrder);
  for (unsigned n = 0; n <= kOrder; ++n) {
    std::map<std::size_t, od::BigInt> brute;
    od::for_each_overpartition(n, [&](const od::Overpartition& x) { brute[x.num_overlined()] += 1; });
    for (std::size_t m = 0; m <= n + 1; ++m) {
      const auto it = brute.find(m);
      const od::BigInt expected = it == brute.end() ? od::BigInt(0) : it->second;
      if (total.coefficient(m, n) != expected) return "m=" + std::to_string(m) + " n=" + std::to_string(n);
    }
  }
  return {};
}

std::string weighted_identity() {
  for (int k : {2, 3}) {
    for (unsigned n = 0; n <= 20; ++n) {
      const od::WeightedIdentityReport r = od::verify_weighted_identity(n, k);
      if (!r.pass() || !r.idempotent) return "k=" + std::to_string(k) + " n=" + std::to_string(n);
      if (r.fiber_sum != od::BigInt(od::overpartitions_of(n).size())) return "fiber sum n=" + std::to_string(n);
    }
  }
  const od::WeightedIdentityReport small = od::verify_weighted_identity(3, 2);
  std::map<std::string, std::size_t> table;
  for (const auto& e : small.entries) table[od::format(e.beta)] = e.fiber_count;
  const std::map<std::string, std::size_t> expected{{"3", 3}, {"3o", 3}, {"2,1o", 1}, {"2o,1o", 1}};
  if (table != expected) return "fiber table at n=3 k=2";
  return {};
}

std::string literal_weight_diagnostic() {
  for (int k : {2, 3}) {
    const auto report = od::tools::verify_weighted(14, k, 2);
    if (!report.pass()) return "fiber identity fails for k=" + std::to_string(k);
    const auto json = od::tools::to_json(report);
    if (!json.contains("literal_weight_disagreements")) return "no disagreement table for k=" + std::to_string(k);
    std::size_t expected = 0;
    for (unsigned n = 0; n <= 14; ++n) expected += od::verify_weighted_identity(n, k).disagreements().size();
    if (json.at("literal_weight_disagreements").size() != expected) return "table size for k=" + std::to_string(k);
    if (od::tools::to_text(report).find("disagree") == std::string::npos) return "text table missing";
  }
  return {};
}

std::string dissection_figures() {
  const std::pair<const char*, const char*> figures[] = {
      {"7,6,6,5o,3o,3,2,1o", "sizes: 6,2\n"},
      {"8,7o,6,6,5o,5,5,3,1o", "sizes: 6,3\n"},
  };
  for (const auto& [input, expected] : figures) {
    std::ostringstream out;
    std::ostringstream err;
    if (od::tools::run_cli({"dissect", input}, out, err) != od::tools::kExitOk) return std::string("exit code for ") + input;
    if (out.str().rfind(expected, 0) != 0) return std::string("sizes for ") + input;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"overpartition product equals sum and enumeration", 10, eq4_equality},
      {"block bijection and g(n) generating function", 30, block_bijection},
      {"Gordon overpartition counts match generating functions", 60, gordon_consistency},
      {"bounded successive squares match D_{k,k}", 60, bounded_squares},
      {"refined Durfee generating function", 10, refined_durfee},
      {"weighted folding identity", 120, weighted_identity},
      {"literal weight disagreement table", 60, literal_weight_diagnostic},
      {"dissection figures", 1, dissection_figures},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed >= c.budget_seconds) failure = "over time budget";
    std::printf("[%s] %d %s (%.3fs, limit %.0fs)%s%s\n", failure.empty() ? "PASS" : "FAIL", index, c.name,
                elapsed, c.budget_seconds, failure.empty() ? "" : ": ", failure.c_str());
    if (!failure.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
