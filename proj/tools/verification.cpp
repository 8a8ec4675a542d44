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

#include "verification.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/generating_functions.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/text_format.hpp"
#include "parallel.hpp"

namespace overdurfee::tools {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigInt count_overpartitions(unsigned n) {
  BigInt count = 0;
  for_each_overpartition(n, [&](const Overpartition&) { ++count; });
  return count;
}

// Round trips of the block bijection at weight n, plus the check that
// split_block accepts exactly the square blocks.
std::vector<std::pair<std::string, bool>> block_checks(unsigned n) {
  bool pairs_round_trip = true;
  bool image_is_block = true;
  for (const BlockPair& pair : block_pairs_of_weight(n)) {
    const Overpartition op = assemble_block(pair);
    if (!is_square_block(op) || sigma(op) != n) image_is_block = false;
    if (split_block(op) != pair) pairs_round_trip = false;
  }
  bool blocks_round_trip = true;
  bool accepts_exactly_blocks = true;
  for_each_overpartition(n, [&](const Overpartition& op) {
    bool accepted = true;
    try {
      const BlockPair pair = split_block(op);
      if (assemble_block(pair) != op) blocks_round_trip = false;
    } catch (const PreconditionError&) {
      accepted = false;
    }
    if (accepted != is_square_block(op)) accepts_exactly_blocks = false;
  });
  return {{"pairs_round_trip", pairs_round_trip},
          {"blocks_round_trip", blocks_round_trip},
          {"image_is_block", image_is_block},
          {"inverse_domain", accepts_exactly_blocks}};
}

std::string param_text(const VerificationReport& r) {
  std::string out;
  for (const auto& [name, value] : r.params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

bool VerificationRow::ok() const {
  for (const auto& [name, value] : values) {
    if (value != values.front().second) return false;
  }
  for (const auto& [name, passed] : checks) {
    if (!passed) return false;
  }
  return true;
}

bool VerificationReport::pass() const {
  for (const auto& row : rows) {
    if (!row.ok()) return false;
  }
  return true;
}

VerificationReport verify_eq4(unsigned max_n, unsigned enum_max_n, unsigned jobs) {
  const auto start = Clock::now();
  VerificationReport report{"eq4", {{"max-n", static_cast<int>(max_n)}}, {}, {}, 0, 0.0};
  const QSeries product = gf_overpartitions_product(max_n);
  const QSeries sum = gf_overpartitions_sum(max_n);
  report.rows = parallel_map<VerificationRow>(max_n + 1, jobs, [&](std::size_t n) {
    VerificationRow row;
    row.n = static_cast<unsigned>(n);
    row.values = {{"product", product[n]}, {"sum", sum[n]}};
    if (n <= enum_max_n) row.values.emplace_back("enumeration", count_overpartitions(row.n));
    return row;
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_thm21(unsigned max_n, unsigned jobs) {
  const auto start = Clock::now();
  VerificationReport report{"thm21", {{"max-n", static_cast<int>(max_n)}}, {}, {}, 0, 0.0};
  const QSeries series = gf_g(max_n);
  report.rows = parallel_map<VerificationRow>(max_n + 1, jobs, [&](std::size_t n) {
    VerificationRow row;
    row.n = static_cast<unsigned>(n);
    row.values = {{"count", count_g(row.n)}, {"gf", series[n]}};
    row.checks = block_checks(row.n);
    return row;
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_thm22(unsigned max_n, int k, unsigned jobs) {
  const auto start = Clock::now();
  check_gordon_params(k, k);
  VerificationReport report{"thm22", {{"max-n", static_cast<int>(max_n)}, {"k", k}}, {}, {}, 0, 0.0};
  const QSeries dkk = gf_dkk(k, max_n);
  const QSeries squares = gf_at_most_squares(k, max_n);
  report.rows = parallel_map<VerificationRow>(max_n + 1, jobs, [&](std::size_t n) {
    VerificationRow row;
    row.n = static_cast<unsigned>(n);
    row.values = {{"squares_count", count_at_most_squares(row.n, static_cast<std::size_t>(k - 1))},
                  {"gf_dkk", dkk[n]},
                  {"gf_squares", squares[n]},
                  {"dkk_count", count_dki(row.n, k, k)}};
    return row;
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_eq5(unsigned max_n, int k, std::optional<int> i, unsigned jobs) {
  const auto start = Clock::now();
  std::vector<int> caps;
  if (i) {
    check_gordon_params(k, *i);
    caps.push_back(*i);
  } else {
    check_gordon_params(k, 1);
    for (int c = 1; c <= k; ++c) caps.push_back(c);
  }
  VerificationReport report{"eq5", {{"max-n", static_cast<int>(max_n)}, {"k", k}}, {}, {}, 0, 0.0};
  if (i) report.params.emplace_back("i", *i);
  for (int cap : caps) {
    const QSeries series = gf_dki(k, cap, max_n);
    auto rows = parallel_map<VerificationRow>(max_n + 1, jobs, [&](std::size_t n) {
      VerificationRow row;
      row.n = static_cast<unsigned>(n);
      row.label = "i=" + std::to_string(cap);
      row.values = {{"count", count_dki(row.n, k, cap)}, {"gf", series[n]}};
      return row;
    });
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_weighted(unsigned max_n, int k, unsigned jobs) {
  const auto start = Clock::now();
  check_gordon_params(k, k);
  VerificationReport report{"weighted", {{"max-n", static_cast<int>(max_n)}, {"k", k}}, {}, {}, 0, 0.0};
  const auto sweeps = parallel_map<WeightedIdentityReport>(
      max_n + 1, jobs, [&](std::size_t n) { return verify_weighted_identity(static_cast<unsigned>(n), k); });
  for (const auto& sweep : sweeps) {
    VerificationRow row;
    row.n = sweep.n;
    row.values = {{"pbar", sweep.overpartition_count}, {"fiber_sum", sweep.fiber_sum}};
    row.checks = {{"lands_in_targets", sweep.lands_in_targets},
                  {"idempotent", sweep.idempotent},
                  {"fixes_targets", sweep.fixes_targets},
                  {"targets_match_dkk", sweep.target_count_matches_rrg()}};
    row.info = {{"targets", BigInt(sweep.entries.size())},
                {"dkk", sweep.rrg_count},
                {"literal_sum", sweep.literal_sum}};
    report.rows.push_back(std::move(row));
    report.targets_checked += sweep.entries.size();
    for (auto& entry : sweep.disagreements()) report.disagreements.push_back({sweep.n, std::move(entry)});
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    if (!row.label.empty()) r["label"] = row.label;
    r["values"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : row.values) r["values"][name] = value.str();
    if (!row.checks.empty()) {
      r["checks"] = nlohmann::ordered_json::object();
      for (const auto& [name, passed] : row.checks) r["checks"][name] = passed;
    }
    if (!row.info.empty()) {
      r["info"] = nlohmann::ordered_json::object();
      for (const auto& [name, value] : row.info) r["info"][name] = value.str();
    }
    r["ok"] = row.ok();
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json out;
  out["identity"] = report.identity;
  out["params"] = std::move(params);
  out["rows"] = std::move(rows);
  if (report.identity == "weighted") {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& d : report.disagreements) {
      nlohmann::ordered_json item;
      item["n"] = d.n;
      item["beta"] = format(d.entry.beta);
      item["fiber_count"] = d.entry.fiber_count;
      item["literal_weight"] = d.entry.literal_weight.str();
      table.push_back(std::move(item));
    }
    out["targets_checked"] = report.targets_checked;
    out["literal_weight_disagreements"] = std::move(table);
  }
  out["pass"] = report.pass();
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity: " << report.identity << '\n';
  out << "params: " << param_text(report) << '\n';
  for (const auto& row : report.rows) {
    out << "n=" << row.n;
    if (!row.label.empty()) out << ' ' << row.label;
    for (const auto& [name, value] : row.values) out << ' ' << name << '=' << value;
    for (const auto& [name, passed] : row.checks) out << ' ' << name << '=' << (passed ? "yes" : "no");
    for (const auto& [name, value] : row.info) out << ' ' << name << '=' << value;
    out << (row.ok() ? " ok" : " MISMATCH") << '\n';
  }
  if (report.identity == "weighted") {
    out << "literal weight disagreements: " << report.disagreements.size() << " of "
        << report.targets_checked << " targets\n";
    for (const auto& d : report.disagreements) {
      out << "  n=" << d.n << " beta=" << (d.entry.beta.empty() ? "()" : format(d.entry.beta))
          << " fiber=" << d.entry.fiber_count << " literal=" << d.entry.literal_weight << '\n';
    }
  }
  out << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_csv(const VerificationReport& report) {
  // Column set is the union over rows, in first-seen order; missing cells
  // stay empty.
  std::vector<std::string> value_names, check_names, info_names;
  auto remember = [](std::vector<std::string>& names, const std::string& name) {
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  };
  for (const auto& row : report.rows) {
    for (const auto& v : row.values) remember(value_names, v.first);
    for (const auto& c : row.checks) remember(check_names, c.first);
    for (const auto& i : row.info) remember(info_names, i.first);
  }
  auto find = [](const auto& pairs, const std::string& name) {
    return std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == name; });
  };

  std::ostringstream out;
  out << "n,label";
  for (const auto& name : value_names) out << ',' << name;
  for (const auto& name : check_names) out << ',' << name;
  for (const auto& name : info_names) out << ',' << name;
  out << ",ok\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << row.label;
    for (const auto& name : value_names) {
      out << ',';
      if (auto it = find(row.values, name); it != row.values.end()) out << it->second;
    }
    for (const auto& name : check_names) {
      out << ',';
      if (auto it = find(row.checks, name); it != row.checks.end()) out << (it->second ? "true" : "false");
    }
    for (const auto& name : info_names) {
      out << ',';
      if (auto it = find(row.info, name); it != row.info.end()) out << it->second;
    }
    out << ',' << (row.ok() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace overdurfee::tools
