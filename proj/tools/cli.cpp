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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/generating_functions.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/text_format.hpp"
#include "overdurfee/weighted_maps.hpp"
#include "verification.hpp"

namespace overdurfee::tools {
namespace {

constexpr std::size_t kDefaultMaxOrder = 200;

// Any failure that should end the run with the usage exit code.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Write results to this file instead of stdout");
}

std::size_t max_order() {
  const char* raw = std::getenv("OVERDURFEE_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOrder;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw UsageError(std::string("OVERDURFEE_MAX_ORDER is not a number: ") + raw);
  }
}

template <typename T>
T require(const std::optional<T>& value, const char* flag, const std::string& what) {
  if (!value) throw UsageError(what + " requires " + flag);
  return *value;
}

std::string json_line(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

std::string value_lines(const std::string& style, const std::string& kind, unsigned n,
                        const BigInt& value) {
  if (style == "json") {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["n"] = n;
    j["value"] = value.str();
    return json_line(j);
  }
  if (style == "csv") return "kind,n,value\n" + kind + "," + std::to_string(n) + "," + value.str() + "\n";
  return value.str() + "\n";
}

std::string series_lines(const std::string& style, const QSeries& s) {
  std::ostringstream out;
  if (style == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const BigInt& c : s.coeffs()) j.push_back(c.str());
    return json_line(j);
  }
  if (style == "csv") out << "n,coefficient\n";
  const char sep = style == "csv" ? ',' : '\t';
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << sep << s[n] << '\n';
  return out.str();
}

std::string refined_lines(const std::string& style, const RefinedQSeries& s) {
  std::ostringstream out;
  if (style == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t m = 0; m < s.a_degrees(); ++m) row.push_back(s.coefficient(m, n).str());
      j.push_back(std::move(row));
    }
    return json_line(j);
  }
  if (style == "csv") out << "n,m,coefficient\n";
  const char sep = style == "csv" ? ',' : '\t';
  for (std::size_t n = 0; n <= s.order(); ++n) {
    for (std::size_t m = 0; m < s.a_degrees(); ++m) {
      const BigInt c = s.coefficient(m, n);
      if (!c.is_zero()) out << n << sep << m << sep << c << '\n';
    }
  }
  return out.str();
}

std::string rows_lines(const std::string& style, std::span<const Part> rows) {
  if (style == "json") return to_json(rows).dump() + "\n";
  if (style == "csv") {
    std::ostringstream out;
    out << "value,overlined\n";
    for (const Part& p : rows) out << p.value << ',' << (p.overlined ? "true" : "false") << '\n';
    return out.str();
  }
  return format(rows) + "\n";
}

std::string overpartition_lines(const std::string& style, const Overpartition& op) {
  return rows_lines(style, op.parts());
}

std::string dissection_lines(const std::string& style, const DurfeeDissection& d) {
  if (style == "json") return to_json(d).dump() + "\n";
  std::ostringstream out;
  if (style == "csv") {
    out << "level,size,rows\n";
    for (std::size_t j = 0; j < d.levels.size(); ++j) {
      out << j + 1 << ',' << d.square_sizes[j] << ",\"" << overdurfee::format(std::span(d.levels[j])) << "\"\n";
    }
    return out.str();
  }
  std::vector<PartValue> sizes(d.square_sizes.begin(), d.square_sizes.end());
  out << "sizes: " << (sizes.empty() ? "()" : overdurfee::format(std::span<const PartValue>(sizes))) << '\n';
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    out << "level " << j + 1 << ": " << overdurfee::format(std::span(d.levels[j])) << '\n';
  }
  out << render_ferrers(d);
  return out.str();
}

void emit(const OutputOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open --out file " + opts.out_path);
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact overpartition, Durfee square and q-series verification"};
  app.name("overdurfee");
  app.require_subcommand(1);

  OutputOptions opts;

  // count
  std::string count_kind;
  unsigned count_n = 0;
  std::optional<int> opt_k, opt_i, opt_j;
  auto* count = app.add_subcommand("count", "Exact count by exhaustive enumeration");
  count->add_option("kind", count_kind, "What to count")
      ->required()
      ->check(CLI::IsMember({"p", "pbar", "g", "dki", "dkk", "squares"}));
  count->add_option("--n", count_n, "Weight")->required();
  count->add_option("--k", opt_k, "Gordon modulus k >= 2");
  count->add_option("--i", opt_i, "Gordon cap 1 <= i <= k");
  count->add_option("--j", opt_j, "Maximum number of successive squares");
  add_output_options(count, opts);

  // series
  std::string series_name;
  std::size_t series_order = 0;
  std::optional<std::size_t> opt_size;
  auto* series = app.add_subcommand("series", "Generating function coefficients");
  series->add_option("name", series_name, "Generating function")
      ->required()
      ->check(CLI::IsMember({"partitions", "overpartitions-product", "overpartitions-sum", "g",
                             "dki", "dkk", "at-most-squares", "durfee-refined"}));
  series->add_option("--order", series_order, "Truncation degree")->required();
  series->add_option("--k", opt_k, "Gordon modulus k >= 2");
  series->add_option("--i", opt_i, "Gordon cap 1 <= i <= k");
  series->add_option("--N", opt_size, "Generalized Durfee size (durfee-refined; all sizes if omitted)");
  add_output_options(series, opts);

  // verify
  std::string identity;
  unsigned max_n = 0;
  unsigned enum_max_n = 30;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Batch identity verification");
  verify->add_option("identity", identity, "Identity to verify")
      ->required()
      ->check(CLI::IsMember({"eq4", "thm21", "thm22", "eq5", "weighted"}));
  verify->add_option("--max-n", max_n, "Largest weight checked")->required();
  verify->add_option("--k", opt_k, "Gordon modulus k >= 2");
  verify->add_option("--i", opt_i, "Gordon cap (eq5; all caps if omitted)");
  verify->add_option("--enum-max-n", enum_max_n, "Largest weight enumerated for eq4");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_options(verify, opts);

  // map
  std::string map_kind;
  std::optional<std::string> opt_op, opt_gamma, opt_delta;
  auto* map = app.add_subcommand("map", "Apply the folding map or the block bijection");
  map->add_option("kind", map_kind, "Map")
      ->required()
      ->check(CLI::IsMember({"phi", "thm21-forward", "thm21-inverse"}));
  map->add_option("--op", opt_op, "Overpartition, e.g. \"6o,5o,7,5,5\"");
  map->add_option("--k", opt_k, "Gordon modulus k >= 2 (phi)");
  map->add_option("--gamma", opt_gamma, "Distinct base parts (thm21-forward)");
  map->add_option("--delta", opt_delta, "Distinct shifts (thm21-forward)");
  add_output_options(map, opts);

  // fiber
  auto* fiber = app.add_subcommand("fiber", "Preimage of a target under the folding map");
  fiber->add_option("--op", opt_op, "Target overpartition")->required();
  fiber->add_option("--k", opt_k, "Gordon modulus k >= 2")->required();
  add_output_options(fiber, opts);

  // dissect
  std::string dissect_input;
  auto* dissect_cmd = app.add_subcommand("dissect", "Successive Durfee square dissection");
  dissect_cmd->add_option("op", dissect_input, "Overpartition, e.g. \"8,7o,6,6,5o,5,5,3,1o\"")->required();
  add_output_options(dissect_cmd, opts);

  std::vector<std::string> argv_storage{"overdurfee"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      BigInt value;
      if (count_kind == "p") {
        value = partitions_of(count_n).size();
      } else if (count_kind == "pbar") {
        value = 0;
        for_each_overpartition(count_n, [&](const Overpartition&) { ++value; });
      } else if (count_kind == "g") {
        value = count_g(count_n);
      } else if (count_kind == "dki") {
        value = count_dki(count_n, require(opt_k, "--k", "dki"), require(opt_i, "--i", "dki"));
      } else if (count_kind == "dkk") {
        const int k = require(opt_k, "--k", "dkk");
        value = count_dki(count_n, k, k);
      } else {
        int j = 0;
        if (opt_j) {
          j = *opt_j;
        } else if (opt_k) {
          j = *opt_k - 1;
        } else {
          throw UsageError("squares requires --j (or --k, meaning j = k-1)");
        }
        if (j < 1) throw UsageError("--j must be positive");
        value = count_at_most_squares(count_n, static_cast<std::size_t>(j));
      }
      emit(opts, value_lines(opts.format, count_kind, count_n, value), out);
      return kExitOk;
    }

    if (series->parsed()) {
      const std::size_t cap = max_order();
      if (series_order > cap) {
        throw UsageError("order " + std::to_string(series_order) +
                         " exceeds OVERDURFEE_MAX_ORDER=" + std::to_string(cap));
      }
      std::string text;
      if (series_name == "durfee-refined") {
        const RefinedQSeries s = opt_size ? gf_durfee_refined(*opt_size, series_order)
                                          : gf_durfee_refined_total(series_order);
        text = refined_lines(opts.format, s);
      } else {
        QSeries s;
        if (series_name == "partitions") {
          s = gf_partitions(series_order);
        } else if (series_name == "overpartitions-product") {
          s = gf_overpartitions_product(series_order);
        } else if (series_name == "overpartitions-sum") {
          s = gf_overpartitions_sum(series_order);
        } else if (series_name == "g") {
          s = gf_g(series_order);
        } else if (series_name == "dki") {
          s = gf_dki(require(opt_k, "--k", "dki"), require(opt_i, "--i", "dki"), series_order);
        } else if (series_name == "dkk") {
          s = gf_dkk(require(opt_k, "--k", "dkk"), series_order);
        } else {
          s = gf_at_most_squares(require(opt_k, "--k", "at-most-squares"), series_order);
        }
        text = series_lines(opts.format, s);
      }
      emit(opts, text, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      VerificationReport report;
      if (identity == "eq4") {
        report = verify_eq4(max_n, enum_max_n, jobs);
      } else if (identity == "thm21") {
        report = verify_thm21(max_n, jobs);
      } else if (identity == "thm22") {
        report = verify_thm22(max_n, require(opt_k, "--k", "thm22"), jobs);
      } else if (identity == "eq5") {
        report = verify_eq5(max_n, require(opt_k, "--k", "eq5"), opt_i, jobs);
      } else {
        report = verify_weighted(max_n, require(opt_k, "--k", "weighted"), jobs);
      }
      std::string text;
      if (opts.format == "json") {
        text = json_line(to_json(report));
      } else if (opts.format == "csv") {
        text = to_csv(report);
      } else {
        text = to_text(report);
      }
      emit(opts, text, out);
      err << "elapsed: " << report.elapsed_seconds << " s\n";
      return report.pass() ? kExitOk : kExitVerificationFailed;
    }

    if (map->parsed()) {
      if (map_kind == "thm21-forward") {
        const Partition base = parse_partition(require(opt_gamma, "--gamma", "thm21-forward"));
        const auto shifts = parse_values(opt_delta.value_or(""));
        const BlockPair pair(base, DistinctDelta::from_unsorted(shifts, base.size()));
        const Overpartition block = assemble_block(pair);
        // Text and CSV list the block in Durfee order (overlined parts first).
        const std::string text = opts.format == "json"
                                     ? overpartition_lines(opts.format, block)
                                     : rows_lines(opts.format, durfee_order(block));
        emit(opts, text, out);
        return kExitOk;
      }
      const Overpartition op = parse_overpartition(require(opt_op, "--op", map_kind));
      if (map_kind == "phi") {
        emit(opts, overpartition_lines(opts.format, fold_squares(op, require(opt_k, "--k", "phi"))), out);
        return kExitOk;
      }
      const BlockPair pair = split_block(op);
      std::string text;
      if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["gamma"] = pair.base().parts();
        j["delta"] = pair.shifts().parts();
        text = json_line(j);
      } else if (opts.format == "csv") {
        text = "gamma,delta\n\"" + format(pair.base()) + "\",\"" +
               format(std::span(pair.shifts().parts())) + "\"\n";
      } else {
        text = "gamma=" + format(pair.base()) + " delta=" + format(std::span(pair.shifts().parts())) + "\n";
      }
      emit(opts, text, out);
      return kExitOk;
    }

    if (fiber->parsed()) {
      const FiberReport report = fiber_of(parse_overpartition(*opt_op), *opt_k);
      std::string text;
      if (opts.format == "json") {
        text = to_json(report).dump() + "\n";
      } else {
        std::ostringstream s;
        if (opts.format == "csv") {
          s << "member\n";
          for (const auto& op : report.fiber) s << '"' << format(op) << "\"\n";
        } else {
          s << "beta: " << format(report.beta) << '\n';
          s << "fiber_count: " << report.fiber.size() << '\n';
          s << "literal_weight: " << report.literal_weight << '\n';
          s << "agrees: " << (report.agrees ? "yes" : "no") << '\n';
          for (const auto& op : report.fiber) s << "  " << (op.empty() ? "()" : format(op)) << '\n';
        }
        text = s.str();
      }
      emit(opts, text, out);
      return kExitOk;
    }

    if (dissect_cmd->parsed()) {
      emit(opts, dissection_lines(opts.format, dissect(parse_overpartition(dissect_input))), out);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    // ParseError, PreconditionError and UsageError all land here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace overdurfee::tools
