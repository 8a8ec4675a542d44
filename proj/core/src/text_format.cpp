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

#include "overdurfee/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace overdurfee {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  text = trim(text);
  if (text.empty()) return tokens;
  for (;;) {
    const auto comma = text.find(',');
    tokens.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return tokens;
}

PartValue parse_digits(std::string_view token, std::string_view whole) {
  const bool all_digits =
      !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
  if (!all_digits) {
    throw ParseError("malformed token '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  }
  PartValue value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value > kMaxPartValue) {
    throw ParseError("value out of range: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Overpartition parse_overpartition(std::string_view text) {
  std::vector<Part> parts;
  for (std::string_view token : split_tokens(text)) {
    bool overlined = false;
    if (!token.empty() && token.back() == 'o') {
      overlined = true;
      token.remove_suffix(1);
    }
    const PartValue value = parse_digits(token, text);
    if (value == 0) throw ParseError("part values must be positive");
    parts.push_back({value, overlined});
  }
  try {
    return Overpartition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string format(std::span<const Part> rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rows[i].value);
    if (rows[i].overlined) out += 'o';
  }
  return out;
}

std::string format(const Overpartition& op) { return format(std::span(op.parts())); }

Partition parse_partition(std::string_view text) {
  std::vector<PartValue> values = parse_values(text);
  if (std::find(values.begin(), values.end(), PartValue{0}) != values.end()) {
    throw ParseError("partition parts must be positive");
  }
  return Partition::from_unsorted(std::move(values));
}

std::vector<PartValue> parse_values(std::string_view text) {
  std::vector<PartValue> values;
  for (std::string_view token : split_tokens(text)) {
    values.push_back(parse_digits(token, text));
  }
  return values;
}

std::string format(std::span<const PartValue> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format(const Partition& p) { return format(std::span(p.parts())); }

nlohmann::json to_json(std::span<const Part> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const Part& p : rows) out.push_back({{"v", p.value}, {"o", p.overlined}});
  return out;
}

nlohmann::json to_json(const Overpartition& op) { return to_json(std::span(op.parts())); }

Overpartition overpartition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("overpartition JSON must be an array");
  std::vector<Part> parts;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("v") || !item.contains("o") ||
        !item["v"].is_number_integer() || !item["o"].is_boolean()) {
      throw ParseError("malformed overpartition JSON part: " + item.dump());
    }
    const auto value = item["v"].get<std::int64_t>();
    if (value <= 0 || static_cast<PartValue>(value) > kMaxPartValue) {
      throw ParseError("part value out of range");
    }
    parts.push_back({static_cast<PartValue>(value), item["o"].get<bool>()});
  }
  try {
    return Overpartition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace overdurfee
