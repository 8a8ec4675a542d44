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

// Text and JSON forms of partitions and overpartitions.
//
// Text grammar:  op := "" | part ("," part)*   part := DIGITS ["o"]
// A trailing "o" marks an overlined part. Whitespace around the whole string
// and around each token is ignored. Output is canonical with no spaces.
//
// JSON form: [{"v": 7, "o": false}, ...] in canonical order.

#ifndef OVERDURFEE_TEXT_FORMAT_HPP_
#define OVERDURFEE_TEXT_FORMAT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "overdurfee/partition.hpp"

namespace overdurfee {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Overpartition parse_overpartition(std::string_view text);
std::string format(const Overpartition& op);
std::string format(std::span<const Part> rows);

// Comma-separated positive integers in any order, returned sorted.
Partition parse_partition(std::string_view text);
// Comma-separated nonnegative integers, kept in input order.
std::vector<PartValue> parse_values(std::string_view text);
std::string format(const Partition& p);
std::string format(std::span<const PartValue> values);

nlohmann::json to_json(const Overpartition& op);
nlohmann::json to_json(std::span<const Part> rows);
Overpartition overpartition_from_json(const nlohmann::json& j);

}  // namespace overdurfee

#endif  // OVERDURFEE_TEXT_FORMAT_HPP_
