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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "overdurfee/durfee.hpp"
#include "overdurfee/enumerate.hpp"
#include "overdurfee/text_format.hpp"

namespace overdurfee {
namespace {

Overpartition op(const char* text) { return parse_overpartition(text); }

// Definition scan independent of the implementation's shortcut.
std::size_t durfee_size_by_scan(const Overpartition& x) {
  std::size_t best = 0;
  for (std::size_t n = 1; n <= x.size(); ++n) {
    std::size_t count = 0;
    for (const Part& p : x.parts()) {
      if (p.overlined || p.value >= n) ++count;
    }
    if (count >= n) best = n;
  }
  return best;
}

TEST(DurfeeOrder, Examples) {
  EXPECT_EQ(format(durfee_order(op("7,6,6,5o,3o,3,2,1o"))), "5o,3o,1o,7,6,6,3,2");
  EXPECT_TRUE(durfee_order(op("")).empty());
  EXPECT_EQ(format(durfee_order(op("2o,1"))), "2o,1");
}

TEST(GeneralizedDurfeeSize, Examples) {
  EXPECT_EQ(generalized_durfee_size(op("7,6,6,5o,3o,3,2,1o")), 6U);
  EXPECT_EQ(generalized_durfee_size(op("1o")), 1U);
  EXPECT_EQ(generalized_durfee_size(op("2o,1")), 1U);
  EXPECT_EQ(generalized_durfee_size(op("")), 0U);
}

TEST(GeneralizedDurfeeSize, MatchesDefinitionScan) {
  for (unsigned n = 0; n <= 18; ++n) {
    for_each_overpartition(n, [](const Overpartition& x) {
      ASSERT_EQ(generalized_durfee_size(x), durfee_size_by_scan(x)) << format(x);
    });
  }
}

TEST(OrdinaryDurfeeSize, Examples) {
  const std::vector<PartValue> a{5, 5, 3};
  const std::vector<PartValue> b{3, 2};
  const std::vector<PartValue> c{1, 1, 1};
  EXPECT_EQ(durfee_size(a), 3U);
  EXPECT_EQ(durfee_size(b), 2U);
  EXPECT_EQ(durfee_size(c), 1U);
  EXPECT_EQ(durfee_size(std::span<const PartValue>{}), 0U);
}

TEST(Dissect, SecondFigure) {
  const DurfeeDissection d = dissect(op("8,7o,6,6,5o,5,5,3,1o"));
  EXPECT_EQ(d.square_sizes, (std::vector<std::size_t>{6, 3}));
  ASSERT_EQ(d.levels.size(), 2U);
  EXPECT_EQ(format(std::span(d.levels[0])), "7o,5o,1o,8,6,6");
  EXPECT_EQ(format(std::span(d.levels[1])), "5,5,3");
}

TEST(Dissect, FirstFigure) {
  const DurfeeDissection d = dissect(op("7,6,6,5o,3o,3,2,1o"));
  EXPECT_EQ(d.square_sizes, (std::vector<std::size_t>{6, 2}));
  EXPECT_EQ(format(std::span(d.levels[1])), "3,2");
}

TEST(Dissect, SmallCases) {
  EXPECT_EQ(dissect(op("3")).square_sizes, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(dissect(op("")).square_sizes.empty());
  EXPECT_EQ(dissect(op("1,1,1")).square_sizes, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(NumSuccessiveSquares, Examples) {
  EXPECT_EQ(num_successive_squares(op("8,7o,6,6,5o,5,5,3,1o")), 2U);
  EXPECT_EQ(num_successive_squares(op("1,1,1")), 3U);
  EXPECT_EQ(num_successive_squares(op("")), 0U);
}

TEST(Dissect, StructuralInvariants) {
  for (unsigned n = 0; n <= 25; ++n) {
    for_each_overpartition(n, [](const Overpartition& x) {
      const DurfeeDissection d = dissect(x);
      if (x.empty()) {
        ASSERT_TRUE(d.square_sizes.empty());
        return;
      }
      const std::size_t first = d.square_sizes[0];
      ASSERT_GE(first, x.num_overlined());
      const auto ordered = durfee_order(x);
      for (std::size_t r = first; r < ordered.size(); ++r) {
        ASSERT_FALSE(ordered[r].overlined) << format(x);
        ASSERT_LE(ordered[r].value, first) << format(x);
      }
      ASSERT_EQ(d.rows(), ordered) << format(x);
      for (std::size_t j = 0; j < d.levels.size(); ++j) {
        ASSERT_EQ(d.levels[j].size(), d.square_sizes[j]);
        if (j > 0) {
          ASSERT_LE(d.square_sizes[j], d.square_sizes[j - 1]) << format(x);
          for (std::size_t r = 0; r < d.levels[j].size(); ++r) {
            ASSERT_GE(d.levels[j][r].value, d.square_sizes[j]);
            ASSERT_LE(d.levels[j][r].value, d.square_sizes[j - 1]);
          }
        }
      }
    });
  }
}

TEST(CountG, Examples) {
  EXPECT_EQ(count_g(0), 1);
  EXPECT_EQ(count_g(3), 4);
  EXPECT_EQ(count_g(5), 8);
  std::vector<std::string> found;
  for_each_overpartition(3, [&](const Overpartition& x) {
    if (is_square_block(x)) found.push_back(format(x));
  });
  EXPECT_EQ(found, (std::vector<std::string>{"3", "3o", "2,1o", "2o,1o"}));
}

TEST(CountAtMostSquares, Examples) {
  EXPECT_EQ(count_at_most_squares(3, 1), 4);
  EXPECT_EQ(count_at_most_squares(3, 3), 8);
  for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(count_at_most_squares(0, j), 1);
  EXPECT_THROW(count_at_most_squares(3, 0), PreconditionError);
}

TEST(CountAtMostSquares, OneSquareIsExactlyTheSquareBlocks) {
  for (unsigned n = 0; n <= 25; ++n) EXPECT_EQ(count_g(n), count_at_most_squares(n, 1)) << n;
}

TEST(DissectionJson, Shape) {
  const auto j = to_json(dissect(op("8,7o,6,6,5o,5,5,3,1o")));
  EXPECT_EQ(j["sizes"], nlohmann::json::parse("[6,3]"));
  EXPECT_EQ(j["levels"][1], nlohmann::json::parse("[5,5,3]"));
  EXPECT_EQ(j["levels"][0][0], nlohmann::json::parse(R"({"v":7,"o":true})"));
  EXPECT_EQ(to_json(dissect(op(""))).dump(), R"({"levels":[],"sizes":[]})");
}

TEST(RenderFerrers, FirstFigure) {
  const std::string expected =
      "5o o o o o *   |\n"
      "3o o o *       |\n"
      "1o *           |\n"
      "7  o o o o o o | o\n"
      "6  o o o o o o |\n"
      "6  o o o o o o |\n"
      "   -------------\n"
      "3  o o | o\n"
      "2  o o |\n"
      "   -----\n";
  EXPECT_EQ(render_ferrers(dissect(op("7,6,6,5o,3o,3,2,1o"))), expected);
}

}  // namespace
}  // namespace overdurfee
