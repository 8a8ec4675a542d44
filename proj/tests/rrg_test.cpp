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

#include "overdurfee/enumerate.hpp"
#include "overdurfee/generating_functions.hpp"
#include "overdurfee/rrg.hpp"
#include "overdurfee/text_format.hpp"

namespace overdurfee {
namespace {

Overpartition op(const char* text) { return parse_overpartition(text); }

TEST(IsRrg, Examples) {
  EXPECT_TRUE(is_rrg(op("2o,1"), 2, 2));
  EXPECT_FALSE(is_rrg(op("2,1"), 2, 2));
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i) EXPECT_TRUE(is_rrg(op(""), k, i));
  }
}

TEST(IsRrg, OnesCap) {
  EXPECT_FALSE(is_rrg(op("1"), 2, 1));
  EXPECT_TRUE(is_rrg(op("1o"), 2, 1));
  EXPECT_TRUE(is_rrg(op("3,1,1"), 3, 3));
  EXPECT_FALSE(is_rrg(op("3,1,1"), 3, 2));
}

TEST(IsRrg, WindowUsesOverlineOfUpperPart) {
  // Window of k-1 = 2 at k = 3: 3 vs 2 (gap 1); passes only if the 3 is overlined.
  EXPECT_TRUE(is_rrg(op("3o,3,2"), 3, 3));
  EXPECT_FALSE(is_rrg(op("3,3,2"), 3, 3));
  EXPECT_FALSE(is_rrg(op("3,2o,2"), 3, 3));
}

TEST(IsRrg, InvalidParameters) {
  EXPECT_THROW(is_rrg(op("1"), 1, 1), PreconditionError);
  EXPECT_THROW(is_rrg(op("1"), 2, 0), PreconditionError);
  EXPECT_THROW(is_rrg(op("1"), 2, 3), PreconditionError);
  EXPECT_THROW(count_dki(3, 4, 5), PreconditionError);
}

TEST(CountDki, Examples) {
  EXPECT_EQ(count_dki(0, 3, 2), 1);
  EXPECT_EQ(count_dki(1, 2, 1), 1);
  EXPECT_EQ(count_dki(3, 2, 2), 4);
  std::vector<std::string> found;
  for_each_overpartition(3, [&](const Overpartition& x) {
    if (is_rrg(x, 2, 2)) found.push_back(format(x));
  });
  EXPECT_EQ(found, (std::vector<std::string>{"3", "3o", "2o,1", "2o,1o"}));
}

TEST(CountDki, FrozenTables) {
  // Definition scans from an independent script.
  const unsigned d32[] = {1, 2, 3, 6, 9, 14, 22, 32, 46, 66, 93, 128, 176};
  const unsigned d41[] = {1, 1, 2, 4, 6, 10, 16, 23, 34, 50, 71, 100, 140};
  for (unsigned n = 0; n <= 12; ++n) {
    EXPECT_EQ(count_dki(n, 3, 2), d32[n]) << n;
    EXPECT_EQ(count_dki(n, 4, 1), d41[n]) << n;
  }
}

TEST(CountDki, MatchesGeneratingFunction) {
  constexpr unsigned kMaxN = 18;
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i) {
      const QSeries s = gf_dki(k, i, kMaxN);
      for (unsigned n = 0; n <= kMaxN; ++n) {
        ASSERT_EQ(count_dki(n, k, i), s[n]) << "k=" << k << " i=" << i << " n=" << n;
      }
    }
  }
}

TEST(CountDki, MonotoneInCap) {
  for (int k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n <= 16; ++n) {
      for (int i = 1; i < k; ++i) ASSERT_LE(count_dki(n, k, i), count_dki(n, k, i + 1));
    }
  }
}

}  // namespace
}  // namespace overdurfee
