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

// Gordon-type overpartitions: for k >= 2 and 1 <= i <= k, an overpartition
// lambda_1 >= lambda_2 >= ... qualifies when the non-overlined part 1 occurs
// at most i-1 times and, for every j with j+k-1 <= #parts,
//   lambda_j - lambda_{j+k-1} >= 1  if lambda_j is overlined,
//   lambda_j - lambda_{j+k-1} >= 2  otherwise.
// The sequence is read in canonical order (overlined copy first at ties).

#ifndef OVERDURFEE_RRG_HPP_
#define OVERDURFEE_RRG_HPP_

#include "overdurfee/partition.hpp"

namespace overdurfee {

// Throws PreconditionError unless k >= 2 and 1 <= i <= k.
void check_gordon_params(int k, int i);

bool is_rrg(const Overpartition& op, int k, int i);

// D_{k,i}(n) by exhaustive enumeration.
BigInt count_dki(unsigned n, int k, int i);

}  // namespace overdurfee

#endif  // OVERDURFEE_RRG_HPP_
