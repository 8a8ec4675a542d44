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

// Generating functions for partitions, overpartitions, square blocks,
// Gordon-type overpartitions and bounded successive-square overpartitions,
// all expanded exactly up to q^order.
//
// Multi-sums run over N_1 >= ... >= N_{k-1} >= 0 and stop once
// N_1(N_1+1)/2 + N_2^2 + ... + N_{k-1}^2 exceeds the order; any tuple past
// that bound only contributes above q^order.

#ifndef OVERDURFEE_GENERATING_FUNCTIONS_HPP_
#define OVERDURFEE_GENERATING_FUNCTIONS_HPP_

#include <cstddef>

#include "overdurfee/qseries.hpp"

namespace overdurfee {

// 1 / (q; q)_inf
QSeries gf_partitions(std::size_t order);

// (-q; q)_inf / (q; q)_inf
QSeries gf_overpartitions_product(std::size_t order);

// sum_n (-1; q)_n q^{n(n+1)/2} / (q; q)_n^2
QSeries gf_overpartitions_sum(std::size_t order);

// sum_N (-1; q)_N q^{N(N+1)/2} / (q; q)_N : overpartitions whose number of
// parts equals their generalized Durfee size.
QSeries gf_g(std::size_t order);

// Overpartitions with generalized Durfee size exactly N; the exponent of a
// counts overlined parts:
//   prod_{i<N} (a + q^i) * q^{N(N+1)/2} / (q; q)_N^2
RefinedQSeries gf_durfee_refined(std::size_t size, std::size_t order);
// Sum of gf_durfee_refined over all sizes.
RefinedQSeries gf_durfee_refined_total(std::size_t order);

// Gordon-type overpartition generating function for k >= 2, 1 <= i <= k:
//   q^{N_1(N_1+1)/2 + N_2^2 + ... + N_{k-1}^2 + N_{i+1} + ... + N_{k-1}}
//     (-q)_{N_1-1} (1 + q^{N_i})
//   / ((q)_{N_1-N_2} ... (q)_{N_{k-2}-N_{k-1}} (q)_{N_{k-1}})
// with N_j = 0 for j >= k and the all-zero tuple contributing 1.
QSeries gf_dki(int k, int i, std::size_t order);

// i = k specialisation written with (-1)_{N_1}.
QSeries gf_dkk(int k, std::size_t order);

// Overpartitions with at most k-1 successive Durfee squares, assembled level
// by level: a square block of size N_1, then for each deeper level a square
// N_j^2 with its arm bounded by N_{j-1} - N_j, counted by the Gaussian
// binomial [N_{j-1}; N_j]. Equal to gf_dkk(k) coefficientwise.
QSeries gf_at_most_squares(int k, std::size_t order);

// Gaussian binomial coefficient [n; m]_q, truncated at `order`.
QSeries gaussian_binomial(std::size_t n, std::size_t m, std::size_t order);

}  // namespace overdurfee

#endif  // OVERDURFEE_GENERATING_FUNCTIONS_HPP_
