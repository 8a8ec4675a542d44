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

#include "overdurfee/generating_functions.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace overdurfee {
namespace {

constexpr std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

// s /= (q; q)_n
void divide_by_q_poch(QSeries& s, std::size_t n) {
  for (std::size_t m = 1; m <= n; ++m) s.div_one_minus(m);
}

void check_k(int k) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
}

// Visits every N_1 >= ... >= N_levels >= 0 with
// N_1(N_1+1)/2 + N_2^2 + ... <= order.
void for_each_square_tuple(std::size_t levels, std::size_t order,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t cap, std::size_t used) {
    if (sizes.size() == levels) {
      visit(sizes);
      return;
    }
    for (std::size_t n = 0; n <= cap; ++n) {
      const std::size_t cost = sizes.empty() ? triangular(n) : n * n;
      if (used + cost > order) break;
      sizes.push_back(n);
      extend(n, used + cost);
      sizes.pop_back();
    }
  };
  extend(order, 0);
}

// s /= (q)_{N_1-N_2} ... (q)_{N_{l-1}-N_l} (q)_{N_l}
void divide_by_level_gaps(QSeries& s, const std::vector<std::size_t>& sizes) {
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) {
    divide_by_q_poch(s, sizes[j] - sizes[j + 1]);
  }
  divide_by_q_poch(s, sizes.back());
}

}  // namespace

QSeries gf_partitions(std::size_t order) {
  QSeries s = QSeries::one(order);
  for (std::size_t m = 1; m <= order; ++m) s.div_one_minus(m);
  return s;
}

QSeries gf_overpartitions_product(std::size_t order) {
  QSeries s = QSeries::one(order);
  for (std::size_t m = 1; m <= order; ++m) {
    s.mul_binomial(1, m);
    s.div_one_minus(m);
  }
  return s;
}

QSeries gf_overpartitions_sum(std::size_t order) {
  QSeries total(order);
  for (std::size_t n = 0; triangular(n) <= order; ++n) {
    QSeries term = poch_finite({-1, 0}, n, order);
    term.shift(triangular(n));
    divide_by_q_poch(term, n);
    divide_by_q_poch(term, n);
    total += term;
  }
  return total;
}

QSeries gf_g(std::size_t order) {
  QSeries total(order);
  for (std::size_t n = 0; triangular(n) <= order; ++n) {
    QSeries term = poch_finite({-1, 0}, n, order);
    term.shift(triangular(n));
    divide_by_q_poch(term, n);
    total += term;
  }
  return total;
}

RefinedQSeries gf_durfee_refined(std::size_t size, std::size_t order) {
  // prod_{i<N} (a + q^i), one q-series per power of a.
  std::vector<QSeries> poly{QSeries::one(order)};
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<QSeries> next(poly.size() + 1, QSeries(order));
    for (std::size_t m = 0; m < poly.size(); ++m) {
      next[m + 1] += poly[m];
      QSeries shifted = poly[m];
      next[m] += shifted.shift(i);
    }
    poly = std::move(next);
  }
  for (QSeries& slice : poly) {
    slice.shift(triangular(size));
    divide_by_q_poch(slice, size);
    divide_by_q_poch(slice, size);
  }
  return RefinedQSeries(order, std::move(poly));
}

RefinedQSeries gf_durfee_refined_total(std::size_t order) {
  RefinedQSeries total(order);
  for (std::size_t n = 0; triangular(n) <= order; ++n) total += gf_durfee_refined(n, order);
  return total;
}

QSeries gf_dki(int k, int i, std::size_t order) {
  check_k(k);
  if (i < 1 || i > k) {
    throw PreconditionError("i must lie in [1, k], got i=" + std::to_string(i) +
                            " k=" + std::to_string(k));
  }
  const auto levels = static_cast<std::size_t>(k - 1);
  const auto cap_index = static_cast<std::size_t>(i);  // 1-based N_i
  QSeries total(order);
  for_each_square_tuple(levels, order, [&](const std::vector<std::size_t>& sizes) {
    if (sizes[0] == 0) {
      total += QSeries::one(order);
      return;
    }
    std::size_t exponent = triangular(sizes[0]);
    for (std::size_t j = 1; j < levels; ++j) exponent += sizes[j] * sizes[j];
    for (std::size_t j = cap_index; j < levels; ++j) exponent += sizes[j];
    if (exponent > order) return;
    QSeries term = QSeries::monomial(order, 1, exponent);
    // (-q; q)_{N_1 - 1}
    for (std::size_t j = 1; j < sizes[0]; ++j) term.mul_binomial(1, j);
    const std::size_t n_i = cap_index <= levels ? sizes[cap_index - 1] : 0;
    term.mul_binomial(1, n_i);
    divide_by_level_gaps(term, sizes);
    total += term;
  });
  return total;
}

QSeries gf_dkk(int k, std::size_t order) {
  check_k(k);
  const auto levels = static_cast<std::size_t>(k - 1);
  QSeries total(order);
  for_each_square_tuple(levels, order, [&](const std::vector<std::size_t>& sizes) {
    std::size_t exponent = triangular(sizes[0]);
    for (std::size_t j = 1; j < levels; ++j) exponent += sizes[j] * sizes[j];
    QSeries term = poch_finite({-1, 0}, sizes[0], order);
    term.shift(exponent);
    divide_by_level_gaps(term, sizes);
    total += term;
  });
  return total;
}

QSeries gaussian_binomial(std::size_t n, std::size_t m, std::size_t order) {
  if (m > n) return QSeries(order);
  // Row-by-row q-Pascal: [r; c] = [r-1; c-1] + q^c [r-1; c].
  std::vector<QSeries> row{QSeries::one(order)};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<QSeries> next(r + 1, QSeries(order));
    for (std::size_t c = 0; c <= r; ++c) {
      if (c >= 1) next[c] += row[c - 1];
      if (c < r) {
        QSeries shifted = row[c];
        next[c] += shifted.shift(c);
      }
    }
    row = std::move(next);
  }
  return row[m];
}

QSeries gf_at_most_squares(int k, std::size_t order) {
  check_k(k);
  const auto levels = static_cast<std::size_t>(k - 1);
  std::map<std::pair<std::size_t, std::size_t>, QSeries> binomials;
  auto binomial = [&](std::size_t n, std::size_t m) -> const QSeries& {
    auto it = binomials.find({n, m});
    if (it == binomials.end()) {
      it = binomials.emplace(std::pair{n, m}, gaussian_binomial(n, m, order)).first;
    }
    return it->second;
  };

  QSeries total(order);
  for_each_square_tuple(levels, order, [&](const std::vector<std::size_t>& sizes) {
    // Level 1 is a square block of size N_1; every deeper level is a square
    // N_j^2 whose arm fits in an N_j x (N_{j-1} - N_j) box.
    QSeries term = poch_finite({-1, 0}, sizes[0], order);
    term.shift(triangular(sizes[0]));
    divide_by_q_poch(term, sizes[0]);
    for (std::size_t j = 1; j < levels; ++j) {
      QSeries level = binomial(sizes[j - 1], sizes[j]);
      level.shift(sizes[j] * sizes[j]);
      term *= level;
    }
    total += term;
  });
  return total;
}

}  // namespace overdurfee
