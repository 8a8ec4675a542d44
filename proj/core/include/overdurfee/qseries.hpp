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

// Truncated power series in q with arbitrary-precision integer coefficients.

#ifndef OVERDURFEE_QSERIES_HPP_
#define OVERDURFEE_QSERIES_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "overdurfee/partition.hpp"

namespace overdurfee {

// Coefficients of q^0 .. q^order. Binary operations on series of different
// orders truncate to the smaller one.
class QSeries {
 public:
  explicit QSeries(std::size_t order = 0);
  // Pads with zeros or truncates `coeffs` to order+1 entries.
  QSeries(std::size_t order, std::vector<BigInt> coeffs);

  static QSeries one(std::size_t order);
  static QSeries monomial(std::size_t order, BigInt coeff, std::size_t exponent);

  std::size_t order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of q^n; zero when n > order.
  BigInt coefficient(std::size_t n) const;
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const BigInt& scalar);

  // In-place multiplication by (1 + sign * q^exponent), sign = +1 or -1.
  QSeries& mul_binomial(int sign, std::size_t exponent);
  // In-place division by (1 - q^exponent), exponent >= 1.
  QSeries& div_one_minus(std::size_t exponent);
  // In-place multiplication by q^exponent.
  QSeries& shift(std::size_t exponent);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const BigInt& s) { return a *= s; }
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::size_t order_;
  std::vector<BigInt> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_scale(const QSeries& a, const BigInt& scalar);

// t with s * t = 1 modulo q^(order+1). Throws std::domain_error unless the
// constant term is +1 or -1.
QSeries invert_unit(const QSeries& s);

// sign * q^shift, sign = +1 or -1.
struct SignedMonomial {
  int sign = 1;
  std::size_t shift = 0;
};

// (x; q)_n = prod_{i=0}^{n-1} (1 - x q^i), truncated at `order`.
QSeries poch_finite(SignedMonomial x, std::size_t n, std::size_t order);

// Power series in q whose coefficients are polynomials in a marker a.
// Stored as one QSeries per a-degree.
class RefinedQSeries {
 public:
  explicit RefinedQSeries(std::size_t order = 0) : order_(order) {}
  RefinedQSeries(std::size_t order, std::vector<QSeries> by_a_degree);

  std::size_t order() const { return order_; }
  // One past the highest a-degree stored.
  std::size_t a_degrees() const { return by_a_degree_.size(); }
  const QSeries& a_slice(std::size_t m) const { return by_a_degree_[m]; }
  // Coefficient of a^m q^n; zero outside the stored range.
  BigInt coefficient(std::size_t m, std::size_t n) const;
  // Substitutes a = 1.
  QSeries at_a_equals_one() const;

  RefinedQSeries& operator+=(const RefinedQSeries& other);

 private:
  std::size_t order_;
  std::vector<QSeries> by_a_degree_;
};

}  // namespace overdurfee

#endif  // OVERDURFEE_QSERIES_HPP_
