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

#include "overdurfee/qseries.hpp"

#include <algorithm>
#include <utility>

namespace overdurfee {

QSeries::QSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(std::size_t order, BigInt coeff, std::size_t exponent) {
  QSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = std::move(coeff);
  return s;
}

BigInt QSeries::coefficient(std::size_t n) const {
  return n <= order_ ? coeffs_[n] : BigInt(0);
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order_ < order_) {
    order_ = other.order_;
    coeffs_.resize(order_ + 1);
  }
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order_ < order_) {
    order_ = other.order_;
    coeffs_.resize(order_ + 1);
  }
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  QSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

QSeries& QSeries::operator*=(const QSeries& other) { return *this = *this * other; }

QSeries& QSeries::operator*=(const BigInt& scalar) {
  for (BigInt& c : coeffs_) c *= scalar;
  return *this;
}

QSeries& QSeries::mul_binomial(int sign, std::size_t exponent) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (exponent == 0) {
    if (sign == 1) return *this *= BigInt(2);
    for (BigInt& c : coeffs_) c = 0;
    return *this;
  }
  // Descending so that each step reads the unmodified lower coefficient.
  for (std::size_t n = order_; n >= exponent; --n) {
    if (sign == 1) {
      coeffs_[n] += coeffs_[n - exponent];
    } else {
      coeffs_[n] -= coeffs_[n - exponent];
    }
    if (n == exponent) break;
  }
  return *this;
}

QSeries& QSeries::div_one_minus(std::size_t exponent) {
  if (exponent == 0) throw std::domain_error("1 - q^0 is not invertible");
  for (std::size_t n = exponent; n <= order_; ++n) coeffs_[n] += coeffs_[n - exponent];
  return *this;
}

QSeries& QSeries::shift(std::size_t exponent) {
  if (exponent == 0) return *this;
  if (exponent > order_) {
    for (BigInt& c : coeffs_) c = 0;
    return *this;
  }
  std::rotate(coeffs_.rbegin(), coeffs_.rbegin() + static_cast<std::ptrdiff_t>(exponent),
              coeffs_.rend());
  for (std::size_t n = 0; n < exponent; ++n) coeffs_[n] = 0;
  return *this;
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
QSeries series_scale(const QSeries& a, const BigInt& scalar) { return a * scalar; }

QSeries invert_unit(const QSeries& s) {
  const BigInt& c0 = s[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error("constant term is not a unit over the integers");
  }
  // c0 is its own inverse.
  std::vector<BigInt> out(s.order() + 1);
  out[0] = c0;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!s[k].is_zero()) acc += s[k] * out[n - k];
    }
    out[n] = -acc * c0;
  }
  return QSeries(s.order(), std::move(out));
}

QSeries poch_finite(SignedMonomial x, std::size_t n, std::size_t order) {
  QSeries out = QSeries::one(order);
  // 1 - x q^i = 1 + (-sign) q^(shift + i)
  for (std::size_t i = 0; i < n; ++i) out.mul_binomial(-x.sign, x.shift + i);
  return out;
}

RefinedQSeries::RefinedQSeries(std::size_t order, std::vector<QSeries> by_a_degree)
    : order_(order), by_a_degree_(std::move(by_a_degree)) {
  for (QSeries& s : by_a_degree_) {
    if (s.order() != order_) s = QSeries(order_, s.coeffs());
  }
}

BigInt RefinedQSeries::coefficient(std::size_t m, std::size_t n) const {
  if (m >= by_a_degree_.size()) return 0;
  return by_a_degree_[m].coefficient(n);
}

QSeries RefinedQSeries::at_a_equals_one() const {
  QSeries out(order_);
  for (const QSeries& s : by_a_degree_) out += s;
  return out;
}

RefinedQSeries& RefinedQSeries::operator+=(const RefinedQSeries& other) {
  const std::size_t order = std::min(order_, other.order_);
  if (order != order_) {
    for (QSeries& s : by_a_degree_) s = QSeries(order, s.coeffs());
    order_ = order;
  }
  if (by_a_degree_.size() < other.by_a_degree_.size()) {
    by_a_degree_.resize(other.by_a_degree_.size(), QSeries(order_));
  }
  for (std::size_t m = 0; m < other.by_a_degree_.size(); ++m) {
    by_a_degree_[m] += other.by_a_degree_[m];
  }
  return *this;
}

}  // namespace overdurfee
