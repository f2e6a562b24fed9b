// Copyright 2026 The permx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMX_SERIES_H_
#define PERMX_SERIES_H_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permx {

using Integer = boost::multiprecision::cpp_int;

// Dense integer polynomial in x; coefficient i multiplies x^i. Trailing
// zeros are always stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial Monomial(const Integer& c, int exponent);
  static Polynomial One() { return Monomial(1, 0); }
  static Polynomial X() { return Monomial(1, 1); }
  // 1 + x + ... + x^(n-1)
  static Polynomial Geometric(int n);

  bool IsZero() const { return coeffs_.empty(); }
  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Index of the lowest nonzero coefficient; -1 for zero.
  int Valuation() const;
  Integer Coefficient(int i) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  // Positive gcd of the coefficients (0 for the zero polynomial).
  Integer Content() const;
  Integer Evaluate(const Integer& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial ScaledBy(const Integer& c) const;
  bool operator==(const Polynomial&) const = default;

  // Ascending exponents, e.g. "1 - 2x + x^3". `compact` drops the spaces.
  std::string ToString(bool compact = false) const;

 private:
  void Trim();
  std::vector<Integer> coeffs_;
};

Polynomial Pow(const Polynomial& p, int e);
// Exact division; throws Error(kInvalidArgument) if `d` does not divide `p`
// over the integers.
Polynomial ExactQuotient(const Polynomial& p, const Polynomial& d);
// Primitive gcd with positive leading coefficient.
Polynomial Gcd(const Polynomial& a, const Polynomial& b);

class TruncatedSeries;

// num/den with den(0) == 1 and gcd(num, den) == 1.
class RationalGF {
 public:
  RationalGF() : num_(), den_(Polynomial::One()) {}
  // Reduces to canonical form. Throws Error(kInvalidArgument) unless the
  // reduced denominator has constant term +-1.
  RationalGF(Polynomial num, Polynomial den);
  RationalGF(Polynomial p)  // NOLINT(google-explicit-constructor)
      : num_(std::move(p)), den_(Polynomial::One()) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool IsPolynomial() const { return den_.Degree() == 0; }
  bool IsZero() const { return num_.IsZero(); }

  RationalGF& operator+=(const RationalGF& o);
  RationalGF& operator-=(const RationalGF& o);
  RationalGF& operator*=(const RationalGF& o);
  friend RationalGF operator+(RationalGF a, const RationalGF& b) { return a += b; }
  friend RationalGF operator-(RationalGF a, const RationalGF& b) { return a -= b; }
  friend RationalGF operator*(RationalGF a, const RationalGF& b) { return a *= b; }
  RationalGF ScaledBy(const Polynomial& p) const;
  // 1/f; requires num(0) == +-1.
  RationalGF Reciprocal() const;

  TruncatedSeries Expand(int order) const;

  bool operator==(const RationalGF&) const = default;

  // "x^3/(1-x)^2" style; polynomials print as "x^3 + 4x^4 + 2x^5".
  std::string ToString() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// Coefficients c_0..c_N of a power series, exact.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  template <typename Int>
  static TruncatedSeries FromCounts(const std::vector<Int>& counts) {
    std::vector<Integer> c(counts.begin(), counts.end());
    return TruncatedSeries(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int n) const { return coeffs_[n]; }
  Integer& operator[](int n) { return coeffs_[n]; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  TruncatedSeries Truncated(int order) const;

  // Operands are first truncated to the smaller order.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries&) const = default;

  // "[0, 0, 0, 1, 2]"
  std::string ToString() const;

 private:
  std::vector<Integer> coeffs_;
};

}  // namespace permx

#endif  // PERMX_SERIES_H_
