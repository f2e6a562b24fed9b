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

#include "permx/series.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include <boost/multiprecision/integer.hpp>

#include "permx/error.h"

namespace permx {
namespace {

Integer Abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer IntGcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(Abs(a), Abs(b));
}

Polynomial PrimitivePart(const Polynomial& p) {
  if (p.IsZero()) return p;
  Integer c = p.Content();
  std::vector<Integer> out;
  for (const auto& v : p.coefficients()) out.push_back(v / c);
  return Polynomial(std::move(out));
}

// Sparse remainder of lc(b)^m * a modulo b.
Polynomial PseudoRemainder(Polynomial a, const Polynomial& b) {
  const Integer& lb = b.coefficients().back();
  while (!a.IsZero() && a.Degree() >= b.Degree()) {
    Integer la = a.coefficients().back();
    int shift = a.Degree() - b.Degree();
    a = a.ScaledBy(lb) - (b * Polynomial::Monomial(la, shift));
  }
  return a;
}

std::string TermBody(const Integer& magnitude, int e) {
  std::string out;
  if (e == 0) return magnitude.str();
  if (magnitude != 1) out += magnitude.str();
  out += "x";
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

// Integer e-th root of p (p(0) == 1) if one exists.
bool PolynomialRoot(const Polynomial& p, int e, Polynomial* root) {
  const int d = p.Degree();
  if (d % e != 0) return false;
  const int rd = d / e;
  std::vector<Integer> q(rd + 1);
  q[0] = 1;
  for (int j = 1; j <= rd; ++j) {
    std::vector<Integer> partial(q.begin(), q.begin() + j);
    Polynomial qp = Pow(Polynomial(partial), e);
    Integer rest = p.Coefficient(j) - qp.Coefficient(j);
    if (rest % e != 0) return false;
    q[j] = rest / e;
  }
  Polynomial candidate(q);
  if (Pow(candidate, e) != p) return false;
  *root = std::move(candidate);
  return true;
}

struct Factor {
  Polynomial base;
  int exponent;
};

// Splits p (p(0) == +-1 not required) into (1-x)^b and a perfect-power rest
// when the rest has unit constant term. The leftover factor keeps whatever
// content it had.
std::vector<Factor> DisplayFactors(Polynomial p) {
  std::vector<Factor> out;
  const Polynomial one_minus_x{1, -1};
  int b = 0;
  while (p.Degree() > 0 && p.Evaluate(1) == 0) {
    p = ExactQuotient(p, one_minus_x);
    ++b;
  }
  if (b > 0) out.push_back({one_minus_x, b});
  if (p.Degree() > 0) {
    Factor rest{p, 1};
    if (p.Coefficient(0) == 1) {
      for (int e = p.Degree(); e >= 2; --e) {
        Polynomial root;
        if (PolynomialRoot(p, e, &root)) {
          rest = {root, e};
          break;
        }
      }
    }
    out.push_back(rest);
  } else if (p.Degree() == 0 && p.Coefficient(0) != 1) {
    out.push_back({p, 1});
  }
  return out;
}

std::string RenderFactors(const std::vector<Factor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f.base.Degree() == 0) {
      out += f.base.Coefficient(0).str();
      continue;
    }
    out += "(" + f.base.ToString(/*compact=*/true) + ")";
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  Trim();
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  Trim();
}

Polynomial Polynomial::Monomial(const Integer& c, int exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::Geometric(int n) {
  return Polynomial(std::vector<Integer>(std::max(n, 0), Integer(1)));
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::Valuation() const {
  for (int i = 0; i <= Degree(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return -1;
}

Integer Polynomial::Coefficient(int i) const {
  if (i < 0 || i > Degree()) return 0;
  return coeffs_[i];
}

Integer Polynomial::Content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = IntGcd(g, c);
  return g;
}

Integer Polynomial::Evaluate(const Integer& x) const {
  Integer acc = 0;
  for (int i = Degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (IsZero() || o.IsZero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  Trim();
  return *this;
}

Polynomial Polynomial::ScaledBy(const Integer& c) const {
  std::vector<Integer> out = coeffs_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::ToString(bool compact) const {
  if (IsZero()) return "0";
  std::string out;
  bool first = true;
  for (int e = 0; e <= Degree(); ++e) {
    const Integer& c = coeffs_[e];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out += "-";
    } else if (compact) {
      out += c < 0 ? "-" : "+";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += TermBody(Abs(c), e);
    first = false;
  }
  return out;
}

Polynomial Pow(const Polynomial& p, int e) {
  Polynomial out = Polynomial::One();
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

Polynomial ExactQuotient(const Polynomial& p, const Polynomial& d) {
  if (d.IsZero()) throw Error(ErrorCode::kInvalidArgument, "division by zero polynomial");
  if (p.IsZero()) return p;
  if (p.Degree() < d.Degree()) {
    throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  }
  std::vector<Integer> q(p.Degree() - d.Degree() + 1);
  Polynomial r = p;
  const Integer& ld = d.coefficients().back();
  while (!r.IsZero() && r.Degree() >= d.Degree()) {
    const Integer& lr = r.coefficients().back();
    if (lr % ld != 0) {
      throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
    }
    int shift = r.Degree() - d.Degree();
    Integer t = lr / ld;
    q[shift] = t;
    r -= d * Polynomial::Monomial(t, shift);
  }
  if (!r.IsZero()) throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  return Polynomial(std::move(q));
}

Polynomial Gcd(const Polynomial& a, const Polynomial& b) {
  if (a.IsZero() && b.IsZero()) return Polynomial();
  Polynomial x = PrimitivePart(a);
  Polynomial y = PrimitivePart(b);
  if (x.IsZero()) std::swap(x, y);
  if (!y.IsZero() && y.Degree() > x.Degree()) std::swap(x, y);
  while (!y.IsZero()) {
    Polynomial r = PseudoRemainder(x, y);
    x = std::move(y);
    y = PrimitivePart(r);
  }
  if (x.coefficients().back() < 0) x = -x;
  return x;
}

RationalGF::RationalGF(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.IsZero()) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (num_.IsZero()) {
    den_ = Polynomial::One();
    return;
  }
  Polynomial g = Gcd(num_, den_);
  if (g.Degree() > 0) {
    num_ = ExactQuotient(num_, g);
    den_ = ExactQuotient(den_, g);
  }
  Integer c = IntGcd(num_.Content(), den_.Content());
  if (c > 1) {
    num_ = Polynomial(ExactQuotient(num_, Polynomial::Monomial(c, 0)));
    den_ = Polynomial(ExactQuotient(den_, Polynomial::Monomial(c, 0)));
  }
  const Integer d0 = den_.Coefficient(0);
  if (d0 == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (d0 != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "denominator constant term must be 1, got " + den_.ToString());
  }
}

RationalGF& RationalGF::operator+=(const RationalGF& o) {
  if (den_ == o.den_) {
    *this = RationalGF(num_ + o.num_, den_);
  } else {
    *this = RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalGF& RationalGF::operator-=(const RationalGF& o) {
  if (den_ == o.den_) {
    *this = RationalGF(num_ - o.num_, den_);
  } else {
    *this = RationalGF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalGF& RationalGF::operator*=(const RationalGF& o) {
  *this = RationalGF(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalGF RationalGF::ScaledBy(const Polynomial& p) const {
  return RationalGF(num_ * p, den_);
}

RationalGF RationalGF::Reciprocal() const {
  const Integer n0 = num_.Coefficient(0);
  if (n0 != 1 && n0 != -1) {
    throw Error(ErrorCode::kInvalidArgument,
                "reciprocal needs a unit constant term: " + ToString());
  }
  return RationalGF(den_, num_);
}

TruncatedSeries RationalGF::Expand(int order) const {
  TruncatedSeries s(order);
  const int dd = den_.Degree();
  for (int n = 0; n <= order; ++n) {
    Integer v = num_.Coefficient(n);
    for (int i = 1; i <= std::min(n, dd); ++i) v -= den_.coefficients()[i] * s[n - i];
    s[n] = std::move(v);
  }
  return s;
}

std::string RationalGF::ToString() const {
  if (IsPolynomial()) return num_.ToString();
  std::string out;
  const int a = num_.Valuation();
  Polynomial rest = ExactQuotient(num_, Polynomial::Monomial(1, a));
  if (rest.Coefficient(0) < 0) {
    out += "-";
    rest = -rest;
  }
  std::vector<Factor> factors = DisplayFactors(rest);
  if (a > 0) {
    // A bare constant folds into the power of x, giving "2x^3".
    if (!factors.empty() && factors.front().base.Degree() == 0) {
      out += TermBody(factors.front().base.Coefficient(0), a);
      factors.erase(factors.begin());
    } else {
      out += TermBody(1, a);
    }
  }
  if (a == 0 && factors.empty()) out += "1";
  out += RenderFactors(factors);
  const std::vector<Factor> den_factors = DisplayFactors(den_);
  const std::string den = RenderFactors(den_factors);
  out += den_factors.size() > 1 ? "/(" + den + ")" : "/" + den;
  return out;
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

TruncatedSeries TruncatedSeries::Truncated(int order) const {
  std::vector<Integer> c(coeffs_.begin(),
                         coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string TruncatedSeries::ToString() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i <= order(); ++i) {
    if (i > 0) out << ", ";
    out << coeffs_[i];
  }
  out << "]";
  return out.str();
}

}  // namespace permx
