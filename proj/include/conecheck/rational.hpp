// Copyright 2026 The conecheck authors
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

#ifndef CONECHECK_RATIONAL_HPP_
#define CONECHECK_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conecheck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational. Always kept in canonical form: coprime
/// numerator/denominator, denominator > 0, zero represented as 0/1.
/// Every order decision in this library is an exact comparison; no value
/// in the system is ever rounded.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) { require_nonnegative(); }
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = BigRational(BigInt(num), BigInt(den));
    require_nonnegative();
  }
  explicit Rational(BigRational v) : v_(std::move(v)) { require_nonnegative(); }

  /// Parses "p/q" or a bare integer "p" (read as p/1). Digits only;
  /// rejects signs, whitespace and zero denominators.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  const BigRational& raw() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool positive() const { return v_ > 0; }

  /// Canonical text form "p/q" (the denominator is always printed).
  std::string str() const {
    return numerator().str() + "/" + denominator().str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(BigRational(a.v_ + b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(BigRational(a.v_ * b.v_));
  }
  /// Difference, defined only when a >= b; the carrier has no negatives.
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) throw std::domain_error("Rational: negative difference");
    return Rational(BigRational(a.v_ - b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(BigRational(a.v_ / b.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  void require_nonnegative() const {
    if (v_ < 0) throw std::domain_error("Rational: negative value");
  }

  BigRational v_{};
};

/// floor(x) for a nonnegative rational.
inline BigInt floor_int(const Rational& x) {
  return x.numerator() / x.denominator();
}

/// Element of the extended nonnegative reals: a finite Rational or +inf.
/// Scaling follows the cone convention 0 * inf = 0; +inf is absorbing
/// under addition and is the maximum of the (total) order.
class ExtReal {
 public:
  ExtReal() : v_(Rational()) {}
  ExtReal(Rational r) : v_(std::move(r)) {}
  ExtReal(long long n) : v_(Rational(n)) {}
  static ExtReal infinity() { return ExtReal(infinite_tag{}); }

  bool is_finite() const { return v_.has_value(); }
  bool is_infinite() const { return !v_.has_value(); }
  const Rational& finite() const {
    if (!v_) throw std::domain_error("ExtReal: infinite value");
    return *v_;
  }

  /// "p/q" for finite values, "inf" otherwise.
  std::string str() const { return v_ ? v_->str() : "inf"; }
  static std::optional<ExtReal> parse(std::string_view text);

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (!a.v_ || !b.v_) return infinity();
    return ExtReal(*a.v_ + *b.v_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) = default;
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (!a.v_ && !b.v_) return std::strong_ordering::equal;
    if (!a.v_) return std::strong_ordering::greater;
    if (!b.v_) return std::strong_ordering::less;
    return *a.v_ <=> *b.v_;
  }

 private:
  struct infinite_tag {};
  explicit ExtReal(infinite_tag) : v_(std::nullopt) {}

  std::optional<Rational> v_;
};

/// r * x with the convention 0 * inf = 0.
inline ExtReal scale(const Rational& r, const ExtReal& x) {
  if (r.is_zero()) return ExtReal(Rational());
  if (x.is_infinite()) return ExtReal::infinity();
  return ExtReal(r * x.finite());
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d.is_zero()) return std::nullopt;
  return Rational(BigRational(BigInt(std::string(num)), d));
}

inline std::optional<ExtReal> ExtReal::parse(std::string_view text) {
  if (text == "inf") return ExtReal::infinity();
  auto r = Rational::parse(text);
  if (!r) return std::nullopt;
  return ExtReal(*r);
}

}  // namespace conecheck

#endif  // CONECHECK_RATIONAL_HPP_
