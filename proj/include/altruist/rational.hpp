// Copyright 2026 The Altruist Authors
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

#ifndef ALTRUIST_RATIONAL_HPP_
#define ALTRUIST_RATIONAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace altruist {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator. Every delay, cost and potential value in the library
// is a Rational; there is no floating point on any decision path.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  // Accepts "p", "p/q" and finite decimals such as "-2.4" or "18.5".
  // Throws ValidationError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  // Canonical text: "p" for integers, "p/q" otherwise. parse(to_string())
  // reproduces the value bit for bit.
  std::string to_string() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  bool is_integer() const;
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  // Smallest integer >= value; only meaningful when it fits in 64 bits.
  std::int64_t ceil_to_int64() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace altruist

template <>
struct std::hash<altruist::Rational> {
  std::size_t operator()(const altruist::Rational& r) const noexcept {
    return r.hash();
  }
};

#endif  // ALTRUIST_RATIONAL_HPP_
