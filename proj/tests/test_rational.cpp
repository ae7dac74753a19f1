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

#include "altruist/rational.hpp"

#include <unordered_set>

#include "altruist/errors.hpp"
#include "doctest.h"

namespace altruist {
namespace {

TEST_CASE("canonical form") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(8, 4).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("12/5") == Rational(12, 5));
  CHECK(Rational::parse("2.4") == Rational(12, 5));
  CHECK(Rational::parse("18.5") == Rational(37, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("4/8").to_string() == "1/2");
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("abc"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ValidationError);
}

TEST_CASE("round trip of large values") {
  const std::string big = "123456789012345678901234567891/1000000000000000000000000000000";
  CHECK(Rational::parse(big).to_string() == big);
  const Rational r = Rational::parse(big);
  CHECK(Rational::parse(r.to_string()) == r);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK(Rational(1) - Rational(1, 2) == Rational(1, 2));
  CHECK(Rational(7) / Rational(2) == Rational(7, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ValidationError);
}

TEST_CASE("ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(5, 2).ceil_to_int64() == 3);
  CHECK(Rational(-5, 2).ceil_to_int64() == -2);
  CHECK(Rational(4).ceil_to_int64() == 4);
  CHECK(Rational(3, 5).sign() == 1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 2).numerator_string() == "1");
  CHECK(Rational(1, 2).denominator_string() == "2");
}

TEST_CASE("hashing agrees with equality") {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
  CHECK(s.size() == 2);
  CHECK(s.count(Rational::parse("0.5")) == 1);
}

}  // namespace
}  // namespace altruist
