/*
   Copyright 2026 The cubic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "cubic/coeff.hpp"
#include "cubic/errors.hpp"

using namespace cubic;

namespace {

std::vector<RingSpec> all_finite() {
  return {RingSpec::f2(), RingSpec::f3(), RingSpec::f4(), RingSpec::fp(5),
          RingSpec::fp(7), RingSpec::z4(), RingSpec::z4j()};
}

}  // namespace

TEST(Coeff, RingAxiomsExhaustive) {
  for (const auto& r : all_finite()) {
    auto el = r.elements();
    ASSERT_EQ(el.size(), r.size()) << r.name();
    for (auto x : el) {
      EXPECT_EQ(r.add(x, r.zero()), x);
      EXPECT_EQ(r.mul(x, r.one()), x);
      EXPECT_EQ(r.add(x, r.neg(x)), r.zero());
      for (auto y : el) {
        EXPECT_EQ(r.add(x, y), r.add(y, x));
        EXPECT_EQ(r.mul(x, y), r.mul(y, x));
        for (auto z : el) {
          EXPECT_EQ(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z))) << r.name();
          EXPECT_EQ(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z))) << r.name();
        }
      }
    }
  }
}

TEST(Coeff, UnitsAndInverses) {
  for (const auto& r : all_finite()) {
    std::size_t units = 0;
    for (auto x : r.elements()) {
      if (!r.is_unit(x)) continue;
      ++units;
      EXPECT_EQ(r.mul(x, r.inv(x)), r.one()) << r.name();
    }
    if (r.is_field()) EXPECT_EQ(units, r.size() - 1) << r.name();
    else EXPECT_EQ(units, r.size() - r.size() / r.residue_size()) << r.name();  // 2R is the maximal ideal
  }
}

TEST(Coeff, CubeRootOfUnity) {
  for (const auto& r : {RingSpec::f4(), RingSpec::z4j()}) {
    auto j = r.j();
    EXPECT_NE(j, r.one());
    EXPECT_EQ(r.mul(j, r.mul(j, j)), r.one());
    // 1 + j + j^2 = 0
    EXPECT_EQ(r.add(r.one(), r.add(j, r.mul(j, j))), r.zero()) << r.name();
    EXPECT_EQ(r.conj(j), r.mul(j, j));
  }
}

TEST(Coeff, EisensteinImage) {
  auto r = RingSpec::z4j();
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          Eisenstein x{a, b}, y{c, d};
          EXPECT_EQ(r.from_eisenstein(x * y), r.mul(r.from_eisenstein(x), r.from_eisenstein(y)));
          EXPECT_EQ(r.from_eisenstein(x + y), r.add(r.from_eisenstein(x), r.from_eisenstein(y)));
        }
}

TEST(Coeff, HalveInverts2) {
  for (const auto& r : {RingSpec::z4(), RingSpec::z4j()})
    for (auto x : r.elements()) {
      auto two_x = r.add(x, x);
      EXPECT_EQ(r.add(r.halve(two_x), r.halve(two_x)), two_x);
    }
}

TEST(Coeff, ParseNames) {
  for (const char* n : {"f2", "f3", "f4", "f5", "f7", "z4", "z4j", "z"})
    EXPECT_EQ(RingSpec::parse(n).name(), n);
  EXPECT_THROW(RingSpec::parse("f6"), Error);
}
