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

#include <random>

#include "cubic/braidword.hpp"
#include "cubic/errors.hpp"
#include "cubic/grouptable.hpp"

using namespace cubic;

namespace {

FormalElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1), len(0, 6), coef(-3, 3);
  FormalElement x(n);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> letters;
    for (int k = len(rng); k > 0; --k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    x.add(BraidWord(n, letters), {coef(rng), coef(rng)});
  }
  return x;
}

}  // namespace

TEST(BraidWord, ParseForms) {
  EXPECT_EQ(BraidWord::parse("2,-3,1").letters(), (std::vector<int>{2, -3, 1}));
  EXPECT_EQ(BraidWord::parse("2-31"), BraidWord::parse("2,-3,1"));
  EXPECT_EQ(BraidWord::parse("2,-3,1").strands(), 4);
  EXPECT_EQ(BraidWord::parse("").strands(), 2);
  EXPECT_EQ(BraidWord::parse("1", 5).strands(), 5);
  EXPECT_THROW(BraidWord::parse("1,x"), Error);
  EXPECT_THROW(BraidWord::parse("0"), Error);
}

TEST(BraidWord, NormalizationReducesCubes) {
  EXPECT_TRUE(BraidWord::parse("1,1,1").normalized().empty());
  EXPECT_EQ(BraidWord::parse("1,1").normalized(), BraidWord::parse("-1"));
  EXPECT_TRUE(BraidWord::parse("2,1,-1,-2").normalized().empty());
  EXPECT_EQ(BraidWord::parse("1,2,-2,1,1,3").normalized(), BraidWord::parse("3", 4));
  EXPECT_EQ(BraidWord::parse("1,-2").signed_length(), 0);
  EXPECT_EQ(BraidWord::parse("1,2,2").power(3).size(), 9u);
}

TEST(BraidWord, NormalizationPreservesTheGroupElement) {
  const GroupTable t = GroupTable::enumerate(3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(1, 2), sign(0, 1);
  for (int k = 0; k < 500; ++k) {
    std::vector<int> letters;
    for (int m = 0; m < k % 17; ++m) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    const BraidWord w(3, letters);
    ASSERT_EQ(t.eval(w.normalized()), t.eval(w));
    ASSERT_EQ(t.eval(w * w.inverse()), t.identity());
  }
}

// phi and tau_gamma are ring automorphisms; phi^3 = id and tau_gamma^2 = id.
TEST(FormalElement, PhiAndTau) {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const FormalElement x = random_element(rng, 4), y = random_element(rng, 4);
    ASSERT_EQ(phi(x * y), phi(x) * phi(y));
    ASSERT_EQ(phi_pow(x, 3), x);
    ASSERT_EQ(phi_pow(x, 2), phi(phi(x)));
    for (int g = 0; g < 3; ++g) {
      ASSERT_EQ(tau(x * y, g), tau(x, g) * tau(y, g));
      ASSERT_EQ(tau(tau(x, g), g), x);
    }
  }
  const FormalElement s1 = FormalElement::word(BraidWord::parse("1"));
  EXPECT_EQ(phi(s1), FormalElement::word(BraidWord::parse("1"), {0, 1}));
  EXPECT_EQ(tau(s1, 1), FormalElement::word(BraidWord::parse("-1"), Eisenstein::j_pow(2)));
}

TEST(FormalElement, NamedElements) {
  EXPECT_EQ(elements::q().terms().size(), 8u);
  EXPECT_EQ(elements::c().terms().size(), 8u);
  EXPECT_EQ(elements::b().terms().size(), 4u);
  EXPECT_TRUE(elements::q().is_integral());
  EXPECT_TRUE(elements::b().is_integral());
  EXPECT_EQ(elements::z(3), BraidWord::parse("1,2").power(3));
}

TEST(FormalElement, RingLaws) {
  std::mt19937 rng(9);
  for (int k = 0; k < 30; ++k) {
    const FormalElement x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_TRUE((x - x).is_zero());
    ASSERT_EQ(FormalElement::one(3) * x, x);
  }
}
