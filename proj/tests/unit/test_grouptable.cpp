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

#include <array>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "cubic/errors.hpp"
#include "cubic/grouptable.hpp"

using namespace cubic;

namespace {

// SL_2(F_3) by hand: s1 = [[1,0],[1,1]], s2 = [[1,2],[0,1]].
using M2 = std::array<int, 4>;

M2 mul3(const M2& x, const M2& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3, (x[2] * y[0] + x[3] * y[2]) % 3,
          (x[2] * y[1] + x[3] * y[3]) % 3};
}

M2 sl2_of(const BraidWord& w) {
  const M2 s1{1, 0, 1, 1}, s2{1, 2, 0, 1};
  M2 m{1, 0, 0, 1};
  for (int l : w.letters()) {
    const M2& g = std::abs(l) == 1 ? s1 : s2;
    m = mul3(m, g);
    if (l < 0) m = mul3(m, g);  // s^-1 = s^2
  }
  return m;
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, letters);
}

}  // namespace

TEST(GroupTable, SmallOrders) {
  EXPECT_EQ(GroupTable::enumerate(2).order(), 3u);
  EXPECT_EQ(GroupTable::enumerate(3).order(), 24u);
  EXPECT_EQ(cached_group(4, CUBIC_TEST_CACHE).order(), 648u);
}

// Gamma_3 is SL_2(F_3): the hand-written model is a faithful image of the table.
TEST(GroupTable, Gamma3IsSL2F3) {
  const GroupTable t = GroupTable::enumerate(3);
  std::set<M2> images;
  for (Element x = 0; x < t.order(); ++x) images.insert(sl2_of(t.witness(x)));
  EXPECT_EQ(images.size(), 24u);
  for (Element x = 0; x < t.order(); ++x)
    for (Element y = 0; y < t.order(); ++y)
      ASSERT_EQ(sl2_of(t.witness(t.mul(x, y))), mul3(sl2_of(t.witness(x)), sl2_of(t.witness(y))));
  EXPECT_EQ(t.conjugacy_classes().count(), 7u);
}

TEST(GroupTable, WordEvaluationIsAHomomorphism) {
  std::mt19937 rng(11);
  for (int n : {3, 4}) {
    const GroupTable t = cached_group(n, CUBIC_TEST_CACHE);
    for (int k = 0; k < 300; ++k) {
      const BraidWord x = random_word(rng, n, 1 + k % 13), y = random_word(rng, n, 1 + k % 7);
      ASSERT_EQ(t.eval(x * y), t.mul(t.eval(x), t.eval(y)));
      ASSERT_EQ(t.eval(x.inverse()), t.inv(t.eval(x)));
      ASSERT_EQ(t.eval(x.normalized()), t.eval(x));
      ASSERT_EQ(t.eval(t.witness(t.eval(x))), t.eval(x));
    }
  }
}

TEST(GroupTable, Gamma4Axioms) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  std::mt19937 rng(5);
  std::uniform_int_distribution<Element> pick(0, t.order() - 1);
  for (int k = 0; k < 2000; ++k) {
    const Element x = pick(rng), y = pick(rng), z = pick(rng);
    ASSERT_EQ(t.mul(t.mul(x, y), z), t.mul(x, t.mul(y, z)));
    ASSERT_EQ(t.mul(x, t.inv(x)), t.identity());
    ASSERT_EQ(t.length_mod3(t.mul(x, y)), (t.length_mod3(x) + t.length_mod3(y)) % 3);
  }
  for (int i = 1; i < 4; ++i) {
    const Element s = t.eval(BraidWord::generator(4, i));
    EXPECT_EQ(t.element_order(s), 3u);
  }
}

// Class count by Burnside: #classes = #commuting pairs / |G|.
TEST(GroupTable, Gamma4ClassCountByCommutingPairs) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  std::size_t pairs = 0;
  for (Element x = 0; x < t.order(); ++x)
    for (Element y = 0; y < t.order(); ++y) pairs += t.mul(x, y) == t.mul(y, x);
  const ClassPartition c = t.conjugacy_classes();
  EXPECT_EQ(c.count(), pairs / t.order());
  EXPECT_EQ(c.count(), 24u);
  std::size_t total = 0;
  for (auto s : c.sizes) total += s;
  EXPECT_EQ(total, t.order());
}

// Every fibre of Gamma_4 -> Gamma_3 (s3 -> s1) has 27 elements.
TEST(GroupTable, ProjectionFibres) {
  const GroupTable t3 = GroupTable::enumerate(3), t4 = cached_group(4, CUBIC_TEST_CACHE);
  std::vector<std::size_t> fibre(t3.order());
  for (Element x = 0; x < t4.order(); ++x) {
    std::vector<int> letters = t4.witness(x).letters();
    for (int& l : letters)
      if (std::abs(l) == 3) l = l > 0 ? 1 : -1;
    ++fibre[t3.eval(BraidWord(3, letters))];
  }
  for (auto f : fibre) EXPECT_EQ(f, 27u);
}

TEST(GroupTable, Gamma5FactsAndClasses) {
  const GroupTable t = cached_group(5, CUBIC_TEST_CACHE);
  EXPECT_EQ(t.order(), 155520u);
  // Sp_4(F_3) x C_3 has 34 * 3 classes.
  EXPECT_EQ(t.conjugacy_classes().count(), 102u);
  EXPECT_EQ(t.center().size(), 6u);
  EXPECT_TRUE(verify_group_facts(t).all());
}

TEST(GroupTable, SaveLoadAndCorruption) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  const auto path = std::filesystem::temp_directory_path() / "cubic_gt_test.bin";
  t.save(path);
  EXPECT_EQ(GroupTable::load(path), t);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(static_cast<std::streamoff>(t.file_size() / 2));
    f.put('\x7f');
    f.put('\x01');
  }
  EXPECT_THROW(GroupTable::load(path), FormatError);
  std::filesystem::resize_file(path, 10);
  EXPECT_THROW(GroupTable::load(path), FormatError);
  std::filesystem::remove(path);
}
