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

#include "cubic/errors.hpp"
#include "cubic/idealdim.hpp"
#include "cubic/reps.hpp"

using namespace cubic;

TEST(SmallMatrix, InverseAndPowers) {
  std::mt19937 rng(13);
  for (const RingSpec& ring : {RingSpec::f4(), RingSpec::fp(3)}) {
    const auto elems = ring.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    int tested = 0;
    while (tested < 40) {
      SmallMatrix m(ring, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.set(r, c, elems[pick(rng)]);
      SmallMatrix inv(ring, 3);
      try {
        inv = m.inverse();
      } catch (const VerificationError&) {
        continue;
      }
      ++tested;
      ASSERT_EQ(m * inv, SmallMatrix::identity(ring, 3));
      ASSERT_EQ(inv * m, SmallMatrix::identity(ring, 3));
      ASSERT_EQ(m.pow(-2), inv * inv);
      ASSERT_EQ(m.pow(3), m * m * m);
      ASSERT_EQ(m.pow(0), SmallMatrix::identity(ring, 3));
    }
  }
}

TEST(SmallMatrix, GaloisConjugation) {
  const RingSpec f4 = RingSpec::f4();
  const SmallMatrix x = SmallMatrix::from_codes(f4, {{2, 1}, {0, 3}});
  const SmallMatrix y = SmallMatrix::from_codes(f4, {{1, 3}, {2, 2}});
  EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
  EXPECT_EQ(x.conj().conj(), x);
  EXPECT_EQ(x.conj(), SmallMatrix::from_codes(f4, {{3, 1}, {0, 2}}));
}

TEST(Reps, SmallRepresentations) {
  const auto r = check_small_reps(cached_group(4, CUBIC_TEST_CACHE));
  EXPECT_TRUE(r.all());
  EXPECT_EQ(r.kernel_order, 27u);
  EXPECT_EQ(r.convention, "rho(g) R(x) rho(g)^-1 = R(g x g^-1)");
}

TEST(Reps, IdealsOfGamma3) {
  const auto r = iq_ib_ideals(GroupTable::enumerate(3));
  EXPECT_TRUE(r.all());
  EXPECT_EQ(r.iq_dim, 12u);
  EXPECT_EQ(r.ib_dim, 21u);
  EXPECT_EQ(r.mq_dim, 4u);
}

TEST(Reps, KernelRewritesAndPrintedR2) {
  const GroupTable t3 = GroupTable::enumerate(3);
  const auto r = kernel_rewrites(t3, cached_group(4, CUBIC_TEST_CACHE));
  EXPECT_TRUE(r.all());
  for (const auto& [name, ok] : r.rewrites) EXPECT_TRUE(ok) << name;
  // The element with first term s2^2 s3 is not in (b) and its image is nonzero.
  EXPECT_FALSE(r.printed_image_r2_zero);
  EXPECT_FALSE(r.printed_r2_in_b);
  EXPECT_FALSE(r.printed_r2_maps_to_0);
  EXPECT_EQ(r2_amended() - elements::r2(),
            FormalElement::parse_sum(4, {"-2,-3"}) - FormalElement::parse_sum(4, {"-2,3"}));
}

// The block decomposition and the group-algebra closure are separate routes.
TEST(Reps, BlockPredictionMatchesClosure) {
  const GroupTable t3 = GroupTable::enumerate(3), t4 = cached_group(4, CUBIC_TEST_CACHE);
  const BlockPrediction p = predict_n4_blocks(t3);
  EXPECT_EQ(p.k3_dim, 21u);
  EXPECT_EQ(p.u3_dim, 15u);
  EXPECT_EQ(p.k4_dim, named_kn_dim(t4, RingSpec::f4()).quotient_dim);
  EXPECT_EQ(p.u4_dim, named_un_dim(t4, RingSpec::f4()).quotient_dim);
  EXPECT_EQ(p.k4_dim, 237u);
  EXPECT_EQ(p.u4_dim, 69u);
}
