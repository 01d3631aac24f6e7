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

#include <algorithm>
#include <numeric>
#include <random>

#include "cubic/hecke.hpp"
#include "cubic/ternary.hpp"

using namespace cubic;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, letters);
}

PackedRow random_row(std::mt19937& rng, const HeckeAlgebra& h) {
  const auto elems = h.ring().elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  PackedRow r = h.zero();
  for (std::size_t k = 0; k < h.dim(); ++k) r.set(k, elems[pick(rng)]);
  return r;
}

int inversions(const Permutation& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

}  // namespace

TEST(Permutations, LehmerRankIsABijection) {
  for (int n = 1; n <= 6; ++n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    std::size_t count = 0;
    do {
      const std::size_t r = lehmer_rank(w);
      ASSERT_LT(r, factorial(n));
      ASSERT_EQ(lehmer_unrank(r, n), w);
      ASSERT_EQ(coxeter_length(w), inversions(w));
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    EXPECT_EQ(count, factorial(n));
  }
}

// Quadratic relation, T^3 = 1, braid relations, and word projection is
// multiplicative, for every pair of distinct roots.
TEST(Hecke, DefiningRelations) {
  for (const char* name : {"f4", "z4j"}) {
    const RingSpec ring = RingSpec::parse(name);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const HeckeAlgebra h(4, ring, a, b);
        ASSERT_EQ(h.dim(), 24u);
        for (int i = 1; i < 4; ++i) {
          const PackedRow t = h.project(BraidWord::generator(4, i));
          PackedRow quad = h.mult(t, t);
          quad.axpy(t, ring.neg(ring.add(ring.j_pow(a), ring.j_pow(b))));
          quad.axpy(h.one(), ring.j_pow(a + b));
          EXPECT_TRUE(quad.is_zero()) << name << ' ' << a << b << ' ' << i;
          EXPECT_EQ(h.mult(h.mult(t, t), t), h.one());
          EXPECT_EQ(h.mult(t, h.project(BraidWord::generator(4, i, -1))), h.one());
        }
        EXPECT_EQ(h.project(BraidWord::parse("1,2,1")), h.project(BraidWord::parse("2,1,2")));
        EXPECT_EQ(h.project(BraidWord::parse("1,3")), h.project(BraidWord::parse("3,1")));
      }
  }
}

TEST(Hecke, AssociativeAndMultiplicative) {
  std::mt19937 rng(21);
  const HeckeAlgebra h(5, RingSpec::f4(), 0, 1);
  for (int k = 0; k < 20; ++k) {
    const PackedRow x = random_row(rng, h), y = random_row(rng, h), z = random_row(rng, h);
    ASSERT_EQ(h.mult(h.mult(x, y), z), h.mult(x, h.mult(y, z)));
    const BraidWord u = random_word(rng, 5, 9), v = random_word(rng, 5, 7);
    ASSERT_EQ(h.project(u * v), h.mult(h.project(u), h.project(v)));
  }
}

TEST(Hecke, PhiTransport) {
  std::mt19937 rng(4);
  const HeckeAlgebra from(4, RingSpec::f4(), 0, 1), to(4, RingSpec::f4(), 2, 0);
  for (int k = 0; k < 20; ++k) {
    const BraidWord w = random_word(rng, 4, 8);
    ASSERT_EQ(phi_transport(from, to, from.project(w)), to.project(phi(FormalElement::word(w))));
  }
}

// tr(xy) = tr(yx), tr(1) = 1 and the Markov property tr(x T_{n-1}) = u tr(x).
TEST(OcneanuTrace, CyclicAndMarkov) {
  std::mt19937 rng(8);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const HeckeAlgebra h4(4, RingSpec::z4j(), a, b), h3(3, RingSpec::z4j(), a, b);
      const OcneanuTrace tr4(h4), tr3(h3);
      EXPECT_EQ(tr4(h4.one()), PolyZ4J(Z4J(1, 0)));
      for (int k = 0; k < 25; ++k) {
        const PackedRow x = random_row(rng, h4), y = random_row(rng, h4);
        ASSERT_EQ(tr4(h4.mult(x, y)), tr4(h4.mult(y, x)));
        const PackedRow z = random_row(rng, h3);
        const PackedRow ez = h4.embed(h3, z);
        ASSERT_EQ(tr4(ez), tr3(z));
        ASSERT_EQ(tr4(h4.mult(ez, h4.project(BraidWord::generator(4, 3)))), PolyZ4J::u() * tr3(z));
        ASSERT_EQ(tr4(h4.mult(ez, h4.project(BraidWord::generator(4, 3, -1)))), tr4.v() * tr3(z));
      }
    }
}

TEST(Hecke, ItlMembership) {
  for (int n = 4; n <= 6; ++n) EXPECT_TRUE(en_in_e3_left_ideal(n)) << n;
}

TEST(Hecke, ItlAtFiveStrands) {
  const ItlReport r = itl_battery(5);
  EXPECT_EQ(r.cap, 38u);
  EXPECT_EQ(r.ab, 36u);
  EXPECT_TRUE(r.ab_equals_ba);
  EXPECT_TRUE(r.direct_sum);
  EXPECT_EQ(r.itl_1 + r.itl_j, r.cap + r.sum);
}

// Two routes to the ternary dimension: kernel of the mismatch functionals and
// the span of the braid images.
TEST(TernaryHecke, KernelAndDirectSpanAgree) {
  const std::pair<int, std::size_t> cases[] = {{3, 15}, {4, 69}, {5, 357}};
  for (auto [n, expected] : cases) {
    const auto f4 = ternary_dim(n, RingSpec::f4(), true);
    EXPECT_EQ(f4.by_kernel, expected);
    EXPECT_EQ(f4.direct, expected);
    const auto z = ternary_dim(n, RingSpec::z4j(), n <= 4);
    EXPECT_EQ(z.by_kernel, expected);
    if (n <= 4) {
      EXPECT_EQ(z.direct, expected);
      EXPECT_TRUE(z.free);
    }
  }
}

TEST(TernaryHecke, JoinSplit) {
  const TernaryHecke t(3, RingSpec::f4());
  EXPECT_EQ(t.block(), 6u);
  EXPECT_EQ(t.coordinates(), 18u);
  const PackedRow x = t.project(elements::q());
  const auto parts = t.split(x);
  EXPECT_EQ(t.join(parts), x);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(parts[k], t.component(k).project(elements::q()));
  EXPECT_TRUE(t.project(elements::c()).is_zero());
}
