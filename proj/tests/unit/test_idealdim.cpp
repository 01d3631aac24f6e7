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

#include <cstdint>
#include <optional>

#include "cubic/braidword.hpp"
#include "cubic/errors.hpp"
#include "cubic/grouptable.hpp"
#include "cubic/idealdim.hpp"

using namespace cubic;

namespace {

// Two-sided ideal of an integral element in F_p Gamma_n by plain dense
// elimination: saturate under left and right multiplication by each s_i.
class DenseIdeal {
 public:
  DenseIdeal(const GroupTable& t, unsigned p) : t_(t), p_(p), rows_(t.order()) {
    for (int i = 1; i < t.strands(); ++i) {
      const Element s = t.eval(BraidWord::generator(t.strands(), i));
      perms_.push_back(t.left_multiplication(s));
      perms_.push_back(t.right_multiplication(s));
    }
  }

  std::size_t close(const FormalElement& x) {
    std::vector<int> v(t_.order(), 0);
    for (const auto& [w, c] : x.terms()) {
      EXPECT_EQ(c.b, 0);
      int& e = v[t_.eval(w)];
      e = static_cast<int>(((e + c.a) % static_cast<int>(p_) + p_) % p_);
    }
    std::vector<std::vector<int>> queue{v};
    while (!queue.empty()) {
      std::vector<int> r = std::move(queue.back());
      queue.pop_back();
      if (!insert(r)) continue;
      for (const auto& perm : perms_) {
        std::vector<int> img(r.size(), 0);
        for (std::size_t k = 0; k < r.size(); ++k) img[perm[k]] = r[k];
        queue.push_back(std::move(img));
      }
    }
    return rank_;
  }

 private:
  bool insert(std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (rows_[k]) {
        const int f = v[k];
        const auto& r = *rows_[k];
        for (std::size_t m = k; m < v.size(); ++m) v[m] = static_cast<int>((v[m] + (p_ - f) * r[m]) % p_);
        continue;
      }
      int inv = 1;
      while (inv * v[k] % static_cast<int>(p_) != 1) ++inv;
      for (auto& e : v) e = e * inv % static_cast<int>(p_);
      rows_[k] = v;
      ++rank_;
      return true;
    }
    return false;
  }

  const GroupTable& t_;
  unsigned p_;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::vector<std::optional<std::vector<int>>> rows_;
  std::size_t rank_ = 0;
};

}  // namespace

TEST(IdealDim, Gamma3AgainstDenseOracle) {
  const GroupTable t = GroupTable::enumerate(3);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const RingSpec ring = RingSpec::fp(p);
    EXPECT_EQ(DenseIdeal(t, p).close(elements::q()), 24 - named_kn_dim(t, ring).quotient_dim) << p;
    EXPECT_EQ(DenseIdeal(t, p).close(elements::b()), 24 - named_un_dim(t, ring).quotient_dim) << p;
  }
  EXPECT_EQ(named_kn_dim(t, RingSpec::fp(2)).quotient_dim, 21u);
  EXPECT_EQ(named_kn_dim(t, RingSpec::fp(3)).quotient_dim, 21u);
}

TEST(IdealDim, Gamma4AgainstDenseOracle) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  const std::pair<unsigned, std::size_t> cases[] = {{2, 237}, {3, 249}, {5, 183}};
  for (auto [p, expected] : cases) {
    const auto r = named_kn_dim(t, RingSpec::fp(p));
    EXPECT_EQ(r.quotient_dim, expected) << p;
    EXPECT_EQ(DenseIdeal(t, p).close(elements::q()), 648 - r.quotient_dim) << p;
  }
  EXPECT_EQ(DenseIdeal(t, 2).close(elements::b()), 648 - named_un_dim(t, RingSpec::fp(2)).quotient_dim);
}

TEST(IdealDim, EnumerationRouteAgrees) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  for (const char* name : {"f2", "f3", "f4"}) {
    const RingSpec ring = RingSpec::parse(name);
    EXPECT_EQ(enumerate_q_ideal_dim(t, ring), 648 - named_kn_dim(t, ring).quotient_dim) << name;
  }
}

TEST(IdealDim, ResultRecord) {
  const GroupTable t = GroupTable::enumerate(3);
  const auto r = named_un_dim(t, RingSpec::f4());
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.ring, "f4");
  EXPECT_EQ(r.ideal_dim + r.quotient_dim, 24u);
  EXPECT_EQ(r.quotient_dim, 15u);
  EXPECT_GT(r.mem_bytes, 0u);
}

TEST(IdealDim, RadicalPowersOfGamma3) {
  const auto r = radical_powers(GroupTable::enumerate(3));
  EXPECT_EQ(r.q8_dims, (std::vector<std::size_t>{7, 5, 3, 1, 0}));
  EXPECT_EQ(r.gamma3_dims, (std::vector<std::size_t>{21, 15, 9, 3, 0}));
  EXPECT_TRUE(r.q_is_j4);
  EXPECT_TRUE(r.b_is_j3);
}

TEST(IdealDim, MemoryCapRaises) {
  const GroupTable t = cached_group(4, CUBIC_TEST_CACHE);
  ClosureOptions o;
  o.memory_cap = 4096;
  EXPECT_THROW(named_kn_dim(t, RingSpec::fp(3), o), ResourceError);
}

TEST(IdealDim, BmwAtThreeStrands) {
  const auto r = bmw_ideal_suite(GroupTable::enumerate(3));
  EXPECT_EQ(r.rw_plus_dim, 8u);
  EXPECT_EQ(r.rw_minus_dim, 8u);
  EXPECT_EQ(r.b1_dim, 9u);
  EXPECT_EQ(r.quotient_b1, 15u);
  EXPECT_EQ(r.b_plus_dim, 15u);
  EXPECT_EQ(r.b_cap_dim, 3u);
  EXPECT_TRUE(r.cap_equals_q);
}
