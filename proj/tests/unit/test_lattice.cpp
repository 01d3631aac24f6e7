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

#include "cubic/lattice.hpp"

using namespace cubic;

namespace {

// Invariant factors from determinantal divisors of a tiny matrix by brute
// force over all k x k minors.
BigInt det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(row);
    }
    BigInt t = m[0][c] * det(sub);
    d += (c % 2 ? -t : t);
  }
  return d;
}

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

std::vector<BigInt> determinantal_factors(const std::vector<std::vector<std::int64_t>>& m, std::size_t cols) {
  std::vector<BigInt> dk{1};
  for (std::size_t k = 1; k <= std::min(m.size(), cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.size(), k, rs, cur);
    subsets(cols, k, cs, cur);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub;
        for (auto i : r) {
          std::vector<BigInt> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = gcd_big(g, det(sub));
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<BigInt> inv;
  for (std::size_t k = 1; k < dk.size(); ++k) inv.push_back(dk[k] / dk[k - 1]);
  return inv;
}

}  // namespace

TEST(Lattice, HermiteInvariants) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> ent(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + rng() % 8;
    IntLattice lat(n);
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < 2 + rng() % 8; ++i) {
      std::vector<std::int64_t> r(n);
      for (auto& x : r) x = ent(rng);
      rows.push_back(r);
      lat.insert(r);
    }
    EXPECT_TRUE(lat.is_hermite());
    for (const auto& r : rows) EXPECT_TRUE(lat.contains(r));
  }
}

TEST(Lattice, SmithMatchesDeterminantalDivisors) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> ent(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 4, k = 1 + rng() % 5;
    std::vector<std::vector<std::int64_t>> rows;
    IntLattice lat(n);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> r(n);
      for (auto& x : r) x = ent(rng) * (trial % 3 == 0 ? 3 : 1);
      rows.push_back(r);
      lat.insert(r);
    }
    auto inv = determinantal_factors(rows, n);
    auto snf = smith_normal_form(lat);
    EXPECT_EQ(snf.rank, inv.size());
    EXPECT_EQ(snf.free_rank, n - inv.size());
    std::vector<BigInt> nontrivial;
    for (auto& d : inv)
      if (d > 1) nontrivial.push_back(d);
    EXPECT_EQ(snf.factors, nontrivial);
  }
}

TEST(Lattice, ModularLengths) {
  // Z^3 / <(2,0,0),(0,12,0)> = Z + Z/2 + Z/12
  IntLattice lat(3);
  lat.insert({2, 0, 0});
  lat.insert({0, 12, 0});
  auto s = smith_normal_form(lat);
  EXPECT_EQ(s.free_rank, 1u);
  EXPECT_EQ(s.dim_mod_prime(2), 3u);
  EXPECT_EQ(s.dim_mod_prime(3), 2u);
  EXPECT_EQ(s.dim_mod_prime(5), 1u);
  EXPECT_EQ(s.length_mod_prime_power(2, 2), 2u + 1u + 2u);
  EXPECT_EQ(s.to_string(), "Z^1 + (Z/2) + (Z/12)");
}

TEST(Lattice, EscalatesPastMachineWords) {
  IntLattice lat(2);
  const std::int64_t big = (std::int64_t{1} << 61) + 1;
  lat.insert({big, 1});
  lat.insert({big - 2, 3});
  lat.insert({3, big});
  auto s = smith_normal_form(lat);
  EXPECT_EQ(s.rank, 2u);
  // compare with the determinantal oracle
  auto inv = determinantal_factors({{big, 1}, {big - 2, 3}, {3, big}}, 2);
  std::vector<BigInt> nontrivial;
  for (auto& d : inv)
    if (d > 1) nontrivial.push_back(d);
  EXPECT_EQ(s.factors, nontrivial);
}
