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
#include <set>

#include "cubic/echelon.hpp"

using namespace cubic;

namespace {

using Vec = std::vector<Scalar>;

Vec random_vec(const RingSpec& r, std::size_t n, std::mt19937& rng, double density = 0.6) {
  auto el = r.elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  std::bernoulli_distribution dense(density);
  Vec v(n, r.zero());
  for (auto& x : v)
    if (dense(rng)) x = el[pick(rng)];
  return v;
}

// Plain Gaussian elimination on scalar vectors.
std::size_t naive_rank(const RingSpec& r, std::vector<Vec> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == r.zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    auto inv = r.inv(m[rank][c]);
    for (auto& x : m[rank]) x = r.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == r.zero()) continue;
      auto f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = r.sub(m[i][k], r.mul(f, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Size of the span, by closing the set of all combinations.
std::size_t span_size(const RingSpec& r, const std::vector<Vec>& gens, std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Vec> frontier{Vec(n, r.zero())};
  auto key = [](const Vec& v) {
    std::vector<std::uint32_t> k;
    for (auto x : v) k.push_back(x.code);
    return k;
  };
  seen.insert(key(frontier[0]));
  auto el = r.elements();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens)
        for (auto s : el) {
          Vec w = v;
          for (std::size_t i = 0; i < n; ++i) w[i] = r.add(w[i], r.mul(s, g[i]));
          if (seen.insert(key(w)).second) next.push_back(std::move(w));
        }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t x = 1;
  while (e--) x *= b;
  return x;
}

EchelonBasis build(const RingSpec& r, const std::vector<Vec>& rows, std::size_t n) {
  EchelonBasis e(r, n);
  for (const auto& v : rows) e.insert(PackedRow::from_values(r, v));
  return e;
}

}  // namespace

TEST(PackedRow, RoundTripAndAxpy) {
  std::mt19937 rng(7);
  for (const auto& r : {RingSpec::f2(), RingSpec::f3(), RingSpec::f4(), RingSpec::fp(5), RingSpec::fp(7),
                        RingSpec::z4(), RingSpec::z4j()}) {
    for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
      auto a = random_vec(r, n, rng), b = random_vec(r, n, rng);
      auto pa = PackedRow::from_values(r, a);
      EXPECT_EQ(pa.values(), a);
      for (auto s : r.elements()) {
        auto x = pa;
        x.axpy(PackedRow::from_values(r, b), s);
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(x.get(i), r.add(a[i], r.mul(s, b[i]))) << r.name();
        auto y = pa;
        y.scale(s);
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(y.get(i), r.mul(s, a[i])) << r.name();
      }
    }
  }
}

TEST(Echelon, FieldRankMatchesGaussianElimination) {
  std::mt19937 rng(11);
  for (const auto& r : {RingSpec::f2(), RingSpec::f3(), RingSpec::f4(), RingSpec::fp(5), RingSpec::fp(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 5 + rng() % 140, k = 1 + rng() % 40;
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vec(r, n, rng, 0.3));
      // make some rows dependent
      if (k > 3) {
        rows[2] = rows[0];
        for (std::size_t i = 0; i < n; ++i) rows[2][i] = r.add(rows[0][i], r.mul(r.from_int(2), rows[1][i]));
      }
      auto e = build(r, rows, n);
      EXPECT_EQ(e.rank(), naive_rank(r, rows)) << r.name();
      for (const auto& v : rows) EXPECT_TRUE(e.contains(PackedRow::from_values(r, v)));
    }
  }
}

TEST(Echelon, BatchReductionAgreesWithSequential) {
  std::mt19937 rng(5);
  for (const auto& r : {RingSpec::f2(), RingSpec::f3(), RingSpec::f4(), RingSpec::fp(7)}) {
    std::size_t n = 300;
    std::vector<Vec> rows;
    for (int i = 0; i < 60; ++i) rows.push_back(random_vec(r, n, rng, 0.2));
    auto e = build(r, rows, n);
    std::vector<PackedRow> cand, expect;
    for (int i = 0; i < 40; ++i) {
      cand.push_back(PackedRow::from_values(r, random_vec(r, n, rng)));
      expect.push_back(e.reduce(cand.back()));
    }
    e.reduce_batch(cand, 2);
    for (std::size_t i = 0; i < cand.size(); ++i) EXPECT_EQ(cand[i], expect[i]) << r.name();
  }
}

TEST(Echelon, ChainRingLengthMatchesBruteForce) {
  std::mt19937 rng(3);
  for (const auto& r : {RingSpec::z4(), RingSpec::z4j()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + rng() % 2, k = 1 + rng() % 3;
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < k; ++i) {
        auto v = random_vec(r, n, rng, 0.8);
        if (rng() % 2)
          for (auto& x : v) x = r.add(x, x);  // push into 2M
        rows.push_back(v);
      }
      auto e = build(r, rows, n);
      EXPECT_EQ(ipow(r.residue_size(), e.dimension()), span_size(r, rows, n)) << r.name();
      for (const auto& v : rows) EXPECT_TRUE(e.contains(PackedRow::from_values(r, v)));
    }
  }
}

TEST(Echelon, IntersectionLengthIdentity) {
  std::mt19937 rng(17);
  for (const auto& r : {RingSpec::f2(), RingSpec::f3(), RingSpec::f4(), RingSpec::z4(), RingSpec::z4j()}) {
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t n = r.is_chain() ? 3 : 30;
      std::vector<Vec> ra, rb;
      for (int i = 0; i < (r.is_chain() ? 2 : 12); ++i) ra.push_back(random_vec(r, n, rng, 0.5));
      for (int i = 0; i < (r.is_chain() ? 2 : 12); ++i) rb.push_back(random_vec(r, n, rng, 0.5));
      if (r.is_chain())
        for (auto& x : rb[0]) x = r.add(x, x);
      auto a = build(r, ra, n), b = build(r, rb, n);
      auto s = subspace_sum(a, b), i = subspace_intersection(a, b);
      EXPECT_EQ(a.dimension() + b.dimension(), s.dimension() + i.dimension()) << r.name();
      EXPECT_TRUE(contains_all(a, i));
      EXPECT_TRUE(contains_all(b, i));
      if (r.is_chain()) {
        auto all = ra;
        all.insert(all.end(), rb.begin(), rb.end());
        EXPECT_EQ(ipow(r.residue_size(), s.dimension()), span_size(r, all, n));
      }
    }
  }
}
