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
#include <random>

#include "cubic/markov.hpp"

using namespace cubic;

namespace {

const PolyZ u = PolyZ::u(), v = PolyZ::v();

TraceExpr t1(const PolyZ& p) { return {p, PolyZ()}; }

}  // namespace

TEST(Markov, SmallWords) {
  MarkovEvaluator ev;
  EXPECT_EQ(ev(BraidWord(2, {})), TraceExpr::one());
  EXPECT_EQ(ev(BraidWord::parse("1")), t1(u));
  EXPECT_EQ(ev(BraidWord::parse("-1")), t1(v));
  EXPECT_EQ(ev(BraidWord::parse("1,1")), t1(v));
  EXPECT_EQ(ev(BraidWord::parse("1,2")), t1(u * u));
  EXPECT_EQ(ev(BraidWord::parse("1,-2")), t1(u * v));
  EXPECT_EQ(ev(BraidWord::parse("-1,-2,-3")), t1(v * v * v));
  // s1 s2 s1 s2 = s1^2 s2 s1 is conjugate to s2.
  EXPECT_EQ(ev(BraidWord::parse("1,2,1,2")), t1(u));
  EXPECT_EQ(ev(elements::z(3)), TraceExpr::z3());
}

TEST(Markov, QAnnihilation) {
  MarkovEvaluator ev;
  const auto r = verify_q_annihilation(ev);
  EXPECT_TRUE(r.all());
  EXPECT_EQ(r.t_qs1.collapse(), PolyZ(4) * (u + v * v));
  EXPECT_EQ(r.t_qs1sq.collapse(), PolyZ(4) * (v + u * u));
}

TEST(Markov, CyclicNormalForm) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> gen(1, 4), sign(0, 1);
  for (int k = 0; k < 300; ++k) {
    std::vector<int> w;
    for (int m = 0; m < 1 + k % 11; ++m) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    const auto nf = cyclic_normal_form(w);
    ASSERT_EQ(cyclic_normal_form(nf), nf);
    std::rotate(w.begin(), w.begin() + static_cast<long>(k % w.size()), w.end());
    ASSERT_EQ(cyclic_normal_form(w), nf);
  }
  EXPECT_TRUE(cyclic_normal_form({1, 1, 1}).empty());
  EXPECT_TRUE(cyclic_normal_form({2, 1, -1, -2}).empty());
  EXPECT_TRUE(cyclic_normal_form({1, 2, -2, 1, 1}).empty());
  EXPECT_EQ(cyclic_normal_form({2, 1, -2, 1, 1}).size(), 4u);  // s1^2 -> s1^-1
}

// The evaluator and the Hecke-algebra traces are independent routes; on
// the specializations v = -(gamma u + gamma^2) they must agree.
TEST(Markov, AgreesWithMod4Traces) {
  MarkovEvaluator ev;
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int n : {3, 4}) {
    std::uniform_int_distribution<int> gen(1, n - 1);
    for (int k = 0; k < 40; ++k) {
      std::vector<int> letters;
      for (int m = 0; m < 1 + k % 9; ++m) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
      const BraidWord w(n, letters);
      const PolyZ value = ev(w).collapse();
      const auto mod4 = mod4_trace(w);
      for (int g = 0; g < 3; ++g) ASSERT_EQ(specialize_mod4(value, g), mod4[g]) << w.to_string() << ' ' << g;
    }
  }
}

TEST(Markov, Certificates) {
  const NamedPoly g1{"g1", u * u + v}, g2{"g2", v * v + u};
  const NamedPoly target{"f", PolyZ(3) * u * g1.poly - v * g2.poly};
  const auto cert = find_certificate(target, {g1, g2}, 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(cert->verified);
  PolyZ sum;
  for (std::size_t k = 0; k < cert->cofactors.size(); ++k) sum += cert->cofactors[k] * (k == 0 ? g1.poly : g2.poly);
  EXPECT_EQ(sum, target.poly);
  EXPECT_FALSE(find_certificate({"one", PolyZ(1)}, {g1, g2}, 3).has_value());
}

TEST(Markov, QuotientA) {
  const QuotientA a;
  EXPECT_TRUE(a.is_zero(PolyZ(16)));
  EXPECT_TRUE(a.is_zero(PolyZ(4) * (u * u + v) * u));
  const PolyZ rel = PolyZ(3) * u * u * u + PolyZ(3) * v * v * v - PolyZ(5) * u * v - PolyZ(1);
  EXPECT_TRUE(a.is_zero(rel * v));
  EXPECT_FALSE(a.is_zero(PolyZ(1)));
  EXPECT_FALSE(a.is_zero(PolyZ(8)));
  EXPECT_FALSE(a.is_zero(u));
}

TEST(Markov, ConstraintsAndClassSolver) {
  MarkovEvaluator ev;
  const GroupTable t4 = GroupTable::enumerate(4);
  const auto r = verify_trace_constraints(ev, t4);
  EXPECT_TRUE(r.all());
  EXPECT_EQ(r.t_x.collapse(), u * v);
  EXPECT_EQ(r.certificates.size(), 8u);
  EXPECT_FALSE(r.intro_polynomial_member);
  EXPECT_FALSE(r.intro_polynomial_killed_mod4);
  const auto s = gamma4_class_solver(ev, t4);
  EXPECT_TRUE(s.all());
  EXPECT_EQ(s.classes, 24u);
  EXPECT_EQ(s.q_conditions, 18u);
}
