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

#ifndef CUBIC_HECKE_HPP
#define CUBIC_HECKE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubic/braidword.hpp"
#include "cubic/echelon.hpp"
#include "cubic/grouptable.hpp"
#include "cubic/poly.hpp"

namespace cubic {

using Permutation = std::vector<std::uint8_t>;  // one-line notation on 0..n-1

std::size_t factorial(int n);
std::size_t lehmer_rank(const Permutation& w);
Permutation lehmer_unrank(std::size_t rank, int n);
int coxeter_length(const Permutation& w);

// H_n(alpha, beta) = k Gamma_n / (s_i - alpha)(s_i - beta) on the basis T_w,
// w indexed by Lehmer rank. Roots are given as exponents of j.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, RingSpec ring, int alpha_exp, int beta_exp);

  int n() const { return n_; }
  std::size_t dim() const { return perms_.size(); }
  const RingSpec& ring() const { return ring_; }
  int alpha_exp() const { return a_; }
  int beta_exp() const { return b_; }
  int gamma_exp() const { return g_; }
  const Permutation& permutation(std::size_t idx) const { return perms_[idx]; }
  int length(std::size_t idx) const { return lengths_[idx]; }
  std::size_t index(const Permutation& w) const { return lehmer_rank(w); }

  PackedRow zero() const { return PackedRow(ring_, dim()); }
  PackedRow one() const { return basis(0); }
  PackedRow basis(std::size_t idx) const { return PackedRow::unit(ring_, dim(), idx); }

  // dst = T_{s_i} x and dst = x T_{s_i}; i in 1..n-1
  void left_gen_into(int i, const PackedRow& x, PackedRow& dst) const;
  void right_gen_into(int i, const PackedRow& x, PackedRow& dst) const;
  PackedRow left_gen(int i, const PackedRow& x) const;
  PackedRow right_gen(int i, const PackedRow& x) const;
  // x T_{s_i}^{-1} = x (-gamma T - gamma^2)
  PackedRow right_gen_inverse(int i, const PackedRow& x) const;

  PackedRow mult(const PackedRow& x, const PackedRow& y) const;
  // Image of a braid word or formal sum; s_i^-1 maps to -gamma T - gamma^2.
  PackedRow project(const BraidWord& w) const;
  PackedRow project(const FormalElement& x) const;
  // Element written on the basis T_w with words read as reduced expressions.
  PackedRow t_word(const std::vector<int>& letters) const;

  // E_n(j^e) = sum_w j^(e l(w)) T_w
  PackedRow e_poly(int alpha_exp, int m = 0) const;  // m > 0: E_m inside H_n

  // Two-sided (or left) ideal generated by gens.
  EchelonBasis two_sided_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts = {}) const;
  EchelonBasis left_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts = {}) const;
  // Subalgebra-style closure: span of gens under left multiplication only.
  std::vector<RowAction> left_actions() const;
  std::vector<RowAction> right_actions() const;

  // Copy of an element of H_m (m <= n) through S_m inside S_n.
  PackedRow embed(const HeckeAlgebra& smaller, const PackedRow& x) const;

  // Images of every element of a group table (indexed like the table).
  std::vector<PackedRow> group_images(const GroupTable& t) const;

 private:
  Scalar jp(int e) const { return ring_.j_pow(e); }

  int n_;
  RingSpec ring_;
  int a_, b_, g_;
  Scalar sum_ab_, prod_ab_;  // alpha + beta, alpha beta
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  // per generator: target index of s w / w s and whether the length goes up
  std::vector<std::vector<std::uint32_t>> left_target_, right_target_;
  std::vector<std::vector<std::uint64_t>> left_down_mask_, right_down_mask_;
};

// phi transport H(alpha, beta) -> H(j^2 alpha, j^2 beta): T_w -> j^l(w) T_w
PackedRow phi_transport(const HeckeAlgebra& from, const HeckeAlgebra& to, const PackedRow& x);

// Ocneanu trace tr_gamma on H_n(alpha, beta) over Z/4[j], values in Z/4[j][u].
class OcneanuTrace {
 public:
  explicit OcneanuTrace(const HeckeAlgebra& h);
  const PolyZ4J& basis_trace(std::size_t idx) const { return values_[idx]; }
  PolyZ4J operator()(const PackedRow& x) const;
  // v = -(gamma u + gamma^2)
  PolyZ4J v() const;

 private:
  const HeckeAlgebra* h_;
  std::vector<PolyZ4J> values_;
};

struct ItlReport {
  int n = 0;
  std::size_t itl_1 = 0, itl_j = 0, cap = 0, sum = 0;
  std::size_t ab = 0;
  bool ab_equals_ba = false;
  bool direct_sum = false;            // n = 5
  std::size_t from_smaller = 0;       // ideal generated by the n-1 intersection
  bool from_smaller_contains_e = false;
  bool from_smaller_inside_cap = false;
  bool generated_by_smaller = false;  // from_smaller == cap
  bool e_in_left_ideal = false;       // E_n(alpha^-1) in H E_3(alpha^-1), all ordered root pairs
};

// ITL_n^gamma: two-sided ideal generated by E_3(gamma^-1).
EchelonBasis itl_ideal(const HeckeAlgebra& h, int gamma_exp, const ClosureOptions& opts = {});
// Intersection battery in H_n(1, j) over F4; includes the smaller-rank comparisons when
// the previous intersection is supplied.
ItlReport itl_battery(int n, const ClosureOptions& opts = {}, EchelonBasis* cap_out = nullptr,
                      const EchelonBasis* previous_cap = nullptr);
bool en_in_e3_left_ideal(int n, RingSpec ring = RingSpec::f4());

}  // namespace cubic

#endif
