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

#ifndef CUBIC_IDEALDIM_HPP
#define CUBIC_IDEALDIM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubic/braidword.hpp"
#include "cubic/echelon.hpp"
#include "cubic/grouptable.hpp"
#include "cubic/lattice.hpp"

namespace cubic {

enum class Strategy { Closure, EnumerateCosets };
// IndexThree works inside the kernel of the length-mod-3 map.
enum class Restriction { Full, IndexThree };

struct IdealJob {
  const GroupTable* table = nullptr;
  RingSpec ring;
  std::vector<FormalElement> generators;
  Strategy strategy = Strategy::Closure;
  Restriction restriction = Restriction::Full;
};

struct IdealResult {
  std::string computation;
  int n = 0;
  std::string ring;
  std::size_t ideal_dim = 0;     // inside the ambient space actually used
  std::size_t quotient_dim = 0;  // of the full group algebra
  double wall_ms = 0;
  std::size_t mem_bytes = 0;
  EchelonBasis basis{RingSpec::f2(), 0};
};

// Coordinates of a formal element in the group algebra over ring.
PackedRow element_row(const GroupTable& t, RingSpec ring, const FormalElement& x);
// Product in the group algebra.
PackedRow algebra_product(const GroupTable& t, const PackedRow& x, const PackedRow& y);

// Span of the seeds closed under the given coordinate permutations.
EchelonBasis close_under_permutations(RingSpec ring, std::size_t length, std::vector<PackedRow> seeds,
                         std::span<const std::vector<std::uint32_t>> actions, const ClosureOptions& opts = {});

// Left and right multiplication by each s_i; these generate every g1 . x . g2.
std::vector<std::vector<std::uint32_t>> two_sided_actions(const GroupTable& t);

IdealResult ideal_closure(const IdealJob& job, const ClosureOptions& opts = {});

// Two-sided ideal of the full group algebra generated by gens.
EchelonBasis two_sided_ideal(const GroupTable& t, RingSpec ring, const std::vector<FormalElement>& gens,
                             const ClosureOptions& opts = {});

// dim k Gamma_n / (q); n = 5 goes through the index-three route.
IdealResult named_kn_dim(const GroupTable& t, RingSpec ring, const ClosureOptions& opts = {});
// dim k Gamma_n / (b).
IdealResult named_un_dim(const GroupTable& t, RingSpec ring, const ClosureOptions& opts = {});

struct RadicalReport {
  std::vector<std::size_t> q8_dims;     // J(kQ8)^r, r = 1..5
  std::vector<std::size_t> gamma3_dims; // J(kGamma_3)^r, r = 1..5
  bool q_is_j4 = false;
  bool b_is_j3 = false;
};
RadicalReport radical_powers(const GroupTable& t3);

struct BmwReport {
  int n = 0;
  std::size_t rw_plus_dim = 0;
  std::size_t rw_minus_dim = 0;
  std::size_t b1_dim = 0, bj_dim = 0, bj2_dim = 0;
  std::size_t b_plus_dim = 0;
  std::size_t b_cap_dim = 0;
  std::size_t quotient_b1 = 0;
  std::size_t quotient_cap = 0;  // dim BMW_n
  bool cap_equals_q = false;
  bool b_in_pairwise_sums = false;
  bool modular_equality = false;
  std::size_t bj_cap_bj2_dim = 0;
  bool b_in_b1_plus_cap = false;  // b in B_1 + (B_j cap B_j2)
  bool one_plus_z3_in_b_plus = false;
  std::size_t lhs_dim = 0, rhs_dim = 0;
};
BmwReport bmw_ideal_suite(const GroupTable& t, RingSpec ring = RingSpec::f4(), const ClosureOptions& opts = {});

struct ZModuleReport {
  int n = 0;
  SmithForm smith;
  // field dimensions of K_n tensor F_p computed by independent closures
  std::vector<std::pair<unsigned, std::size_t>> field_dims;
  // lengths of K_n tensor Z/p^k computed by independent closures
  std::vector<std::pair<unsigned, std::size_t>> prime_power_lengths;  // (p^k, length)
  bool consistent = false;
  double wall_ms = 0;
};
ZModuleReport zmodule_structure(const GroupTable& t, bool cross_check = true);

// Integer closure of the ideal generated by gens, optionally with modulus * Z^N added.
IntLattice integer_ideal(const GroupTable& t, const std::vector<FormalElement>& gens, std::int64_t modulus = 0);

// Cross-check: span of t . q . g over transversals of the normalizer of Q8 and of Q8 cosets.
std::size_t enumerate_q_ideal_dim(const GroupTable& t, RingSpec ring);

}  // namespace cubic

#endif
