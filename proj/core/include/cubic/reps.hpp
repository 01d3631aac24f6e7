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

#ifndef CUBIC_REPS_HPP
#define CUBIC_REPS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubic/coeff.hpp"
#include "cubic/echelon.hpp"
#include "cubic/grouptable.hpp"

namespace cubic {

// Dense square matrix over a small field.
class SmallMatrix {
 public:
  SmallMatrix(RingSpec ring, int dim);
  static SmallMatrix identity(RingSpec ring, int dim);
  static SmallMatrix scalar(RingSpec ring, int dim, Scalar s);
  // Rows of field elements given as codes (for F4: 0, 1, j = 2, j^2 = 3).
  static SmallMatrix from_codes(RingSpec ring, std::vector<std::vector<std::uint32_t>> rows);

  const RingSpec& ring() const { return ring_; }
  int dim() const { return dim_; }
  Scalar at(int r, int c) const { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
  void set(int r, int c, Scalar s) { a_[static_cast<std::size_t>(r * dim_ + c)] = s; }
  bool is_zero() const;

  SmallMatrix inverse() const;
  SmallMatrix pow(int k) const;  // negative k allowed
  SmallMatrix conj() const;      // entrywise Galois conjugation

  friend SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y);
  friend SmallMatrix operator+(const SmallMatrix& x, const SmallMatrix& y);
  friend bool operator==(const SmallMatrix& x, const SmallMatrix& y) { return x.dim_ == y.dim_ && x.a_ == y.a_; }
  std::string to_string() const;

 private:
  RingSpec ring_;
  int dim_;
  std::vector<Scalar> a_;
};

// Named generator images; words are read left to right.
struct SmallRep {
  std::string name;
  RingSpec ring;
  int dim = 0;
  std::map<std::string, SmallMatrix> generators;

  // Product of generator images for (name, exponent) letters.
  SmallMatrix word(const std::vector<std::pair<std::string, int>>& letters) const;
};

SmallRep sl2_model();   // Gamma_3 as SL_2(F_3): s1, s2
SmallRep kernel_rep();  // R on the kernel of Gamma_4 -> Gamma_3: a, u, z (the center)
SmallRep rho_tilde();   // lift of the projective action of Gamma_3: s1, s2

// Letters for a braid word under rho_tilde.
SmallMatrix rho_tilde_of(const BraidWord& w);

struct SmallRepReport {
  bool sl2_braid = false;
  bool sl2_cubes = false;
  std::size_t sl2_order = 0;
  bool sl2_matches_action = false;  // action of s1, s2 on the linear characters of K
  bool r_orders = false;            // R(a)^3 = R(u)^3 = 1
  bool r_commutator = false;        // R(a)R(u)R(a)^-1R(u)^-1 = R(z) = j^2
  bool r_homomorphism = false;      // R(xy) = R(x)R(y) on all 27 elements of K
  bool rho_braid = false;
  bool rho_cubes = false;
  std::size_t kernel_order = 0;     // |K| with K = ker(Gamma_4 -> Gamma_3)
  bool kernel_words_ok = false;     // a, u, z generate K, z central, action identities hold
  bool intertwines = false;
  std::string convention;           // "rho(g) R(x) rho(g)^-1 = R(g x g^-1)" or the inverse form
  bool all() const {
    return sl2_braid && sl2_cubes && sl2_order == 24 && sl2_matches_action && r_orders && r_commutator &&
           r_homomorphism && rho_braid && rho_cubes && kernel_order == 27 && kernel_words_ok && intertwines;
  }
};

SmallRepReport check_small_reps(const GroupTable& t4);

struct IdealStructureReport {
  std::size_t iq_dim = 0;
  bool iq_single_generator = false;  // the stated five-term generator spans I_q
  std::size_t ib_dim = 0;
  bool ib_contains_generator = false;  // s1^-1 s2 + 1 in I_b
  bool ib_principal = false;           // I_b = (s1^-1 s2 + 1)
  std::size_t mq_dim = 0;
  bool j3_in_mq = false, mq_in_j2 = false;
  bool mq_plus_conj_is_j2 = false;
  bool iq_is_mq_c3 = false;
  bool all() const {
    return iq_dim == 12 && iq_single_generator && ib_dim == 21 && ib_contains_generator && ib_principal &&
           mq_dim == 4 && j3_in_mq && mq_in_j2 && mq_plus_conj_is_j2 && iq_is_mq_c3;
  }
};

IdealStructureReport iq_ib_ideals(const GroupTable& t3);

struct KernelRewriteReport {
  std::vector<std::pair<std::string, bool>> rewrites;  // each kernel rewrite checked in Gamma_4
  // The two explicit matrix sums, and the same images computed letter by
  // letter through s3 -> R(a)^-1 rho(s1) (x) s1 and projected to Mat_3(k C_3).
  bool matrix_r1_zero = false;
  bool matrix_r2_zero = false;
  bool image_r1_zero = false;
  bool image_r2_zero = false;
  bool r1_in_b = false;
  bool r2_in_b = false;
  bool r1_maps_to_b = false;
  bool r2_maps_to_0 = false;
  // r2 exactly as printed, with first term s2^2 s3.
  bool printed_image_r2_zero = false;
  bool printed_r2_in_b = false;
  bool printed_r2_maps_to_0 = false;
  std::size_t b_ideal_dim = 0;  // dim_F4 (b) in F4 Gamma_4
  bool all() const;
};

// r2 with first term s2^2 s3^2; this is the element the kernel rewrite and
// the image in k Gamma_3 refer to.
FormalElement r2_amended();

KernelRewriteReport kernel_rewrites(const GroupTable& t3, const GroupTable& t4, const ClosureOptions& opts = {});

// Dimensions over F_4 predicted by the block decomposition of k Gamma_4:
// K_4 = K_3 + 2 Mat_3(k Gamma_3 / I_q), U_4 = k Gamma_3/(b) + 2 Mat_3(k C_3).
struct BlockPrediction {
  std::size_t k3_dim = 0, iq_dim = 0, k4_dim = 0;
  std::size_t u3_dim = 0, ib_dim = 0, u4_dim = 0;
};
BlockPrediction predict_n4_blocks(const GroupTable& t3);

}  // namespace cubic

#endif
