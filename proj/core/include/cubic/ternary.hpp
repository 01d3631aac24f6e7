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

#ifndef CUBIC_TERNARY_HPP
#define CUBIC_TERNARY_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cubic/hecke.hpp"

namespace cubic {

// The triple product H(j, j^2) x H(1, j^2) x H(1, j); component k misses the
// root j^k, and its subalgebra of triples whose one-dimensional characters match.
class TernaryHecke {
 public:
  TernaryHecke(int n, RingSpec ring);

  int n() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  const HeckeAlgebra& component(int k) const { return comps_[k]; }
  std::size_t block() const { return comps_[0].dim(); }
  // Packed length (blocks are padded to whole words).
  std::size_t length() const { return 3 * stride_; }
  // Coordinates of the triple product, padding excluded.
  std::size_t coordinates() const { return 3 * block(); }

  PackedRow join(const std::array<PackedRow, 3>& parts) const;
  std::array<PackedRow, 3> split(const PackedRow& x) const;

  PackedRow project(const FormalElement& e) const;
  PackedRow one() const;

  std::vector<RowAction> left_actions() const;
  std::vector<RowAction> right_actions() const;
  EchelonBasis two_sided_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts = {}) const;

  // Rows of the three character-mismatch functionals.
  std::vector<PackedRow> mismatch_rows() const;
  // dim (length over z4j) of the matching-characters subalgebra via the mismatch kernel
  std::size_t dim_by_kernel() const;
  // span of the images of all braids: closure of the identity under left multiplication
  EchelonBasis direct_span(const ClosureOptions& opts = {}) const;

 private:
  int n_;
  RingSpec ring_;
  std::vector<HeckeAlgebra> comps_;
  std::size_t stride_;
};

struct TernaryDims {
  int n = 0;
  std::string ring;
  std::size_t by_kernel = 0;
  std::size_t direct = 0;  // 0 when not computed
  bool direct_computed = false;
  bool free = true;        // z4j: no 2-torsion rows in the direct span
  std::size_t expected = 0;
};
TernaryDims ternary_dim(int n, RingSpec ring, bool direct, const ClosureOptions& opts = {});

struct HeckeImageReport {
  bool congruences = false;                 // six congruences, n = 3..5
  std::size_t pi_b1_bj_dim4 = 0;        // closure in the triple product
  std::size_t pi_b1_bj_dim4_group = 0;  // projection of the group-algebra ideal (0 if skipped)
  std::size_t rhs_dim4 = 0;             // ITL^j x ITL^j x (ITL^1 + ITL^j2)
  bool itl4_trivial_cap = false;        // ITL^1 cap ITL^j = 0 in H_4(1, j)
  std::size_t quotient5 = 0;            // dim H_5 / pi(B_1 + B_j)
  std::size_t tl5 = 0;
};
HeckeImageReport hecke_ideal_images(const GroupTable* gamma4, const ClosureOptions& opts = {});

}  // namespace cubic

#endif
