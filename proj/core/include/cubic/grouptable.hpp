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

#ifndef CUBIC_GROUPTABLE_HPP
#define CUBIC_GROUPTABLE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cubic/braidword.hpp"

namespace cubic {

using Element = std::uint32_t;

struct EnumerationOptions {
  std::size_t coset_budget = 4'000'000;
};

struct ClassPartition {
  std::vector<std::uint32_t> class_of;   // per element
  std::vector<Element> representatives;  // smallest index in each class
  std::vector<std::uint32_t> sizes;
  std::size_t count() const { return representatives.size(); }
};

// Gamma_n = B_n / <s_i^3>, fully enumerated.
//
// Generator slot g = 2(i-1) + e for s_i (e = 0) and s_i^2 (e = 1). Elements
// are numbered by breadth-first search from the identity in slot order.
class GroupTable {
 public:
  static GroupTable enumerate(int n, const EnumerationOptions& options = {});

  int strands() const { return n_; }
  std::uint32_t order() const { return order_; }
  int generator_count() const { return 2 * (n_ - 1); }
  static int slot(int i, int exponent) { return 2 * (i - 1) + (exponent == 1 ? 0 : 1); }

  std::span<const std::uint32_t> left_action(int g) const { return left_[g]; }
  std::span<const std::uint32_t> right_action(int g) const { return right_[g]; }
  std::span<const std::uint32_t> inverse_table() const { return inv_; }

  Element identity() const { return 0; }
  Element inv(Element x) const { return inv_[x]; }
  Element mul(Element x, Element y) const;
  Element pow(Element x, std::int64_t k) const;
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element eval(const BraidWord& w) const;
  BraidWord witness(Element x) const;
  std::uint32_t element_order(Element x) const;
  // Sum of letter signs mod 3.
  int length_mod3(Element x) const { return length3_[x]; }
  // Permutation x -> h x (left) or x -> x h (right) for an arbitrary element.
  std::vector<std::uint32_t> left_multiplication(Element h) const;
  std::vector<std::uint32_t> right_multiplication(Element h) const;

  ClassPartition conjugacy_classes() const;
  std::vector<Element> subgroup_closure(std::span<const Element> gens) const;
  std::vector<Element> center() const;

  void save(const std::filesystem::path& path) const;
  static GroupTable load(const std::filesystem::path& path);
  std::size_t file_size() const;

  friend bool operator==(const GroupTable& x, const GroupTable& y) {
    return x.n_ == y.n_ && x.left_ == y.left_ && x.right_ == y.right_ && x.inv_ == y.inv_;
  }

 private:
  GroupTable() = default;
  void build_derived();

  int n_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::vector<std::uint32_t>> left_;
  std::vector<std::vector<std::uint32_t>> right_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parent_slot_;
  std::vector<std::uint8_t> length3_;
};

// Load from cache_dir if present and valid, otherwise enumerate and save.
GroupTable cached_group(int n, const std::filesystem::path& cache_dir);

struct GroupFactsReport {
  bool z5_order_6 = false;
  bool z5_central = false;
  bool center_is_z5 = false;
  bool z5_square_identity = false;
  std::string z5_square_convention;  // "g^-1 x g" or "g x g^-1"
  bool z5_cube_identity = false;
  bool retraction_order_3 = false;
  bool retraction_commutes = false;
  bool retraction_braid = false;
  bool q0_order_8 = false;
  bool q0_quaternion = false;
  bool q0_center_z5_cube = false;
  bool all() const {
    return z5_order_6 && z5_central && center_is_z5 && z5_square_identity && z5_cube_identity &&
           retraction_order_3 && retraction_commutes && retraction_braid && q0_order_8 && q0_quaternion &&
           q0_center_z5_cube;
  }
};

GroupFactsReport verify_group_facts(const GroupTable& t5);

// Words generating the quaternion subgroup Q_0 of Gamma_5.
BraidWord q0_i();
BraidWord q0_j();

}  // namespace cubic

#endif
