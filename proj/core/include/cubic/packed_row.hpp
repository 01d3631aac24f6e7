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

#ifndef CUBIC_PACKED_ROW_HPP
#define CUBIC_PACKED_ROW_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cubic/coeff.hpp"

namespace cubic {

// Dense coefficient row over a small ring.
//
// Bit-plane rings store coordinate i as bit i of each plane, and the scalar
// code is sum_p bit_p << p (F2: 1 plane; F3, F4, Z4: 2; Z4J: 4 planes, two
// Z4 pairs). F5 and F7 use one byte per coordinate. Bits past length are 0.
class PackedRow {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  PackedRow() = default;
  PackedRow(RingSpec ring, std::size_t length);
  static PackedRow from_values(RingSpec ring, std::span<const Scalar> values);
  static PackedRow unit(RingSpec ring, std::size_t length, std::size_t i);

  const RingSpec& ring() const { return ring_; }
  std::size_t length() const { return length_; }
  Scalar get(std::size_t i) const;
  void set(std::size_t i, Scalar v);
  std::vector<Scalar> values() const;

  bool is_zero() const;
  std::size_t count_nonzero() const;
  // First nonzero coordinate at index >= from, or npos.
  std::size_t leading(std::size_t from = 0) const;
  // this += s * src, touching only words from the one holding coordinate `from`.
  void axpy(const PackedRow& src, Scalar s, std::size_t from = 0);
  void scale(Scalar s);
  void clear();

  std::size_t planes() const { return planes_; }
  std::size_t words_per_plane() const { return wpp_; }
  std::size_t coords_per_word() const { return bytes_ ? 8 : 64; }
  std::uint64_t* plane(std::size_t p) { return words_.data() + p * wpp_; }
  const std::uint64_t* plane(std::size_t p) const { return words_.data() + p * wpp_; }
  std::size_t memory_bytes() const { return words_.size() * sizeof(std::uint64_t); }

  friend bool operator==(const PackedRow& x, const PackedRow& y) {
    return x.ring_ == y.ring_ && x.length_ == y.length_ && x.words_ == y.words_;
  }

 private:
  void check_compatible(const PackedRow& other) const;

  RingSpec ring_;
  std::size_t length_ = 0;
  std::size_t planes_ = 1;
  std::size_t wpp_ = 0;
  bool bytes_ = false;
  std::vector<std::uint64_t> words_;
};

// dst + s * src.
PackedRow row_axpy(PackedRow dst, const PackedRow& src, Scalar s);
// out[perm[i]] = row[i]; throws MismatchError unless perm is a bijection.
PackedRow row_permute(const PackedRow& row, std::span<const std::uint32_t> perm);
// Same without the bijection check; out must have row's ring and length.
void permute_into(const PackedRow& row, std::span<const std::uint32_t> perm, PackedRow& out);

}  // namespace cubic

#endif
