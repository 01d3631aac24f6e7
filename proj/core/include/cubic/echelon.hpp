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

#ifndef CUBIC_ECHELON_HPP
#define CUBIC_ECHELON_HPP

#include <cstddef>
#include <functional>
#include <cstdint>
#include <span>
#include <vector>

#include "cubic/packed_row.hpp"

namespace cubic {

struct InsertResult {
  bool added = false;
  std::size_t pivot = PackedRow::npos;
};

// Incremental echelon basis of a submodule of R^length.
//
// Over fields every stored row is zero at the pivots of all earlier rows and
// has its pivot entry equal to 1, so reducing in insertion order is exact.
// Over Z/4 and Z/4[j] the rows form a Howell basis: pivot entries are 1 or 2,
// and for every pivot-2 row r the row 2r is reducible by later pivots.
class EchelonBasis {
 public:
  EchelonBasis(RingSpec ring, std::size_t length);

  const RingSpec& ring() const { return ring_; }
  std::size_t length() const { return length_; }
  // Number of stored rows.
  std::size_t rank() const { return rows_.size(); }
  // Fields: rank. Chain rings: log_|k| of the module size, k the residue field.
  std::size_t dimension() const;
  // Chain rings: rows whose pivot entry is 2.
  std::size_t torsion_rows() const;
  bool is_free() const { return torsion_rows() == 0; }

  InsertResult insert(PackedRow row);
  // Caller guarantees row is already reduced against every stored row (fields only).
  InsertResult insert_reduced(PackedRow row);
  bool contains(const PackedRow& row) const;
  PackedRow reduce(PackedRow row) const;
  // Reduce each candidate against the current rows (fields only); the
  // candidates are split among `workers` threads.
  void reduce_batch(std::span<PackedRow> candidates, std::size_t workers = 1) const;
  // Reduce candidates against rows [first_row, rank()) only (fields only).
  void reduce_tail(PackedRow& candidate, std::size_t first_row) const;

  const std::vector<PackedRow>& rows() const { return rows_; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }
  std::size_t memory_bytes() const;
  std::size_t row_bytes() const;

 private:
  void reduce_field_range(PackedRow& v, std::size_t first, std::size_t last) const;
  PackedRow reduce_chain(PackedRow v) const;
  InsertResult insert_chain(PackedRow v);

  RingSpec ring_;
  std::size_t length_;
  std::vector<PackedRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint8_t> two_pivot_;         // chain rings
  std::vector<std::uint32_t> row_at_;           // chain rings: pivot column -> row
};

EchelonBasis subspace_sum(const EchelonBasis& a, const EchelonBasis& b);
// Zassenhaus: echelonize (x | x) for x in A and (y | 0) for y in B in the
// doubled space; rows with pivot in the right half span 0 x (A cap B).
EchelonBasis subspace_intersection(const EchelonBasis& a, const EchelonBasis& b);
// Every row of b lies in a.
struct ClosureOptions {
  std::size_t workers = 1;
  std::size_t memory_cap = std::size_t{8} << 30;
  std::size_t batch = 128;
};

// Linear map on rows; writes f(src) into dst (same ring and length).
using RowAction = std::function<void(const PackedRow& src, PackedRow& dst)>;

// Smallest submodule containing the seeds and stable under every action.
// Candidates are reduced against a snapshot in parallel, then inserted in a
// fixed order, so the result does not depend on the worker count.
EchelonBasis close_under(RingSpec ring, std::size_t length, std::vector<PackedRow> seeds,
                         std::span<const RowAction> actions, const ClosureOptions& opts = {});

bool contains_all(const EchelonBasis& a, const EchelonBasis& b);
bool same_submodule(const EchelonBasis& a, const EchelonBasis& b);

}  // namespace cubic

#endif
