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

#include "cubic/echelon.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

constexpr std::uint32_t kNoRow = 0xffffffffu;

}  // namespace

EchelonBasis::EchelonBasis(RingSpec ring, std::size_t length) : ring_(ring), length_(length) {
  if (ring.tag() == RingTag::Z) throw MismatchError("echelon bases over z use IntLattice");
  if (ring.is_chain()) row_at_.assign(length, kNoRow);
}

std::size_t EchelonBasis::dimension() const {
  if (!ring_.is_chain()) return rows_.size();
  std::size_t d = 0;
  for (auto t : two_pivot_) d += t ? 1 : 2;
  return d;
}

std::size_t EchelonBasis::torsion_rows() const {
  return static_cast<std::size_t>(std::count(two_pivot_.begin(), two_pivot_.end(), 1));
}

std::size_t EchelonBasis::row_bytes() const { return PackedRow(ring_, length_).memory_bytes(); }

std::size_t EchelonBasis::memory_bytes() const { return rows_.size() * (row_bytes() + sizeof(PackedRow)); }

void EchelonBasis::reduce_field_range(PackedRow& v, std::size_t first, std::size_t last) const {
  if (ring_.tag() == RingTag::F2) {
    std::uint64_t* vw = v.plane(0);
    const std::size_t n = v.words_per_plane();
    for (std::size_t i = first; i < last; ++i) {
      const std::size_t p = pivots_[i];
      if ((vw[p >> 6] >> (p & 63)) & 1u) {
        const std::uint64_t* rw = rows_[i].plane(0);
        for (std::size_t w = p >> 6; w < n; ++w) vw[w] ^= rw[w];
      }
    }
    return;
  }
  for (std::size_t i = first; i < last; ++i) {
    const std::size_t p = pivots_[i];
    Scalar c = v.get(p);
    if (c.code != 0) v.axpy(rows_[i], ring_.neg(c), p);
  }
}

void EchelonBasis::reduce_tail(PackedRow& candidate, std::size_t first_row) const {
  if (ring_.is_chain()) throw MismatchError("reduce_tail is defined over fields only");
  reduce_field_range(candidate, first_row, rows_.size());
}

PackedRow EchelonBasis::reduce(PackedRow row) const {
  if (!(row.ring() == ring_) || row.length() != length_) throw MismatchError("row does not match basis");
  if (ring_.is_chain()) return reduce_chain(std::move(row));
  reduce_field_range(row, 0, rows_.size());
  return row;
}

bool EchelonBasis::contains(const PackedRow& row) const { return reduce(row).is_zero(); }

void EchelonBasis::reduce_batch(std::span<PackedRow> candidates, std::size_t workers) const {
  if (ring_.is_chain()) throw MismatchError("batch reduction is defined over fields only");
  for (const auto& c : candidates) {
    if (!(c.ring() == ring_) || c.length() != length_) throw MismatchError("row does not match basis");
  }
  auto work = [&](std::size_t lo, std::size_t hi) {
    if (ring_.tag() != RingTag::F2) {
      for (std::size_t k = lo; k < hi; ++k) reduce_field_range(candidates[k], 0, rows_.size());
      return;
    }
    const std::size_t n = length_ == 0 ? 0 : candidates[lo].words_per_plane();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      const std::size_t w0 = p >> 6;
      const std::uint64_t bit = std::uint64_t{1} << (p & 63);
      const std::uint64_t* rw = rows_[i].plane(0);
      for (std::size_t k = lo; k < hi; ++k) {
        std::uint64_t* vw = candidates[k].plane(0);
        if (vw[w0] & bit) {
          for (std::size_t w = w0; w < n; ++w) vw[w] ^= rw[w];
        }
      }
    }
  };
  if (candidates.empty()) return;
  workers = std::max<std::size_t>(1, std::min(workers, candidates.size()));
  if (workers == 1) {
    work(0, candidates.size());
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (candidates.size() + workers - 1) / workers;
  for (std::size_t lo = 0; lo < candidates.size(); lo += chunk) {
    pool.emplace_back(work, lo, std::min(candidates.size(), lo + chunk));
  }
  for (auto& t : pool) t.join();
}

InsertResult EchelonBasis::insert(PackedRow row) {
  if (!(row.ring() == ring_) || row.length() != length_) throw MismatchError("row does not match basis");
  if (ring_.is_chain()) return insert_chain(std::move(row));
  reduce_field_range(row, 0, rows_.size());
  return insert_reduced(std::move(row));
}

InsertResult EchelonBasis::insert_reduced(PackedRow row) {
  if (ring_.is_chain()) throw MismatchError("insert_reduced is defined over fields only");
  std::size_t p = row.leading();
  if (p == PackedRow::npos) return {};
  Scalar lead = row.get(p);
  if (!(lead == ring_.one())) row.scale(ring_.inv(lead));
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return {true, p};
}

PackedRow EchelonBasis::reduce_chain(PackedRow v) const {
  std::size_t pos = 0;
  while (true) {
    std::size_t c = v.leading(pos);
    if (c == PackedRow::npos) return v;
    std::uint32_t r = row_at_[c];
    if (r == kNoRow) return v;
    Scalar x = v.get(c);
    if (two_pivot_[r]) {
      if (ring_.is_unit(x)) return v;
      v.axpy(rows_[r], ring_.neg(ring_.halve(x)), c);
    } else {
      v.axpy(rows_[r], ring_.neg(x), c);
    }
    pos = c + 1;
  }
}

InsertResult EchelonBasis::insert_chain(PackedRow v) {
  v = reduce_chain(std::move(v));
  std::size_t c = v.leading();
  if (c == PackedRow::npos) return {};
  Scalar x = v.get(c);
  const Scalar two = ring_.from_int(2);
  std::uint32_t r = row_at_[c];
  if (r == kNoRow) {
    if (ring_.is_unit(x)) {
      v.scale(ring_.inv(x));
      rows_.push_back(std::move(v));
      pivots_.push_back(c);
      two_pivot_.push_back(0);
      row_at_[c] = static_cast<std::uint32_t>(rows_.size() - 1);
      return {true, c};
    }
    v.scale(ring_.inv(ring_.halve(x)));
    PackedRow doubled(ring_, length_);
    doubled.axpy(v, two);
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    two_pivot_.push_back(1);
    row_at_[c] = static_cast<std::uint32_t>(rows_.size() - 1);
    insert_chain(std::move(doubled));
    return {true, c};
  }
  // a unit meets a pivot-2 row: the unit row takes the column
  v.scale(ring_.inv(x));
  PackedRow old = std::move(rows_[r]);
  old.axpy(v, ring_.neg(two));
  rows_[r] = std::move(v);
  two_pivot_[r] = 0;
  insert_chain(std::move(old));
  return {true, c};
}

EchelonBasis subspace_sum(const EchelonBasis& a, const EchelonBasis& b) {
  EchelonBasis out = a;
  for (const auto& r : b.rows()) out.insert(r);
  return out;
}

EchelonBasis subspace_intersection(const EchelonBasis& a, const EchelonBasis& b) {
  if (!(a.ring() == b.ring()) || a.length() != b.length()) throw MismatchError("intersection of mismatched bases");
  const std::size_t n = a.length();
  const RingSpec ring = a.ring();
  EchelonBasis doubled(ring, 2 * n);
  auto lift = [&](const PackedRow& x, bool both) {
    PackedRow y(ring, 2 * n);
    for (std::size_t i = x.leading(); i != PackedRow::npos; i = x.leading(i + 1)) {
      Scalar v = x.get(i);
      y.set(i, v);
      if (both) y.set(n + i, v);
    }
    return y;
  };
  for (const auto& r : a.rows()) doubled.insert(lift(r, true));
  for (const auto& r : b.rows()) doubled.insert(lift(r, false));
  EchelonBasis out(ring, n);
  for (std::size_t k = 0; k < doubled.rank(); ++k) {
    if (doubled.pivot(k) < n) continue;
    const PackedRow& r = doubled.rows()[k];
    PackedRow x(ring, n);
    for (std::size_t i = r.leading(n); i != PackedRow::npos; i = r.leading(i + 1)) x.set(i - n, r.get(i));
    out.insert(std::move(x));
  }
  return out;
}

bool contains_all(const EchelonBasis& a, const EchelonBasis& b) {
  return std::all_of(b.rows().begin(), b.rows().end(), [&](const PackedRow& r) { return a.contains(r); });
}

bool same_submodule(const EchelonBasis& a, const EchelonBasis& b) { return contains_all(a, b) && contains_all(b, a); }

EchelonBasis close_under(RingSpec ring, std::size_t length, std::vector<PackedRow> seeds,
                         std::span<const RowAction> actions, const ClosureOptions& opts) {
  EchelonBasis basis(ring, length);
  const std::size_t row_bytes = basis.row_bytes() + sizeof(PackedRow);
  const std::size_t projected = length * row_bytes;
  auto check_memory = [&](std::size_t extra_rows) {
    if ((basis.rank() + extra_rows) * row_bytes > opts.memory_cap)
      throw ResourceError("ideal closure exceeds the memory cap (" + std::to_string(opts.memory_cap) +
                              " bytes); full basis would need " + std::to_string(projected) + " bytes",
                          projected);
  };
  if (ring.is_chain()) {
    // Howell rows get rewritten, so keep the inserted generators as the work queue.
    std::deque<PackedRow> queue;
    for (auto& s : seeds) {
      const std::size_t before = basis.dimension();
      basis.insert(s);
      if (basis.dimension() != before) queue.push_back(std::move(s));
    }
    PackedRow cand(ring, length);
    while (!queue.empty()) {
      PackedRow src = std::move(queue.front());
      queue.pop_front();
      for (const auto& a : actions) {
        a(src, cand);
        const std::size_t before = basis.dimension();
        basis.insert(cand);
        if (basis.dimension() != before) {
          check_memory(queue.size() + 1);
          queue.push_back(cand);
        }
      }
    }
    return basis;
  }
  for (auto& s : seeds) basis.insert(std::move(s));
  const std::size_t batch = std::max<std::size_t>(1, opts.batch);
  std::vector<PackedRow> cands;
  std::size_t head = 0;
  while (head < basis.rank()) {
    const std::size_t end = std::min(head + batch, basis.rank());
    check_memory((end - head) * actions.size());
    cands.assign((end - head) * actions.size(), PackedRow(ring, length));
    std::size_t k = 0;
    for (std::size_t r = head; r < end; ++r)
      for (const auto& a : actions) a(basis.rows()[r], cands[k++]);
    const std::size_t snapshot = basis.rank();
    basis.reduce_batch(cands, opts.workers);
    for (auto& c : cands) {
      if (c.is_zero()) continue;
      basis.reduce_tail(c, snapshot);
      if (c.is_zero()) continue;
      check_memory(1);
      basis.insert_reduced(std::move(c));
    }
    head = end;
  }
  return basis;
}

}  // namespace cubic
