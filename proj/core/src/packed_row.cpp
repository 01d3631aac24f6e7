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

#include "cubic/packed_row.hpp"

#include <algorithm>
#include <bit>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

using u64 = std::uint64_t;

std::size_t plane_count(RingTag tag) {
  switch (tag) {
    case RingTag::F2: return 1;
    case RingTag::F3:
    case RingTag::F4:
    case RingTag::Z4: return 2;
    case RingTag::Z4J: return 4;
    case RingTag::Fp: return 1;
    case RingTag::Z: break;
  }
  throw MismatchError("packed rows are not available over z");
}

// Z4 as two bit planes: value = x0 + 2 x1.
struct Z4w {
  u64 x0, x1;
};

inline Z4w z4_add(Z4w x, Z4w y) { return {x.x0 ^ y.x0, x.x1 ^ y.x1 ^ (x.x0 & y.x0)}; }
inline Z4w z4_neg(Z4w x) { return {x.x0, x.x1 ^ x.x0}; }
inline Z4w z4_mul(Z4w x, unsigned k) {
  switch (k & 3u) {
    case 0: return {0, 0};
    case 1: return x;
    case 2: return {0, x.x0};
    default: return z4_neg(x);
  }
}

// F3 planes: value = lo + 2 hi, never both set.
inline void f3_add(u64& l1, u64& h1, u64 l2, u64 h2) {
  u64 nl = (l1 & ~(l2 | h2)) | (l2 & ~(l1 | h1)) | (h1 & h2);
  u64 nh = (h1 & ~(l2 | h2)) | (h2 & ~(l1 | h1)) | (l1 & l2);
  l1 = nl;
  h1 = nh;
}

}  // namespace

PackedRow::PackedRow(RingSpec ring, std::size_t length)
    : ring_(ring), length_(length), planes_(plane_count(ring.tag())) {
  bytes_ = ring.tag() == RingTag::Fp;
  wpp_ = bytes_ ? (length + 7) / 8 : (length + 63) / 64;
  words_.assign(planes_ * wpp_, 0);
}

PackedRow PackedRow::from_values(RingSpec ring, std::span<const Scalar> values) {
  PackedRow row(ring, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].code != 0) row.set(i, values[i]);
  }
  return row;
}

PackedRow PackedRow::unit(RingSpec ring, std::size_t length, std::size_t i) {
  PackedRow row(ring, length);
  row.set(i, ring.one());
  return row;
}

Scalar PackedRow::get(std::size_t i) const {
  if (i >= length_) throw MismatchError("coordinate out of range");
  if (bytes_) return {static_cast<std::uint32_t>((words_[i / 8] >> (8 * (i % 8))) & 0xffu)};
  std::uint32_t code = 0;
  for (std::size_t p = 0; p < planes_; ++p) {
    code |= static_cast<std::uint32_t>((words_[p * wpp_ + i / 64] >> (i % 64)) & 1u) << p;
  }
  return {code};
}

void PackedRow::set(std::size_t i, Scalar v) {
  if (i >= length_) throw MismatchError("coordinate out of range");
  if (ring_.size() != 0 && v.code >= ring_.size()) throw MismatchError("scalar code out of range");
  if (bytes_) {
    u64& w = words_[i / 8];
    unsigned shift = 8 * (i % 8);
    w = (w & ~(u64{0xff} << shift)) | (u64{v.code} << shift);
    return;
  }
  if (ring_.tag() == RingTag::F3 && v.code == 3) throw MismatchError("invalid F3 code");
  for (std::size_t p = 0; p < planes_; ++p) {
    u64& w = words_[p * wpp_ + i / 64];
    u64 bit = u64{1} << (i % 64);
    if ((v.code >> p) & 1u) {
      w |= bit;
    } else {
      w &= ~bit;
    }
  }
}

std::vector<Scalar> PackedRow::values() const {
  std::vector<Scalar> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = get(i);
  return out;
}

bool PackedRow::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](u64 w) { return w == 0; });
}

std::size_t PackedRow::count_nonzero() const {
  std::size_t count = 0;
  if (bytes_) {
    for (std::size_t i = 0; i < length_; ++i) count += get(i).code != 0;
    return count;
  }
  for (std::size_t w = 0; w < wpp_; ++w) {
    u64 m = 0;
    for (std::size_t p = 0; p < planes_; ++p) m |= words_[p * wpp_ + w];
    count += static_cast<std::size_t>(std::popcount(m));
  }
  return count;
}

std::size_t PackedRow::leading(std::size_t from) const {
  if (from >= length_) return npos;
  if (bytes_) {
    for (std::size_t w = from / 8; w < wpp_; ++w) {
      u64 m = words_[w];
      if (w == from / 8) m &= ~u64{0} << (8 * (from % 8));
      if (m != 0) return w * 8 + static_cast<std::size_t>(std::countr_zero(m)) / 8;
    }
    return npos;
  }
  for (std::size_t w = from / 64; w < wpp_; ++w) {
    u64 m = 0;
    for (std::size_t p = 0; p < planes_; ++p) m |= words_[p * wpp_ + w];
    if (w == from / 64) m &= ~u64{0} << (from % 64);
    if (m != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(m));
  }
  return npos;
}

void PackedRow::check_compatible(const PackedRow& other) const {
  if (!(ring_ == other.ring_) || length_ != other.length_) {
    throw MismatchError("row ring/length mismatch");
  }
}

void PackedRow::axpy(const PackedRow& src, Scalar s, std::size_t from) {
  check_compatible(src);
  if (s.code == 0 || from >= length_) return;
  const std::size_t w0 = bytes_ ? from / 8 : from / 64;
  const std::size_t n = wpp_;
  switch (ring_.tag()) {
    case RingTag::F2: {
      u64* d = plane(0);
      const u64* x = src.plane(0);
      for (std::size_t w = w0; w < n; ++w) d[w] ^= x[w];
      return;
    }
    case RingTag::F4: {
      u64* da = plane(0);
      u64* db = plane(1);
      const u64* xa = src.plane(0);
      const u64* xb = src.plane(1);
      switch (s.code) {
        case 1:
          for (std::size_t w = w0; w < n; ++w) {
            da[w] ^= xa[w];
            db[w] ^= xb[w];
          }
          return;
        case 2:  // j(a + bj) = b + (a + b) j
          for (std::size_t w = w0; w < n; ++w) {
            da[w] ^= xb[w];
            db[w] ^= xa[w] ^ xb[w];
          }
          return;
        default:  // j^2(a + bj) = (a + b) + a j
          for (std::size_t w = w0; w < n; ++w) {
            da[w] ^= xa[w] ^ xb[w];
            db[w] ^= xa[w];
          }
          return;
      }
    }
    case RingTag::F3: {
      u64* dl = plane(0);
      u64* dh = plane(1);
      const u64* xl = src.plane(s.code == 1 ? 0 : 1);
      const u64* xh = src.plane(s.code == 1 ? 1 : 0);
      for (std::size_t w = w0; w < n; ++w) f3_add(dl[w], dh[w], xl[w], xh[w]);
      return;
    }
    case RingTag::Z4: {
      u64* d0 = plane(0);
      u64* d1 = plane(1);
      const u64* x0 = src.plane(0);
      const u64* x1 = src.plane(1);
      for (std::size_t w = w0; w < n; ++w) {
        Z4w r = z4_add({d0[w], d1[w]}, z4_mul({x0[w], x1[w]}, s.code));
        d0[w] = r.x0;
        d1[w] = r.x1;
      }
      return;
    }
    case RingTag::Z4J: {
      const unsigned sa = s.code & 3u;
      const unsigned sb = (s.code >> 2) & 3u;
      u64* d[4] = {plane(0), plane(1), plane(2), plane(3)};
      const u64* x[4] = {src.plane(0), src.plane(1), src.plane(2), src.plane(3)};
      for (std::size_t w = w0; w < n; ++w) {
        Z4w a{x[0][w], x[1][w]};
        Z4w b{x[2][w], x[3][w]};
        // (sa + sb j)(a + b j) = sa a - sb b + (sa b + sb (a - b)) j
        Z4w nb = z4_neg(b);
        Z4w re = z4_add(z4_mul(a, sa), z4_mul(nb, sb));
        Z4w im = z4_add(z4_mul(b, sa), z4_mul(z4_add(a, nb), sb));
        Z4w ra = z4_add({d[0][w], d[1][w]}, re);
        Z4w rb = z4_add({d[2][w], d[3][w]}, im);
        d[0][w] = ra.x0;
        d[1][w] = ra.x1;
        d[2][w] = rb.x0;
        d[3][w] = rb.x1;
      }
      return;
    }
    case RingTag::Fp: {
      const unsigned p = ring_.characteristic();
      auto* d = reinterpret_cast<unsigned char*>(words_.data());
      const auto* x = reinterpret_cast<const unsigned char*>(src.words_.data());
      for (std::size_t i = w0 * 8; i < length_; ++i) {
        d[i] = static_cast<unsigned char>((d[i] + x[i] * s.code) % p);
      }
      return;
    }
    case RingTag::Z: break;
  }
  throw MismatchError("axpy over z");
}

void PackedRow::scale(Scalar s) {
  if (s == ring_.one()) return;
  PackedRow out(ring_, length_);
  out.axpy(*this, s);
  words_.swap(out.words_);
}

void PackedRow::clear() { std::fill(words_.begin(), words_.end(), 0); }

PackedRow row_axpy(PackedRow dst, const PackedRow& src, Scalar s) {
  dst.axpy(src, s);
  return dst;
}

PackedRow row_permute(const PackedRow& row, std::span<const std::uint32_t> perm) {
  if (perm.size() != row.length()) throw MismatchError("permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t target : perm) {
    if (target >= perm.size() || seen[target]) throw MismatchError("not a bijection");
    seen[target] = true;
  }
  PackedRow out(row.ring(), row.length());
  permute_into(row, perm, out);
  return out;
}

void permute_into(const PackedRow& row, std::span<const std::uint32_t> perm, PackedRow& out) {
  out.clear();
  if (row.ring().tag() == RingTag::Fp) {
    for (std::size_t i = 0; i < row.length(); ++i) {
      Scalar v = row.get(i);
      if (v.code != 0) out.set(perm[i], v);
    }
    return;
  }
  const std::size_t wpp = row.words_per_plane();
  for (std::size_t p = 0; p < row.planes(); ++p) {
    const u64* src = row.plane(p);
    u64* dst = out.plane(p);
    for (std::size_t w = 0; w < wpp; ++w) {
      u64 m = src[w];
      while (m != 0) {
        std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(m));
        m &= m - 1;
        std::uint32_t t = perm[i];
        dst[t / 64] |= u64{1} << (t % 64);
      }
    }
  }
}

}  // namespace cubic
