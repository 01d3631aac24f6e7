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

#include "cubic/grouptable.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

constexpr std::int32_t kUndef = -1;

// Hasselgrove-Leech-Trotter coset enumeration over the trivial subgroup,
// with a lookahead pass when the coset budget is reached.
class CosetEnumerator {
 public:
  CosetEnumerator(int columns, std::vector<int> inverse_column, std::vector<std::vector<int>> relators,
                  std::size_t budget)
      : cols_(columns), invcol_(std::move(inverse_column)), rels_(std::move(relators)), budget_(budget) {
    new_coset();
  }

  void run() {
    for (std::int32_t c = 0; c != kUndef; c = next_[c]) {
      if (!live(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (entry(c, x) == kUndef) define(c, x);
      }
    }
  }

  // Live cosets in definition order, with the table restricted to them.
  std::vector<std::vector<std::int32_t>> finish() const {
    std::vector<std::int32_t> renumber(p_.size(), kUndef);
    std::vector<std::int32_t> order;
    for (std::int32_t c = 0; c != kUndef; c = next_[c]) {
      if (live(c)) {
        renumber[c] = static_cast<std::int32_t>(order.size());
        order.push_back(c);
      }
    }
    std::vector<std::vector<std::int32_t>> out(cols_, std::vector<std::int32_t>(order.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < cols_; ++x) {
        std::int32_t t = entry(order[k], x);
        if (t == kUndef) throw VerificationError("coset table incomplete");
        out[x][k] = renumber[t];
      }
    }
    return out;
  }

  std::size_t defined() const { return p_.size(); }

  std::size_t live_count() const {
    std::size_t k = 0;
    for (std::size_t c = 0; c < p_.size(); ++c) k += p_[c] == static_cast<std::int32_t>(c);
    return k;
  }

 private:
  bool live(std::int32_t c) const { return p_[c] == c; }
  std::int32_t& entry(std::int32_t c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  std::int32_t entry(std::int32_t c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  std::int32_t new_coset() {
    auto c = static_cast<std::int32_t>(p_.size());
    p_.push_back(c);
    next_.push_back(kUndef);
    table_.resize(table_.size() + cols_, kUndef);
    if (c > 0) next_[last_] = c;
    last_ = c;
    return c;
  }

  void define(std::int32_t c, int x) {
    if (p_.size() >= next_lookahead_) {
      lookahead();
      next_lookahead_ *= 2;
      if (!live(c)) return;
    }
    if (p_.size() >= budget_) throw BudgetError("coset enumeration exceeded its budget");
    std::int32_t d = new_coset();
    entry(c, x) = d;
    entry(d, invcol_[x]) = c;
  }

  void scan_and_fill(std::int32_t c, const std::vector<int>& r) {
    std::int32_t f = c, b = c;
    int i = 0, j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && entry(f, r[i]) != kUndef) f = entry(f, r[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && entry(b, invcol_[r[j]]) != kUndef) b = entry(b, invcol_[r[j--]]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, r[i]) = b;
        entry(b, invcol_[r[i]]) = f;
        return;
      }
      define(f, r[i]);
      if (!live(c)) return;
      f = rep(f);
      b = rep(b);
    }
  }

  // Scan without defining; collapses coincidences found along the way.
  void scan(std::int32_t c, const std::vector<int>& r) {
    std::int32_t f = c, b = c;
    int i = 0, j = static_cast<int>(r.size()) - 1;
    while (i <= j && entry(f, r[i]) != kUndef) f = entry(f, r[i++]);
    if (i > j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j >= i && entry(b, invcol_[r[j]]) != kUndef) b = entry(b, invcol_[r[j--]]);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      entry(f, r[i]) = b;
      entry(b, invcol_[r[i]]) = f;
    }
  }

  void lookahead() {
    for (std::int32_t c = 0; c != kUndef; c = next_[c]) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        scan(c, r);
      }
    }
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t r = k;
    while (p_[r] != r) r = p_[r];
    while (p_[k] != r) {
      std::int32_t n = p_[k];
      p_[k] = r;
      k = n;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    std::int32_t a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::int32_t e = queue_[qi];
      for (int x = 0; x < cols_; ++x) {
        std::int32_t f = entry(e, x);
        if (f == kUndef) continue;
        entry(f, invcol_[x]) = kUndef;
        std::int32_t e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) != kUndef) {
          merge(f1, entry(e1, x));
        } else if (entry(f1, invcol_[x]) != kUndef) {
          merge(e1, entry(f1, invcol_[x]));
        } else {
          entry(e1, x) = f1;
          entry(f1, invcol_[x]) = e1;
        }
      }
    }
  }

  int cols_;
  std::vector<int> invcol_;
  std::vector<std::vector<int>> rels_;
  std::size_t budget_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> p_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> queue_;
  std::int32_t last_ = 0;
  std::size_t next_lookahead_ = 1 << 16;
};

// Column 2(i-1) is s_i, column 2(i-1)+1 is s_i^{-1} = s_i^2.
int col(int letter) { return 2 * (std::abs(letter) - 1) + (letter > 0 ? 0 : 1); }

std::vector<std::vector<int>> presentation(int n) {
  std::vector<std::vector<int>> rels;
  auto word = [](std::initializer_list<int> letters) {
    std::vector<int> r;
    for (int l : letters) r.push_back(col(l));
    return r;
  };
  for (int i = 1; i < n; ++i) rels.push_back(word({i, i, i}));
  for (int i = 1; i + 1 < n; ++i) rels.push_back(word({i, i + 1, i, -(i + 1), -i, -(i + 1)}));
  for (int i = 1; i < n; ++i) {
    for (int k = i + 2; k < n; ++k) rels.push_back(word({i, k, -i, -k}));
  }
  return rels;
}

void put_u16(std::vector<unsigned char>& buf, std::uint16_t v) {
  buf.push_back(static_cast<unsigned char>(v & 0xff));
  buf.push_back(static_cast<unsigned char>(v >> 8));
}

void put_u32(std::vector<unsigned char>& buf, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) buf.push_back(static_cast<unsigned char>((v >> (8 * k)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

GroupTable GroupTable::enumerate(int n, const EnumerationOptions& options) {
  if (n < 2 || n > 5) throw MismatchError("Gamma_n is enumerated only for 2 <= n <= 5");
  const int cols = 2 * (n - 1);
  std::vector<int> invcol(cols);
  for (int x = 0; x < cols; ++x) invcol[x] = x ^ 1;
  CosetEnumerator tc(cols, invcol, presentation(n), options.coset_budget);
  tc.run();
  auto raw = tc.finish();
  const auto N = static_cast<std::uint32_t>(raw[0].size());

  // Renumber by breadth-first search from the identity in column order.
  std::vector<std::int32_t> fresh(N, kUndef);
  std::vector<std::uint32_t> order{0};
  fresh[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int x = 0; x < cols; ++x) {
      auto t = static_cast<std::uint32_t>(raw[x][order[k]]);
      if (fresh[t] == kUndef) {
        fresh[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  if (order.size() != N) throw VerificationError("coset graph is not connected");

  GroupTable g;
  g.n_ = n;
  g.order_ = N;
  g.right_.assign(cols, std::vector<std::uint32_t>(N));
  for (int x = 0; x < cols; ++x) {
    for (std::uint32_t k = 0; k < N; ++k) g.right_[x][k] = static_cast<std::uint32_t>(fresh[raw[x][order[k]]]);
  }
  g.build_derived();
  return g;
}

void GroupTable::build_derived() {
  const int cols = generator_count();
  const std::uint32_t N = order_;
  parent_.assign(N, 0);
  parent_slot_.assign(N, 0);
  length3_.assign(N, 0);
  std::vector<bool> seen(N, false);
  seen[0] = true;
  std::vector<std::uint32_t> order{0};
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::uint32_t x = order[k];
    for (int s = 0; s < cols; ++s) {
      std::uint32_t t = right_[s][x];
      if (!seen[t]) {
        seen[t] = true;
        parent_[t] = x;
        parent_slot_[t] = static_cast<std::uint8_t>(s);
        length3_[t] = static_cast<std::uint8_t>((length3_[x] + (s % 2 == 0 ? 1 : 2)) % 3);
        order.push_back(t);
      }
    }
  }
  if (order.size() != N) throw VerificationError("group table is not connected");
  for (std::uint32_t k = 0; k < N; ++k) {
    if (order[k] != k) throw FormatError("element numbering is not breadth-first");
  }
  // Left actions: g * (p s) = (g * p) s along the search tree.
  if (left_.size() != static_cast<std::size_t>(cols)) {
    left_.assign(cols, std::vector<std::uint32_t>(N));
    for (int g = 0; g < cols; ++g) {
      left_[g][0] = right_[g][0];
      for (std::uint32_t x = 1; x < N; ++x) left_[g][x] = right_[parent_slot_[x]][left_[g][parent_[x]]];
    }
  }
  if (inv_.size() != N) {
    inv_.assign(N, 0);
    for (std::uint32_t x = 1; x < N; ++x) inv_[x] = left_[parent_slot_[x] ^ 1][inv_[parent_[x]]];
  }
}

Element GroupTable::mul(Element x, Element y) const {
  // walk y back to the identity, then apply the letters in order
  std::uint8_t path[256];
  int len = 0;
  while (y != 0) {
    path[len++] = parent_slot_[y];
    y = parent_[y];
  }
  while (len > 0) x = right_[path[--len]][x];
  return x;
}

Element GroupTable::pow(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Element GroupTable::eval(const BraidWord& w) const {
  Element x = 0;
  for (int l : w.letters()) {
    if (std::abs(l) > n_ - 1) throw MismatchError("letter out of range for Gamma_" + std::to_string(n_));
    x = right_[col(l)][x];
  }
  return x;
}

BraidWord GroupTable::witness(Element x) const {
  std::vector<int> letters;
  while (x != 0) {
    int s = parent_slot_[x];
    letters.push_back(s % 2 == 0 ? s / 2 + 1 : -(s / 2 + 1));
    x = parent_[x];
  }
  std::reverse(letters.begin(), letters.end());
  return BraidWord(n_, std::move(letters));
}

std::uint32_t GroupTable::element_order(Element x) const {
  Element y = x;
  std::uint32_t k = 1;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> GroupTable::left_multiplication(Element h) const {
  // h = a_1 ... a_k: x -> a_1(a_2(... a_k x))
  BraidWord w = witness(h);
  std::vector<std::uint32_t> perm(order_);
  for (std::uint32_t x = 0; x < order_; ++x) perm[x] = x;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto& L = left_[col(*it)];
    for (auto& v : perm) v = L[v];
  }
  return perm;
}

std::vector<std::uint32_t> GroupTable::right_multiplication(Element h) const {
  BraidWord w = witness(h);
  std::vector<std::uint32_t> perm(order_);
  for (std::uint32_t x = 0; x < order_; ++x) perm[x] = x;
  for (int l : w.letters()) {
    const auto& R = right_[col(l)];
    for (auto& v : perm) v = R[v];
  }
  return perm;
}

ClassPartition GroupTable::conjugacy_classes() const {
  ClassPartition out;
  constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  out.class_of.assign(order_, none);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (out.class_of[x] != none) continue;
    auto id = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(x);
    std::uint32_t size = 0;
    out.class_of[x] = id;
    stack.assign(1, x);
    while (!stack.empty()) {
      std::uint32_t y = stack.back();
      stack.pop_back();
      ++size;
      for (int i = 1; i < n_; ++i) {
        // s_i y s_i^{-1}
        std::uint32_t z = right_[slot(i, 2)][left_[slot(i, 1)][y]];
        if (out.class_of[z] == none) {
          out.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

std::vector<Element> GroupTable::subgroup_closure(std::span<const Element> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<Element> out{0};
  in[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Element g : gens) {
      Element y = mul(out[k], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> GroupTable::center() const {
  std::vector<Element> out;
  for (Element x = 0; x < order_; ++x) {
    bool central = true;
    for (int g = 0; g < generator_count() && central; g += 2) central = left_[g][x] == right_[g][x];
    if (central) out.push_back(x);
  }
  return out;
}

std::size_t GroupTable::file_size() const {
  const std::size_t G = static_cast<std::size_t>(generator_count());
  return 4 + 2 + 2 + 4 + 1 + (2 * G + 1) * order_ * 4 + 4;
}

void GroupTable::save(const std::filesystem::path& path) const {
  std::vector<unsigned char> buf;
  buf.reserve(file_size());
  buf.insert(buf.end(), {'C', 'G', 'T', '1'});
  put_u16(buf, 1);
  put_u16(buf, static_cast<std::uint16_t>(n_));
  put_u32(buf, order_);
  buf.push_back(static_cast<unsigned char>(generator_count()));
  for (const auto& a : left_) for (std::uint32_t v : a) put_u32(buf, v);
  for (const auto& a : right_) for (std::uint32_t v : a) put_u32(buf, v);
  for (std::uint32_t v : inv_) put_u32(buf, v);
  auto crc = static_cast<std::uint32_t>(crc32(0L, buf.data(), static_cast<uInt>(buf.size())));
  put_u32(buf, crc);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FormatError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

GroupTable GroupTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 17) throw FormatError("truncated group table file");
  if (std::memcmp(buf.data(), "CGT1", 4) != 0) throw FormatError("bad magic in group table file");
  if (get_u16(buf.data() + 4) != 1) throw FormatError("unsupported group table version");
  GroupTable g;
  g.n_ = get_u16(buf.data() + 6);
  g.order_ = get_u32(buf.data() + 8);
  const std::size_t G = buf[12];
  if (g.n_ < 2 || g.n_ > 5 || G != static_cast<std::size_t>(g.generator_count())) {
    throw FormatError("inconsistent header in group table file");
  }
  if (buf.size() != g.file_size()) throw FormatError("truncated group table file");
  std::uint32_t stored = get_u32(buf.data() + buf.size() - 4);
  auto crc = static_cast<std::uint32_t>(crc32(0L, buf.data(), static_cast<uInt>(buf.size() - 4)));
  if (crc != stored) throw FormatError("checksum mismatch in group table file");
  const unsigned char* p = buf.data() + 13;
  auto read_array = [&](std::vector<std::uint32_t>& a) {
    a.resize(g.order_);
    for (auto& v : a) {
      v = get_u32(p);
      if (v >= g.order_) throw FormatError("element index out of range");
      p += 4;
    }
  };
  g.left_.resize(G);
  g.right_.resize(G);
  for (auto& a : g.left_) read_array(a);
  for (auto& a : g.right_) read_array(a);
  read_array(g.inv_);
  g.build_derived();
  return g;
}

GroupTable cached_group(int n, const std::filesystem::path& cache_dir) {
  std::filesystem::path file = cache_dir / ("gamma" + std::to_string(n) + ".v1.cgt");
  if (std::filesystem::exists(file)) {
    try {
      GroupTable g = GroupTable::load(file);
      if (g.strands() == n) return g;
    } catch (const FormatError&) {
      // fall through and rebuild
    }
  }
  GroupTable g = GroupTable::enumerate(n);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (!ec) g.save(file);
  return g;
}

BraidWord q0_i() {
  // i_0 = a_4^{-1} a_2 a_3 a_2
  BraidWord a2 = BraidWord::parse("-3,2,-3,1,2,3,1", 5);
  BraidWord a3 = BraidWord::parse("-4,3,-4,3", 5);
  BraidWord a4 = BraidWord::parse("4,-3,4,2,3,1,-2,1,3,1", 5);
  return a4.inverse() * a2 * a3 * a2;
}

BraidWord q0_j() {
  // j_0 = a_4^2 a_1
  BraidWord a1 = BraidWord::parse("-2,3,1,-2,3,1,-2,-1", 5);
  BraidWord a4 = BraidWord::parse("4,-3,4,2,3,1,-2,1,3,1", 5);
  return a4 * a4 * a1;
}

GroupFactsReport verify_group_facts(const GroupTable& t) {
  if (t.strands() != 5) throw MismatchError("group facts refer to Gamma_5");
  GroupFactsReport r;
  auto w = [](std::string_view s) { return BraidWord::parse(s, 5); };
  const Element z5 = t.eval(elements::z(5));
  const Element z4 = t.eval(elements::z(4).with_strands(5));
  r.z5_order_6 = t.element_order(z5) == 6;
  auto center = t.center();
  r.z5_central = std::binary_search(center.begin(), center.end(), z5);
  r.center_is_z5 = center.size() == 6 && r.z5_central;

  // s_3 . s_1 . s_1^{g} . s_1^{gh}, g = (s_2 s_3)^3, h = (s_3 s_4)^3
  const Element s1 = t.eval(w("1")), s3 = t.eval(w("3"));
  const Element g = t.eval(w("2,3").power(3));
  const Element gh = t.mul(g, t.eval(w("3,4").power(3)));
  const Element z5sq = t.mul(z5, z5);
  auto rhs = [&](bool right_conj) {
    auto cj = [&](Element by, Element x) { return right_conj ? t.mul(t.mul(t.inv(by), x), by) : t.conj(by, x); };
    return t.mul(t.mul(t.mul(s3, s1), cj(g, s1)), cj(gh, s1));
  };
  if (rhs(true) == z5sq) {
    r.z5_square_identity = true;
    r.z5_square_convention = "g^-1 x g";
  } else if (rhs(false) == z5sq) {
    r.z5_square_identity = true;
    r.z5_square_convention = "g x g^-1";
  }

  const Element inner = t.mul(t.eval(w("1,2").power(3)), t.eval(w("3,4").power(3)));
  r.z5_cube_identity = t.pow(inner, 3) == t.pow(z5, 3);

  const Element pr = t.mul(t.mul(z4, z4), z5sq);
  r.retraction_order_3 = t.element_order(pr) == 3;
  bool commutes = true;
  for (int i = 1; i <= 3; ++i) {
    Element si = t.eval(BraidWord::generator(5, i));
    commutes = commutes && t.mul(si, pr) == t.mul(pr, si);
  }
  r.retraction_commutes = commutes;
  const Element s4 = t.eval(w("4"));
  r.retraction_braid = t.mul(t.mul(s4, pr), s4) == t.mul(t.mul(pr, s4), pr);

  const Element i0 = t.eval(q0_i()), j0 = t.eval(q0_j());
  const Element gens[] = {i0, j0};
  auto q0 = t.subgroup_closure(gens);
  r.q0_order_8 = q0.size() == 8;
  const Element i2 = t.mul(i0, i0), j2 = t.mul(j0, j0), ij = t.mul(i0, j0);
  r.q0_quaternion = i2 != 0 && i2 == j2 && i2 == t.mul(ij, ij) && t.element_order(i0) == 4;
  r.q0_center_z5_cube = i2 == t.pow(z5, 3);
  return r;
}

}  // namespace cubic
