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

#include "cubic/hecke.hpp"

#include <algorithm>
#include <numeric>

#include "cubic/errors.hpp"

namespace cubic {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t lehmer_rank(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  std::size_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int k = i + 1; k < n; ++k)
      if (w[k] < w[i]) ++smaller;
    r = r * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return r;
}

Permutation lehmer_unrank(std::size_t rank, int n) {
  std::vector<int> code(n);
  for (int i = n - 1; i >= 0; --i) {
    code[i] = static_cast<int>(rank % static_cast<std::size_t>(n - i));
    rank /= static_cast<std::size_t>(n - i);
  }
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Permutation w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return w;
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = i + 1; k < w.size(); ++k)
      if (w[k] < w[i]) ++inv;
  return inv;
}

namespace {

int mod3(int e) { return ((e % 3) + 3) % 3; }

void masked_copy(const PackedRow& x, const std::vector<std::uint64_t>& mask, bool complement, PackedRow& out) {
  for (std::size_t p = 0; p < x.planes(); ++p) {
    const std::uint64_t* src = x.plane(p);
    std::uint64_t* dst = out.plane(p);
    for (std::size_t w = 0; w < x.words_per_plane(); ++w) dst[w] = src[w] & (complement ? ~mask[w] : mask[w]);
  }
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(int n, RingSpec ring, int alpha_exp, int beta_exp)
    : n_(n), ring_(ring), a_(mod3(alpha_exp)), b_(mod3(beta_exp)), g_(mod3(3 - mod3(alpha_exp) - mod3(beta_exp))) {
  if (n < 1 || n > 8) throw MismatchError("Hecke algebra rank out of range");
  if (!ring.has_j() || ring.tag() == RingTag::Fp) throw MismatchError("Hecke algebras are built over f4 or z4j");
  if (a_ == b_) throw MismatchError("Hecke roots must be distinct");
  sum_ab_ = ring_.add(jp(a_), jp(b_));
  prod_ab_ = ring_.mul(jp(a_), jp(b_));
  const std::size_t N = factorial(n);
  perms_.reserve(N);
  for (std::size_t r = 0; r < N; ++r) {
    perms_.push_back(lehmer_unrank(r, n));
    lengths_.push_back(coxeter_length(perms_.back()));
  }
  const std::size_t words = (N + 63) / 64;
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint32_t> lt(N), rt(N);
    std::vector<std::uint64_t> lm(words, 0), rm(words, 0);
    for (std::size_t r = 0; r < N; ++r) {
      Permutation l = perms_[r], rr = perms_[r];
      for (auto& v : l) {
        if (v == i - 1) v = static_cast<std::uint8_t>(i);
        else if (v == i) v = static_cast<std::uint8_t>(i - 1);
      }
      std::swap(rr[i - 1], rr[i]);
      lt[r] = static_cast<std::uint32_t>(lehmer_rank(l));
      rt[r] = static_cast<std::uint32_t>(lehmer_rank(rr));
      if (lengths_[lt[r]] < lengths_[r]) lm[r / 64] |= std::uint64_t{1} << (r % 64);
      if (lengths_[rt[r]] < lengths_[r]) rm[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    left_target_.push_back(std::move(lt));
    right_target_.push_back(std::move(rt));
    left_down_mask_.push_back(std::move(lm));
    right_down_mask_.push_back(std::move(rm));
  }
}

namespace {

// dst = P(x_up) - ab P(x_down) + (a + b) x_down
void apply_generator(const RingSpec& ring, const PackedRow& x, const std::vector<std::uint32_t>& target,
                     const std::vector<std::uint64_t>& down, Scalar sum, Scalar prod, PackedRow& dst) {
  PackedRow up(ring, x.length()), dn(ring, x.length());
  masked_copy(x, down, true, up);
  masked_copy(x, down, false, dn);
  up.axpy(dn, ring.neg(prod));
  permute_into(up, target, dst);
  dst.axpy(dn, sum);
}

}  // namespace

void HeckeAlgebra::left_gen_into(int i, const PackedRow& x, PackedRow& dst) const {
  if (i < 1 || i >= n_) throw MismatchError("generator index out of range");
  apply_generator(ring_, x, left_target_[i - 1], left_down_mask_[i - 1], sum_ab_, prod_ab_, dst);
}

void HeckeAlgebra::right_gen_into(int i, const PackedRow& x, PackedRow& dst) const {
  if (i < 1 || i >= n_) throw MismatchError("generator index out of range");
  apply_generator(ring_, x, right_target_[i - 1], right_down_mask_[i - 1], sum_ab_, prod_ab_, dst);
}

PackedRow HeckeAlgebra::left_gen(int i, const PackedRow& x) const {
  PackedRow out(ring_, dim());
  left_gen_into(i, x, out);
  return out;
}

PackedRow HeckeAlgebra::right_gen(int i, const PackedRow& x) const {
  PackedRow out(ring_, dim());
  right_gen_into(i, x, out);
  return out;
}

PackedRow HeckeAlgebra::right_gen_inverse(int i, const PackedRow& x) const {
  PackedRow out = right_gen(i, x);
  out.scale(ring_.neg(jp(g_)));
  out.axpy(x, ring_.neg(jp(2 * g_)));
  return out;
}

PackedRow HeckeAlgebra::mult(const PackedRow& x, const PackedRow& y) const {
  if (x.length() != dim() || y.length() != dim()) throw MismatchError("element is not in this Hecke algebra");
  PackedRow out = zero();
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar c = x.get(r);
    if (c.code == 0) continue;
    // T_w = T_{i1} ... T_{ik}: peel left descents
    std::vector<int> word;
    Permutation w = perms_[r];
    while (true) {
      int found = 0;
      for (int i = 1; i < n_ && !found; ++i) {
        // left descent: value i-1 sits after value i
        auto pi = std::find(w.begin(), w.end(), i - 1), pj = std::find(w.begin(), w.end(), i);
        if (pi > pj) found = i;
      }
      if (!found) break;
      word.push_back(found);
      for (auto& v : w) {
        if (v == found - 1) v = static_cast<std::uint8_t>(found);
        else if (v == found) v = static_cast<std::uint8_t>(found - 1);
      }
    }
    PackedRow t = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_gen(*it, t);
    out.axpy(t, c);
  }
  return out;
}

PackedRow HeckeAlgebra::project(const BraidWord& w) const {
  if (w.max_index() > n_ - 1) throw MismatchError("word has more strands than the Hecke algebra");
  PackedRow x = one();
  for (int l : w.letters()) x = l > 0 ? right_gen(l, x) : right_gen_inverse(-l, x);
  return x;
}

PackedRow HeckeAlgebra::project(const FormalElement& e) const {
  PackedRow out = zero();
  for (const auto& [w, c] : e.terms()) out.axpy(project(w), ring_.from_eisenstein(c));
  return out;
}

PackedRow HeckeAlgebra::t_word(const std::vector<int>& letters) const {
  PackedRow x = one();
  for (int l : letters) x = right_gen(l, x);
  return x;
}

PackedRow HeckeAlgebra::e_poly(int alpha_exp, int m) const {
  if (m == 0) m = n_;
  if (m > n_) throw MismatchError("E_m needs m <= n");
  PackedRow out = zero();
  for (std::size_t r = 0; r < dim(); ++r) {
    bool inside = true;
    for (int k = m; k < n_; ++k)
      if (perms_[r][k] != k) inside = false;
    if (inside) out.set(r, jp(alpha_exp * lengths_[r]));
  }
  return out;
}

std::vector<RowAction> HeckeAlgebra::left_actions() const {
  std::vector<RowAction> out;
  for (int i = 1; i < n_; ++i)
    out.emplace_back([this, i](const PackedRow& s, PackedRow& d) { left_gen_into(i, s, d); });
  return out;
}

std::vector<RowAction> HeckeAlgebra::right_actions() const {
  std::vector<RowAction> out;
  for (int i = 1; i < n_; ++i)
    out.emplace_back([this, i](const PackedRow& s, PackedRow& d) { right_gen_into(i, s, d); });
  return out;
}

EchelonBasis HeckeAlgebra::two_sided_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts) const {
  auto actions = left_actions();
  for (auto& a : right_actions()) actions.push_back(std::move(a));
  return close_under(ring_, dim(), std::move(gens), actions, opts);
}

EchelonBasis HeckeAlgebra::left_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts) const {
  return close_under(ring_, dim(), std::move(gens), left_actions(), opts);
}

PackedRow HeckeAlgebra::embed(const HeckeAlgebra& smaller, const PackedRow& x) const {
  if (smaller.n() > n_ || !(smaller.ring() == ring_) || smaller.alpha_exp() != a_ || smaller.beta_exp() != b_)
    throw MismatchError("cannot embed between these Hecke algebras");
  PackedRow out = zero();
  for (std::size_t r = 0; r < smaller.dim(); ++r) {
    const Scalar c = x.get(r);
    if (c.code == 0) continue;
    Permutation w = smaller.permutation(r);
    for (int k = smaller.n(); k < n_; ++k) w.push_back(static_cast<std::uint8_t>(k));
    out.set(lehmer_rank(w), c);
  }
  return out;
}

std::vector<PackedRow> HeckeAlgebra::group_images(const GroupTable& t) const {
  if (t.strands() > n_) throw MismatchError("group has more strands than the Hecke algebra");
  std::vector<PackedRow> out;
  out.reserve(t.order());
  for (Element x = 0; x < t.order(); ++x) out.push_back(project(t.witness(x)));
  return out;
}

PackedRow phi_transport(const HeckeAlgebra& from, const HeckeAlgebra& to, const PackedRow& x) {
  if (to.n() != from.n() || mod3(from.alpha_exp() + 2) != to.alpha_exp() ||
      mod3(from.beta_exp() + 2) != to.beta_exp())
    throw MismatchError("phi transport goes from H(a, b) to H(j^2 a, j^2 b)");
  const RingSpec& r = from.ring();
  PackedRow out = to.zero();
  for (std::size_t w = 0; w < from.dim(); ++w) {
    const Scalar c = x.get(w);
    if (c.code) out.set(w, r.mul(c, r.j_pow(from.length(w))));
  }
  return out;
}

// ---- Ocneanu trace ----

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation transposition(int n, int i) {
  Permutation s(n);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[i - 1], s[i]);
  return s;
}

Permutation inverse(const Permutation& a) {
  Permutation b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[a[i]] = static_cast<std::uint8_t>(i);
  return b;
}

}  // namespace

OcneanuTrace::OcneanuTrace(const HeckeAlgebra& h) : h_(&h) {
  if (h.ring().tag() != RingTag::Z4J) throw MismatchError("the trace is computed over z4j");
  const RingSpec& ring = h.ring();
  std::vector<PolyZ4J> prev{PolyZ4J(Z4J(1))};  // H_1
  for (int k = 2; k <= h.n(); ++k) {
    HeckeAlgebra hk(k, ring, h.alpha_exp(), h.beta_exp());
    HeckeAlgebra hk1(k - 1, ring, h.alpha_exp(), h.beta_exp());
    std::vector<PolyZ4J> cur(hk.dim());
    for (std::size_t r = 0; r < hk.dim(); ++r) {
      const Permutation& w = hk.permutation(r);
      if (w[k - 1] == k - 1) {
        cur[r] = prev[lehmer_rank(Permutation(w.begin(), w.end() - 1))];
        continue;
      }
      // w = x c with c = s_{k-1} s_{k-2} ... s_m and x in S_{k-1}
      bool done = false;
      for (int m = k - 1; m >= 1 && !done; --m) {
        Permutation c(k);
        std::iota(c.begin(), c.end(), 0);
        for (int i = k - 1; i >= m; --i) c = compose(c, transposition(k, i));
        const Permutation x = compose(w, inverse(c));
        if (x[k - 1] != k - 1 || coxeter_length(x) + (k - m) != hk.length(r)) continue;
        // tr(T_x T_{k-1} T_y) = u tr(T_x T_y), y = s_{k-2} ... s_m
        PackedRow t = hk1.basis(lehmer_rank(Permutation(x.begin(), x.end() - 1)));
        for (int i = k - 2; i >= m; --i) t = hk1.right_gen(i, t);
        PolyZ4J acc;
        for (std::size_t z = 0; z < hk1.dim(); ++z) {
          const Scalar s = t.get(z);
          if (s.code) acc += PolyZ4J(Z4J::from_scalar(s)) * prev[z];
        }
        cur[r] = PolyZ4J::u() * acc;
        done = true;
      }
      if (!done) throw VerificationError("no coset decomposition for a permutation");
    }
    prev = std::move(cur);
  }
  values_ = std::move(prev);
}

PolyZ4J OcneanuTrace::operator()(const PackedRow& x) const {
  PolyZ4J acc;
  for (std::size_t r = 0; r < h_->dim(); ++r) {
    const Scalar s = x.get(r);
    if (s.code) acc += PolyZ4J(Z4J::from_scalar(s)) * values_[r];
  }
  return acc;
}

PolyZ4J OcneanuTrace::v() const {
  const int g = h_->gamma_exp();
  return -(PolyZ4J(Z4J::j_pow(g)) * PolyZ4J::u() + PolyZ4J(Z4J::j_pow(2 * g)));
}

// ---- Temperley-Lieb ideals ----

EchelonBasis itl_ideal(const HeckeAlgebra& h, int gamma_exp, const ClosureOptions& opts) {
  return h.two_sided_ideal({h.e_poly(-gamma_exp, 3)}, opts);
}

bool en_in_e3_left_ideal(int n, RingSpec ring) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      HeckeAlgebra h(n, ring, a, b);
      const auto left = h.left_ideal({h.e_poly(-a, 3)});
      if (!left.contains(h.e_poly(-a))) return false;
    }
  return true;
}

ItlReport itl_battery(int n, const ClosureOptions& opts, EchelonBasis* cap_out, const EchelonBasis* previous_cap) {
  const RingSpec k = RingSpec::f4();
  HeckeAlgebra h(n, k, 0, 1);
  ItlReport rep;
  rep.n = n;
  const auto i1 = itl_ideal(h, 0, opts);
  const auto ij = itl_ideal(h, 1, opts);
  rep.itl_1 = i1.dimension();
  rep.itl_j = ij.dimension();
  const auto cap = subspace_intersection(i1, ij);
  rep.cap = cap.dimension();
  rep.sum = subspace_sum(i1, ij).dimension();
  if (n >= 5) {
    const PackedRow a = h.e_poly(0, 3);
    PackedRow b = h.one();
    b.axpy(h.t_word({3}), k.j_pow(2));
    b.axpy(h.t_word({4}), k.j_pow(2));
    b.axpy(h.t_word({3, 4}), k.j());
    b.axpy(h.t_word({4, 3}), k.j());
    b.axpy(h.t_word({3, 4, 3}), k.one());
    const auto ab = h.two_sided_ideal({h.mult(a, b)}, opts);
    const auto ba = h.two_sided_ideal({h.mult(b, a)}, opts);
    rep.ab = ab.dimension();
    rep.ab_equals_ba = same_submodule(ab, ba);
    if (n == 5) {
      EchelonBasis s = ab;
      s.insert(h.e_poly(0));
      s.insert(h.e_poly(2));
      rep.direct_sum = s.dimension() == rep.ab + 2 && same_submodule(s, cap);
    }
  }
  if (previous_cap) {
    HeckeAlgebra hs(n - 1, k, 0, 1);
    std::vector<PackedRow> gens;
    for (const auto& r : previous_cap->rows()) gens.push_back(h.embed(hs, r));
    const auto gen = h.two_sided_ideal(std::move(gens), opts);
    rep.from_smaller = gen.dimension();
    rep.from_smaller_contains_e = gen.contains(h.e_poly(0)) && gen.contains(h.e_poly(2));
    rep.from_smaller_inside_cap = contains_all(cap, gen);
    rep.generated_by_smaller = rep.from_smaller_inside_cap && rep.from_smaller == rep.cap;
  }
  rep.e_in_left_ideal = en_in_e3_left_ideal(n, k);
  if (cap_out) *cap_out = cap;
  return rep;
}

}  // namespace cubic
