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

#include "cubic/reps.hpp"

#include <array>
#include <set>
#include <sstream>

#include "cubic/errors.hpp"
#include "cubic/idealdim.hpp"

namespace cubic {

SmallMatrix::SmallMatrix(RingSpec ring, int dim)
    : ring_(ring), dim_(dim), a_(static_cast<std::size_t>(dim * dim), ring.zero()) {}

SmallMatrix SmallMatrix::identity(RingSpec ring, int dim) { return scalar(ring, dim, ring.one()); }

SmallMatrix SmallMatrix::scalar(RingSpec ring, int dim, Scalar s) {
  SmallMatrix m(ring, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, s);
  return m;
}

SmallMatrix SmallMatrix::from_codes(RingSpec ring, std::vector<std::vector<std::uint32_t>> rows) {
  SmallMatrix m(ring, static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.dim_) throw MismatchError("matrix is not square");
    for (int c = 0; c < m.dim_; ++c) m.set(r, c, Scalar{rows[r][c]});
  }
  return m;
}

bool SmallMatrix::is_zero() const {
  for (Scalar s : a_)
    if (s.code != 0) return false;
  return true;
}

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
  if (x.dim_ != y.dim_) throw MismatchError("matrix sizes differ");
  SmallMatrix out(x.ring_, x.dim_);
  for (int i = 0; i < x.dim_; ++i)
    for (int k = 0; k < x.dim_; ++k) {
      const Scalar xik = x.at(i, k);
      if (xik.code == 0) continue;
      for (int j = 0; j < x.dim_; ++j) out.set(i, j, x.ring_.add(out.at(i, j), x.ring_.mul(xik, y.at(k, j))));
    }
  return out;
}

SmallMatrix operator+(const SmallMatrix& x, const SmallMatrix& y) {
  if (x.dim_ != y.dim_) throw MismatchError("matrix sizes differ");
  SmallMatrix out(x.ring_, x.dim_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.ring_.add(x.a_[i], y.a_[i]);
  return out;
}

SmallMatrix SmallMatrix::inverse() const {
  const RingSpec& k = ring_;
  SmallMatrix a = *this, inv = identity(k, dim_);
  for (int c = 0; c < dim_; ++c) {
    int p = c;
    while (p < dim_ && a.at(p, c).code == 0) ++p;
    if (p == dim_) throw VerificationError("matrix is singular");
    if (p != c)
      for (int j = 0; j < dim_; ++j) {
        std::swap(a.a_[static_cast<std::size_t>(p * dim_ + j)], a.a_[static_cast<std::size_t>(c * dim_ + j)]);
        std::swap(inv.a_[static_cast<std::size_t>(p * dim_ + j)], inv.a_[static_cast<std::size_t>(c * dim_ + j)]);
      }
    const Scalar s = k.inv(a.at(c, c));
    for (int j = 0; j < dim_; ++j) {
      a.set(c, j, k.mul(s, a.at(c, j)));
      inv.set(c, j, k.mul(s, inv.at(c, j)));
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == c || a.at(r, c).code == 0) continue;
      const Scalar f = k.neg(a.at(r, c));
      for (int j = 0; j < dim_; ++j) {
        a.set(r, j, k.add(a.at(r, j), k.mul(f, a.at(c, j))));
        inv.set(r, j, k.add(inv.at(r, j), k.mul(f, inv.at(c, j))));
      }
    }
  }
  return inv;
}

SmallMatrix SmallMatrix::pow(int e) const {
  SmallMatrix base = e < 0 ? inverse() : *this;
  SmallMatrix out = identity(ring_, dim_);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

SmallMatrix SmallMatrix::conj() const {
  SmallMatrix out = *this;
  for (auto& s : out.a_) s = ring_.conj(s);
  return out;
}

std::string SmallMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < dim_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << ring_.format(at(r, c));
  }
  os << ']';
  return os.str();
}

SmallMatrix SmallRep::word(const std::vector<std::pair<std::string, int>>& letters) const {
  SmallMatrix out = SmallMatrix::identity(ring, dim);
  for (const auto& [g, e] : letters) {
    auto it = generators.find(g);
    if (it == generators.end()) throw MismatchError("unknown generator " + g + " in " + name);
    out = out * it->second.pow(e);
  }
  return out;
}

// F4 codes: 0, 1, j = 2, j^2 = 3.
SmallRep sl2_model() {
  const RingSpec k = RingSpec::f3();
  return {"SL2(F3)", k, 2,
          {{"s1", SmallMatrix::from_codes(k, {{1, 0}, {1, 1}})}, {"s2", SmallMatrix::from_codes(k, {{1, 2}, {0, 1}})}}};
}

SmallRep kernel_rep() {
  const RingSpec k = RingSpec::f4();
  return {"R", k, 3,
          {{"a", SmallMatrix::from_codes(k, {{1, 0, 0}, {2, 3, 0}, {1, 1, 2}})},
           {"u", SmallMatrix::from_codes(k, {{1, 1, 1}, {0, 1, 1}, {0, 1, 0}})},
           {"z", SmallMatrix::scalar(k, 3, k.j_pow(2))}}};
}

SmallRep rho_tilde() {
  const RingSpec k = RingSpec::f4();
  return {"rho", k, 3,
          {{"s1", SmallMatrix::from_codes(k, {{1, 0, 0}, {2, 3, 0}, {2, 2, 1}})},
           {"s2", SmallMatrix::from_codes(k, {{3, 0, 2}, {0, 1, 0}, {0, 0, 1}})}}};
}

namespace {

std::vector<std::pair<std::string, int>> s_letters(const BraidWord& w) {
  std::vector<std::pair<std::string, int>> out;
  for (int l : w.letters()) out.emplace_back("s" + std::to_string(l > 0 ? l : -l), l > 0 ? 1 : -1);
  return out;
}

// Words for the generators of K = ker(Gamma_4 -> Gamma_3).
BraidWord word_a() { return BraidWord::parse("1,-3", 4); }
BraidWord word_u() { return BraidWord::parse("-1,-2,-2,-1,3,2,2,3", 4); }
BraidWord word_z() { return BraidWord::parse("1,2,3", 4).power(4); }

BraidWord kernel_word(const std::vector<std::pair<char, int>>& letters) {
  BraidWord w(4, {});
  for (auto [g, e] : letters) {
    const BraidWord base = g == 'a' ? word_a() : g == 'u' ? word_u() : word_z();
    w = w * base.power(e);
  }
  return w;
}

// Image in Gamma_3 under s3 -> s1.
Element project(const GroupTable& t3, const BraidWord& w) {
  std::vector<int> letters;
  for (int l : w.letters()) letters.push_back(l == 3 ? 1 : l == -3 ? -1 : l);
  return t3.eval(BraidWord(3, letters));
}

// Elements a^i u^k z^l of K with their exponents and R-images.
struct KernelData {
  std::map<Element, std::array<int, 3>> exps;
  std::map<Element, SmallMatrix> r;
};

KernelData kernel_data(const GroupTable& t4) {
  const SmallRep rep = kernel_rep();
  KernelData d;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const Element x = t4.eval(kernel_word({{'a', i}, {'u', k}, {'z', l}}));
        d.exps.emplace(x, std::array<int, 3>{i, k, l});
        d.r.emplace(x, rep.word({{"a", i}, {"u", k}, {"z", l}}));
      }
  return d;
}

SmallMatrix rho_of_letter(int l) {
  static const SmallRep rho = rho_tilde();
  static const SmallRep r = kernel_rep();
  const int i = l > 0 ? l : -l, e = l > 0 ? 1 : -1;
  if (i == 3) return (r.word({{"a", -1}}) * rho.generators.at("s1")).pow(e);
  return rho.generators.at("s" + std::to_string(i)).pow(e);
}

// Image of x in Mat_3(k C_3): one matrix per residue of the length mod 3.
std::array<SmallMatrix, 3> image_in_block(const GroupTable& t3, const FormalElement& x) {
  const RingSpec k = RingSpec::f4();
  std::array<SmallMatrix, 3> out{SmallMatrix(k, 3), SmallMatrix(k, 3), SmallMatrix(k, 3)};
  for (const auto& [w, c] : x.terms()) {
    SmallMatrix m = SmallMatrix::identity(k, 3);
    for (int l : w.letters()) m = m * rho_of_letter(l);
    const int res = t3.length_mod3(project(t3, w));
    out[res] = out[res] + SmallMatrix::scalar(k, 3, k.from_eisenstein(c)) * m;
  }
  return out;
}

bool block_zero(const std::array<SmallMatrix, 3>& m) { return m[0].is_zero() && m[1].is_zero() && m[2].is_zero(); }

PackedRow projected_row(const GroupTable& t3, const FormalElement& x) {
  const RingSpec k = RingSpec::f4();
  PackedRow row(k, t3.order());
  for (const auto& [w, c] : x.terms()) {
    const Element g = project(t3, w);
    row.set(g, k.add(row.get(g), k.from_eisenstein(c)));
  }
  return row;
}

// Ideal of k Gamma_3 generated by the entries of sum_w c_w rho(w) (x) w.
EchelonBasis entry_ideal(const GroupTable& t3, const FormalElement& x) {
  const RingSpec k = RingSpec::f4();
  const SmallRep rho = rho_tilde();
  std::vector<PackedRow> rows(9, PackedRow(k, t3.order()));
  for (const auto& [w, c] : x.terms()) {
    const SmallMatrix m = rho.word(s_letters(w));
    const Element g = t3.eval(w);
    const Scalar cs = k.from_eisenstein(c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        PackedRow& r = rows[static_cast<std::size_t>(3 * i + j)];
        r.set(g, k.add(r.get(g), k.mul(cs, m.at(i, j))));
      }
  }
  const auto actions = two_sided_actions(t3);
  return close_under_permutations(k, t3.order(), std::move(rows), actions);
}

EchelonBasis span_of(RingSpec k, std::size_t length, const std::vector<PackedRow>& rows) {
  EchelonBasis b(k, length);
  for (const auto& r : rows) b.insert(r);
  return b;
}

EchelonBasis product_span(const GroupTable& t, const EchelonBasis& x, const EchelonBasis& y) {
  EchelonBasis out(x.ring(), t.order());
  for (const auto& a : x.rows())
    for (const auto& b : y.rows()) out.insert(algebra_product(t, a, b));
  return out;
}

FormalElement term(const char* word, Eisenstein c = {1, 0}, int strands = 3) {
  return FormalElement::word(BraidWord::parse(word, strands), c);
}

}  // namespace

SmallMatrix rho_tilde_of(const BraidWord& w) {
  if (w.max_index() > 2) throw MismatchError("rho_tilde is defined on Gamma_3");
  return rho_tilde().word(s_letters(w));
}

SmallRepReport check_small_reps(const GroupTable& t4) {
  if (t4.strands() != 4) throw MismatchError("check_small_reps needs Gamma_4");
  const GroupTable t3 = GroupTable::enumerate(3);
  SmallRepReport rep;

  const SmallRep sl2 = sl2_model();
  const SmallMatrix& S1 = sl2.generators.at("s1");
  const SmallMatrix& S2 = sl2.generators.at("s2");
  const SmallMatrix I2 = SmallMatrix::identity(sl2.ring, 2);
  rep.sl2_braid = S1 * S2 * S1 == S2 * S1 * S2;
  rep.sl2_cubes = S1.pow(3) == I2 && S2.pow(3) == I2;
  {
    auto key = [](const SmallMatrix& m) {
      std::vector<std::uint32_t> v;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) v.push_back(m.at(r, c).code);
      return v;
    };
    std::set<std::vector<std::uint32_t>> seen{key(I2)};
    std::vector<SmallMatrix> frontier{I2};
    while (!frontier.empty()) {
      std::vector<SmallMatrix> next;
      for (const auto& m : frontier)
        for (const auto* g : {&S1, &S2}) {
          SmallMatrix p = m * *g;
          if (seen.insert(key(p)).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    rep.sl2_order = seen.size();
  }

  // Kernel of the projection and its presentation by a, u, z.
  const KernelData kd = kernel_data(t4);
  for (Element x = 0; x < t4.order(); ++x)
    if (project(t3, t4.witness(x)) == t3.identity()) ++rep.kernel_order;
  bool inside = kd.exps.size() == 27;
  for (const auto& [x, e] : kd.exps) inside = inside && project(t3, t4.witness(x)) == t3.identity();
  const Element a = t4.eval(word_a()), u = t4.eval(word_u()), z = t4.eval(word_z());
  const Element s1 = t4.eval(BraidWord::parse("1", 4)), s2 = t4.eval(BraidWord::parse("2", 4)),
                s3 = t4.eval(BraidWord::parse("3", 4));
  bool central = true;
  for (Element g : {s1, s2, s3}) central = central && t4.mul(g, z) == t4.mul(z, g);
  const bool comm = t4.mul(t4.mul(a, u), t4.mul(t4.inv(a), t4.inv(u))) == z;
  const bool action = t4.conj(s1, u) == t4.mul(a, u) && t4.conj(s2, a) == t4.mul(t4.mul(t4.inv(u), z), a) &&
                      t4.conj(s1, a) == a && t4.conj(s2, u) == u;
  rep.kernel_words_ok = inside && central && comm && action;

  // Linear characters a -> j^alpha, u -> j^beta are permuted through the
  // exponents of g a g^-1 and g u g^-1.
  rep.sl2_matches_action = inside;
  if (inside) {
    for (auto [g, S] : {std::pair{s1, &S1}, std::pair{s2, &S2}}) {
      const auto ea = kd.exps.at(t4.conj(g, a));
      const auto eu = kd.exps.at(t4.conj(g, u));
      const std::array<int, 4> m{ea[0], ea[1], eu[0], eu[1]};
      for (int i = 0; i < 4; ++i)
        if (static_cast<std::uint32_t>(m[i] % 3) != S->at(i / 2, i % 2).code) rep.sl2_matches_action = false;
    }
  }

  const SmallRep R = kernel_rep();
  const RingSpec k = R.ring;
  const SmallMatrix I3 = SmallMatrix::identity(k, 3);
  const SmallMatrix &Ra = R.generators.at("a"), &Ru = R.generators.at("u"), &Rz = R.generators.at("z");
  rep.r_orders = Ra.pow(3) == I3 && Ru.pow(3) == I3;
  rep.r_commutator = Ra * Ru * Ra.inverse() * Ru.inverse() == Rz && Rz == SmallMatrix::scalar(k, 3, k.j_pow(2));
  rep.r_homomorphism = inside;
  if (inside)
    for (const auto& [x, mx] : kd.r)
      for (const auto& [y, my] : kd.r)
        if (!(kd.r.at(t4.mul(x, y)) == mx * my)) rep.r_homomorphism = false;

  const SmallRep rho = rho_tilde();
  const SmallMatrix &P1 = rho.generators.at("s1"), &P2 = rho.generators.at("s2");
  rep.rho_braid = P1 * P2 * P1 == P2 * P1 * P2;
  rep.rho_cubes = P1.pow(3) == I3 && P2.pow(3) == I3;

  bool forward = inside, backward = inside;
  if (inside)
    for (auto [g, P] : {std::pair{s1, &P1}, std::pair{s2, &P2}}) {
      const SmallMatrix Pi = P->inverse();
      for (const auto& [x, mx] : kd.r) {
        const SmallMatrix& target = kd.r.at(t4.conj(g, x));
        if (!(*P * mx * Pi == target)) forward = false;
        if (!(Pi * mx * *P == target)) backward = false;
      }
    }
  rep.intertwines = forward || backward;
  rep.convention = forward ? "rho(g) R(x) rho(g)^-1 = R(g x g^-1)"
                   : backward ? "rho(g)^-1 R(x) rho(g) = R(g x g^-1)"
                              : "none";
  return rep;
}

IdealStructureReport iq_ib_ideals(const GroupTable& t3) {
  if (t3.strands() != 3) throw MismatchError("iq_ib_ideals needs Gamma_3");
  const RingSpec k = RingSpec::f4();
  const std::size_t n = t3.order();
  const Eisenstein j{0, 1}, j2{-1, -1};
  IdealStructureReport rep;

  const EchelonBasis iq = entry_ideal(t3, elements::q());
  rep.iq_dim = iq.dimension();
  const FormalElement iq_gen = term("-1,2,1") + term("1,-2,1", j2) + term("2,-1,2", j2) + term("-2,-1", j) +
                               term("-1,-2", j2);
  rep.iq_single_generator = same_submodule(iq, two_sided_ideal(t3, k, {iq_gen}));

  const EchelonBasis ib = entry_ideal(t3, elements::b());
  rep.ib_dim = ib.dimension();
  const FormalElement ib_gen = term("-1,2") + FormalElement::one(3);
  rep.ib_contains_generator = ib.contains(element_row(t3, k, ib_gen));
  rep.ib_principal = same_submodule(ib, two_sided_ideal(t3, k, {ib_gen}));

  // The quaternion subgroup and its group algebra inside k Gamma_3.
  std::vector<Element> q8;
  const FormalElement q = elements::q();
  for (const auto& [w, c] : q.terms()) q8.push_back(t3.eval(w));
  std::vector<std::vector<std::uint32_t>> q_actions;
  for (Element h : q8) {
    q_actions.push_back(t3.left_multiplication(h));
    q_actions.push_back(t3.right_multiplication(h));
  }
  const FormalElement mq_gen = FormalElement::one(3) + term("1,2,1", j) + term("1,2,1,2,1,2", j2) +
                               term("1,-2", j) + term("-2,1", j);
  const EchelonBasis mq = close_under_permutations(k, n, {element_row(t3, k, mq_gen)}, q_actions);
  rep.mq_dim = mq.dimension();

  std::vector<PackedRow> aug;
  for (Element x : q8) {
    if (x == t3.identity()) continue;
    PackedRow r(k, n);
    r.set(t3.identity(), k.one());
    r.set(x, k.one());
    aug.push_back(std::move(r));
  }
  const EchelonBasis j1 = span_of(k, n, aug);
  const EchelonBasis j2s = product_span(t3, j1, j1);
  const EchelonBasis j3s = product_span(t3, j2s, j1);
  rep.j3_in_mq = contains_all(mq, j3s);
  rep.mq_in_j2 = contains_all(j2s, mq);

  std::vector<PackedRow> conj_rows;
  for (const auto& r : mq.rows()) {
    PackedRow c(k, n);
    for (std::size_t i = 0; i < n; ++i) c.set(i, k.conj(r.get(i)));
    conj_rows.push_back(std::move(c));
  }
  rep.mq_plus_conj_is_j2 = same_submodule(subspace_sum(mq, span_of(k, n, conj_rows)), j2s);

  std::vector<PackedRow> mq_c3;
  const Element s1 = t3.eval(BraidWord::parse("1", 3));
  for (const auto& r : mq.rows())
    for (Element c : {t3.identity(), s1, t3.mul(s1, s1)}) mq_c3.push_back(algebra_product(t3, r, PackedRow::unit(k, n, c)));
  rep.iq_is_mq_c3 = same_submodule(iq, span_of(k, n, mq_c3));
  return rep;
}

FormalElement r2_amended() {
  return elements::r2() - term("2,2,3", {1, 0}, 4) + term("2,2,3,3", {1, 0}, 4);
}

bool KernelRewriteReport::all() const {
  for (const auto& [name, ok] : rewrites)
    if (!ok) return false;
  return matrix_r1_zero && matrix_r2_zero && image_r1_zero && image_r2_zero && r1_in_b && r2_in_b &&
         r1_maps_to_b && r2_maps_to_0;
}

KernelRewriteReport kernel_rewrites(const GroupTable& t3, const GroupTable& t4, const ClosureOptions& opts) {
  if (t3.strands() != 3 || t4.strands() != 4) throw MismatchError("kernel_rewrites needs Gamma_3 and Gamma_4");
  const RingSpec k = RingSpec::f4();
  KernelRewriteReport rep;

  // Each term as (kernel part)(Gamma_3 part).
  struct Rewrite {
    const char* name;
    const char* lhs;
    std::vector<std::pair<char, int>> kernel;
    const char* rest;
  };
  const std::vector<Rewrite> rewrites = {
      {"s2 s3^2 = u^-1 z a s2 s1^2", "2,3,3", {{'u', -1}, {'z', 1}, {'a', 1}}, "2,1,1"},
      {"s3 s1^2 = a^-1", "3,1,1", {{'a', -1}}, ""},
      {"s2^2 s3 = a u^-1 a s2^2 s1", "2,2,3", {{'a', 1}, {'u', -1}, {'a', 1}}, "2,2,1"},
      {"s1 s3^2 = a", "1,3,3", {{'a', 1}}, ""},
      {"s2^2 s3^2 = z^-1 u a s2^2 s1^2", "2,2,3,3", {{'z', -1}, {'u', 1}, {'a', 1}}, "2,2,1,1"},
      {"s2 s3 s1^2 = a u a s2", "2,3,1,1", {{'a', 1}, {'u', 1}, {'a', 1}}, "2"},
      {"s2^2 s3 s1 = a u^-1 a s2^2 s1^2", "2,2,3,1", {{'a', 1}, {'u', -1}, {'a', 1}}, "2,2,1,1"},
      {"s1^2 s3^2 = a s1", "1,1,3,3", {{'a', 1}}, "1"},
  };
  for (const auto& r : rewrites) {
    const BraidWord rhs = kernel_word(r.kernel) * BraidWord::parse(r.rest, 4);
    rep.rewrites.emplace_back(r.name, t4.eval(BraidWord::parse(r.lhs, 4)) == t4.eval(rhs));
  }

  const SmallRep R = kernel_rep();
  const SmallRep rho = rho_tilde();
  auto P = [&](const char* w) { return rho.word(s_letters(BraidWord::parse(w, 3))); };
  const SmallMatrix m1 = R.word({{"u", -1}, {"z", 1}, {"a", 1}}) * P("2,1,1") + P("1,1,2") + P("1,2,2") +
                         R.word({{"a", -1}}) + R.word({{"a", 1}, {"u", -1}, {"a", 1}}) * P("2,2,1") +
                         R.word({{"a", 1}});
  const SmallMatrix m2 = R.word({{"z", -1}, {"u", 1}, {"a", 1}}) * P("2,2,1,1") + P("1") + P("2") +
                         R.word({{"a", 1}, {"u", 1}, {"a", 1}}) * P("2") +
                         R.word({{"a", 1}, {"u", -1}, {"a", 1}}) * P("2,2,1,1") + R.word({{"a", 1}}) * P("1");
  rep.matrix_r1_zero = m1.is_zero();
  rep.matrix_r2_zero = m2.is_zero();

  const FormalElement r1 = elements::r1().with_strands(4);
  const FormalElement r2 = r2_amended().with_strands(4);
  const FormalElement r2p = elements::r2().with_strands(4);
  rep.image_r1_zero = block_zero(image_in_block(t3, r1));
  rep.image_r2_zero = block_zero(image_in_block(t3, r2));
  rep.printed_image_r2_zero = block_zero(image_in_block(t3, r2p));

  const PackedRow b3 = element_row(t3, k, elements::b());
  rep.r1_maps_to_b = projected_row(t3, r1) == b3;
  rep.r2_maps_to_0 = projected_row(t3, r2).is_zero();
  rep.printed_r2_maps_to_0 = projected_row(t3, r2p).is_zero();

  const EchelonBasis bideal = two_sided_ideal(t4, k, {elements::b()}, opts);
  rep.b_ideal_dim = bideal.dimension();
  rep.r1_in_b = bideal.contains(element_row(t4, k, r1));
  rep.r2_in_b = bideal.contains(element_row(t4, k, r2));
  rep.printed_r2_in_b = bideal.contains(element_row(t4, k, r2p));
  return rep;
}

BlockPrediction predict_n4_blocks(const GroupTable& t3) {
  if (t3.strands() != 3) throw MismatchError("predict_n4_blocks needs Gamma_3");
  const RingSpec k = RingSpec::f4();
  BlockPrediction p;
  const std::size_t n = t3.order();
  p.k3_dim = n - two_sided_ideal(t3, k, {elements::q()}).dimension();
  p.u3_dim = n - two_sided_ideal(t3, k, {elements::b()}).dimension();
  p.iq_dim = entry_ideal(t3, elements::q()).dimension();
  p.ib_dim = entry_ideal(t3, elements::b()).dimension();
  p.k4_dim = p.k3_dim + 2 * 9 * (n - p.iq_dim);
  p.u4_dim = p.u3_dim + 2 * 9 * (n - p.ib_dim);
  return p;
}

}  // namespace cubic
