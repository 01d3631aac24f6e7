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

#include "cubic/ternary.hpp"

#include <algorithm>

#include "cubic/errors.hpp"
#include "cubic/idealdim.hpp"

namespace cubic {

namespace {

// roots of the component that misses j^k
std::pair<int, int> roots_missing(int k) {
  switch (k) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace

TernaryHecke::TernaryHecke(int n, RingSpec ring) : n_(n), ring_(ring) {
  for (int k = 0; k < 3; ++k) {
    auto [a, b] = roots_missing(k);
    comps_.emplace_back(n, ring, a, b);
  }
  stride_ = (comps_[0].dim() + 63) / 64 * 64;
}

PackedRow TernaryHecke::join(const std::array<PackedRow, 3>& parts) const {
  PackedRow out(ring_, length());
  const std::size_t w = stride_ / 64;
  for (int k = 0; k < 3; ++k) {
    if (parts[k].length() != block()) throw MismatchError("triple component has the wrong length");
    for (std::size_t p = 0; p < out.planes(); ++p)
      std::copy_n(parts[k].plane(p), parts[k].words_per_plane(), out.plane(p) + k * w);
  }
  return out;
}

std::array<PackedRow, 3> TernaryHecke::split(const PackedRow& x) const {
  std::array<PackedRow, 3> out{PackedRow(ring_, block()), PackedRow(ring_, block()), PackedRow(ring_, block())};
  const std::size_t w = stride_ / 64;
  for (int k = 0; k < 3; ++k)
    for (std::size_t p = 0; p < x.planes(); ++p)
      std::copy_n(x.plane(p) + k * w, out[k].words_per_plane(), out[k].plane(p));
  return out;
}

PackedRow TernaryHecke::project(const FormalElement& e) const {
  return join({comps_[0].project(e), comps_[1].project(e), comps_[2].project(e)});
}

PackedRow TernaryHecke::one() const { return join({comps_[0].one(), comps_[1].one(), comps_[2].one()}); }

std::vector<RowAction> TernaryHecke::left_actions() const {
  std::vector<RowAction> out;
  for (int i = 1; i < n_; ++i)
    out.emplace_back([this, i](const PackedRow& s, PackedRow& d) {
      auto parts = split(s);
      for (int k = 0; k < 3; ++k) parts[k] = comps_[k].left_gen(i, parts[k]);
      d = join(parts);
    });
  return out;
}

std::vector<RowAction> TernaryHecke::right_actions() const {
  std::vector<RowAction> out;
  for (int i = 1; i < n_; ++i)
    out.emplace_back([this, i](const PackedRow& s, PackedRow& d) {
      auto parts = split(s);
      for (int k = 0; k < 3; ++k) parts[k] = comps_[k].right_gen(i, parts[k]);
      d = join(parts);
    });
  return out;
}

EchelonBasis TernaryHecke::two_sided_ideal(std::vector<PackedRow> gens, const ClosureOptions& opts) const {
  auto actions = left_actions();
  for (auto& a : right_actions()) actions.push_back(std::move(a));
  return close_under(ring_, length(), std::move(gens), actions, opts);
}

std::vector<PackedRow> TernaryHecke::mismatch_rows() const {
  std::vector<PackedRow> rows;
  for (int a = 0; a < 3; ++a) {
    // q_alpha(x) - q_alpha(y) on the two components having j^a as a root
    std::array<PackedRow, 3> parts{PackedRow(ring_, block()), PackedRow(ring_, block()), PackedRow(ring_, block())};
    bool first = true;
    for (int k = 0; k < 3; ++k) {
      if (k == a) continue;
      for (std::size_t w = 0; w < block(); ++w) {
        Scalar c = ring_.j_pow(a * comps_[k].length(w));
        parts[k].set(w, first ? c : ring_.neg(c));
      }
      first = false;
    }
    rows.push_back(join(parts));
  }
  return rows;
}

std::size_t TernaryHecke::dim_by_kernel() const {
  EchelonBasis img(ring_, length());
  for (auto& r : mismatch_rows()) img.insert(std::move(r));
  const std::size_t full = ring_.is_chain() ? 2 * coordinates() : coordinates();
  return full - img.dimension();
}

EchelonBasis TernaryHecke::direct_span(const ClosureOptions& opts) const {
  return close_under(ring_, length(), {one()}, left_actions(), opts);
}

TernaryDims ternary_dim(int n, RingSpec ring, bool direct, const ClosureOptions& opts) {
  TernaryHecke t(n, ring);
  TernaryDims d;
  d.n = n;
  d.ring = ring.name();
  d.expected = 3 * (factorial(n) - 1);
  const std::size_t per = ring.is_chain() ? 2 : 1;
  d.by_kernel = t.dim_by_kernel() / per;
  if (direct) {
    const auto span = t.direct_span(opts);
    d.direct_computed = true;
    d.free = span.is_free();
    d.direct = span.dimension() / per;
  }
  return d;
}

HeckeImageReport hecke_ideal_images(const GroupTable* gamma4, const ClosureOptions& opts) {
  const RingSpec k = RingSpec::f4();
  HeckeImageReport rep;
  const auto rp = elements::rw_plus(), rm = elements::rw_minus();
  auto scaled = [&](PackedRow x, int e) {
    x.scale(k.j_pow(e));
    return x;
  };
  rep.congruences = true;
  for (int n = 3; n <= 5; ++n) {
    HeckeAlgebra h(n, k, 0, 1);
    const PackedRow e_j2 = h.e_poly(2, 3), e_1 = h.e_poly(0, 3);
    rep.congruences = rep.congruences && h.project(rp) == scaled(e_j2, 2) && h.project(rm) == scaled(e_j2, 1) &&
                  h.project(phi(rp)).is_zero() && h.project(phi(rm)).is_zero() &&
                  h.project(phi_pow(rp, 2)) == scaled(e_1, 1) && h.project(phi_pow(rm, 2)) == scaled(e_1, 2);
  }
  const std::vector<FormalElement> gens{rp, rm, phi(rp), phi(rm)};
  {
    TernaryHecke t(4, k);
    std::vector<PackedRow> g;
    for (const auto& x : gens) g.push_back(t.project(x));
    const auto img = t.two_sided_ideal(g, opts);
    rep.pi_b1_bj_dim4 = img.dimension();
    // ITL^j x (ITL^1 + ITL^j2) x ITL^j in the component order used here
    EchelonBasis rhs(k, t.length());
    auto put = [&](int comp, const EchelonBasis& b) {
      for (const auto& r : b.rows()) {
        std::array<PackedRow, 3> parts{PackedRow(k, t.block()), PackedRow(k, t.block()), PackedRow(k, t.block())};
        parts[comp] = r;
        rhs.insert(t.join(parts));
      }
    };
    put(0, itl_ideal(t.component(0), 1, opts));
    put(1, subspace_sum(itl_ideal(t.component(1), 0, opts), itl_ideal(t.component(1), 2, opts)));
    put(2, itl_ideal(t.component(2), 1, opts));
    rep.rhs_dim4 = same_submodule(rhs, img) ? rhs.dimension() : 0;
    if (gamma4) {
      const auto ideal = two_sided_ideal(*gamma4, k, gens, opts);
      std::array<std::vector<PackedRow>, 3> images;
      for (int c = 0; c < 3; ++c) images[c] = t.component(c).group_images(*gamma4);
      EchelonBasis proj(k, t.length());
      for (const auto& row : ideal.rows()) {
        std::array<PackedRow, 3> parts{PackedRow(k, t.block()), PackedRow(k, t.block()), PackedRow(k, t.block())};
        for (Element g = 0; g < gamma4->order(); ++g) {
          const Scalar s = row.get(g);
          if (s.code == 0) continue;
          for (int c = 0; c < 3; ++c) parts[c].axpy(images[c][g], s);
        }
        proj.insert(t.join(parts));
      }
      rep.pi_b1_bj_dim4_group = proj.dimension();
    }
    HeckeAlgebra h4(4, k, 0, 1);
    rep.itl4_trivial_cap = subspace_intersection(itl_ideal(h4, 0, opts), itl_ideal(h4, 1, opts)).dimension() == 0;
  }
  {
    TernaryHecke t(5, k);
    std::vector<PackedRow> g;
    for (const auto& x : gens) g.push_back(t.project(x));
    const auto img = t.two_sided_ideal(g, opts);
    rep.quotient5 = 3 * (factorial(5) - 1) - img.dimension();
    HeckeAlgebra h5(5, k, 0, 1);
    rep.tl5 = h5.dim() - itl_ideal(h5, 1, opts).dimension();
  }
  return rep;
}

}  // namespace cubic
