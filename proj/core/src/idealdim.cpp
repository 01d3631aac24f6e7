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

#include "cubic/idealdim.hpp"

#include <chrono>
#include <deque>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

FormalElement lift(const FormalElement& x, int n) {
  return x.strands() == n ? x : x.with_strands(n);
}

std::size_t ambient_length(RingSpec ring, std::size_t coords) { return ring.is_chain() ? 2 * coords : coords; }

}  // namespace

PackedRow element_row(const GroupTable& t, RingSpec ring, const FormalElement& x) {
  if (x.strands() > t.strands()) throw MismatchError("element has more strands than the group");
  PackedRow row(ring, t.order());
  for (const auto& [w, c] : x.terms()) {
    const Element g = t.eval(w);
    row.set(g, ring.add(row.get(g), ring.from_eisenstein(c)));
  }
  return row;
}

PackedRow algebra_product(const GroupTable& t, const PackedRow& x, const PackedRow& y) {
  const RingSpec& ring = x.ring();
  PackedRow out(ring, t.order());
  const auto xv = x.values(), yv = y.values();
  for (Element a = 0; a < t.order(); ++a) {
    if (xv[a].code == 0) continue;
    for (Element b = 0; b < t.order(); ++b) {
      if (yv[b].code == 0) continue;
      const Element ab = t.mul(a, b);
      out.set(ab, ring.add(out.get(ab), ring.mul(xv[a], yv[b])));
    }
  }
  return out;
}

EchelonBasis close_under_permutations(RingSpec ring, std::size_t length, std::vector<PackedRow> seeds,
                                      std::span<const std::vector<std::uint32_t>> perms,
                                      const ClosureOptions& opts) {
  std::vector<RowAction> actions;
  for (const auto& p : perms) {
    const std::vector<std::uint32_t>* pp = &p;
    actions.emplace_back([pp](const PackedRow& src, PackedRow& dst) { permute_into(src, *pp, dst); });
  }
  return close_under(ring, length, std::move(seeds), actions, opts);
}

std::vector<std::vector<std::uint32_t>> two_sided_actions(const GroupTable& t) {
  std::vector<std::vector<std::uint32_t>> out;
  for (int i = 1; i < t.strands(); ++i) {
    const auto l = t.left_action(GroupTable::slot(i, 1));
    const auto r = t.right_action(GroupTable::slot(i, 1));
    out.emplace_back(l.begin(), l.end());
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

namespace {

struct IndexThreeFrame {
  std::vector<Element> elements;         // the subgroup, in table order
  std::vector<std::uint32_t> index;      // table element -> position, or ~0
  std::vector<std::vector<std::uint32_t>> actions;
};

IndexThreeFrame index_three_frame(const GroupTable& t) {
  IndexThreeFrame f;
  f.index.assign(t.order(), ~0u);
  for (Element x = 0; x < t.order(); ++x)
    if (t.length_mod3(x) == 0) {
      f.index[x] = static_cast<std::uint32_t>(f.elements.size());
      f.elements.push_back(x);
    }
  const int n = t.strands();
  auto word = [n](std::vector<int> l) { return BraidWord(n, std::move(l)); };
  // Schreier generators for the transversal 1, s1, s1^2.
  std::vector<Element> cand;
  for (int i = 2; i < n; ++i) {
    cand.push_back(t.eval(word({i, -1})));
    cand.push_back(t.eval(word({-1, i})));
    cand.push_back(t.eval(word({1, i, 1})));
  }
  std::vector<Element> gens;
  std::size_t reached = 1;
  for (Element g : cand) {
    if (reached == f.elements.size()) break;
    gens.push_back(g);
    const std::size_t s = t.subgroup_closure(gens).size();
    if (s == reached) gens.pop_back();
    else reached = s;
  }
  if (reached != f.elements.size()) throw VerificationError("index-three generators do not span the subgroup");
  auto restrict = [&](const std::vector<std::uint32_t>& perm) {
    std::vector<std::uint32_t> out(f.elements.size());
    for (std::size_t k = 0; k < f.elements.size(); ++k) {
      const std::uint32_t y = f.index[perm[f.elements[k]]];
      if (y == ~0u) throw VerificationError("action leaves the index-three subgroup");
      out[k] = y;
    }
    return out;
  };
  for (Element g : gens) {
    f.actions.push_back(restrict(t.left_multiplication(g)));
    f.actions.push_back(restrict(t.right_multiplication(g)));
  }
  // conjugation by s1: x -> s1 x s1^-1
  const auto l1 = t.left_action(GroupTable::slot(1, 1));
  const auto r2 = t.right_action(GroupTable::slot(1, 2));
  std::vector<std::uint32_t> conj(t.order());
  for (Element x = 0; x < t.order(); ++x) conj[x] = l1[r2[x]];
  f.actions.push_back(restrict(conj));
  return f;
}

std::vector<Element> subgroup_of_q(const GroupTable& t) {
  std::vector<Element> out;
  const FormalElement q = elements::q();
  for (const auto& [w, c] : q.terms()) out.push_back(t.eval(w));
  return out;
}

EchelonBasis enumerate_q_basis(const GroupTable& t, RingSpec ring) {
  const auto qset = subgroup_of_q(t);
  std::vector<char> in_q(t.order(), 0);
  for (auto h : qset) in_q[h] = 1;
  std::vector<Element> normalizer;
  for (Element g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (auto h : qset)
      if (!in_q[t.conj(g, h)]) {
        ok = false;
        break;
      }
    if (ok) normalizer.push_back(g);
  }
  std::vector<char> seen(t.order(), 0);
  std::vector<Element> left_reps;
  for (Element g = 0; g < t.order(); ++g) {
    if (seen[g]) continue;
    left_reps.push_back(g);
    for (auto m : normalizer) seen[t.mul(g, m)] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<Element> right_reps;
  for (Element g = 0; g < t.order(); ++g) {
    if (seen[g]) continue;
    right_reps.push_back(g);
    for (auto h : qset) seen[t.mul(h, g)] = 1;
  }
  EchelonBasis basis(ring, t.order());
  for (auto g1 : left_reps) {
    std::vector<Element> g1q;
    for (auto h : qset) g1q.push_back(t.mul(g1, h));
    for (auto g2 : right_reps) {
      const auto rg2 = t.right_multiplication(g2);
      PackedRow row(ring, t.order());
      for (auto x : g1q) row.set(rg2[x], ring.add(row.get(rg2[x]), ring.one()));
      basis.insert(std::move(row));
    }
  }
  return basis;
}

}  // namespace

std::size_t enumerate_q_ideal_dim(const GroupTable& t, RingSpec ring) {
  return enumerate_q_basis(t, ring).dimension();
}

EchelonBasis two_sided_ideal(const GroupTable& t, RingSpec ring, const std::vector<FormalElement>& gens,
                             const ClosureOptions& opts) {
  std::vector<PackedRow> seeds;
  for (const auto& g : gens) seeds.push_back(element_row(t, ring, lift(g, t.strands())));
  const auto actions = two_sided_actions(t);
  return close_under_permutations(ring, t.order(), std::move(seeds), actions, opts);
}

IdealResult ideal_closure(const IdealJob& job, const ClosureOptions& opts) {
  if (!job.table) throw MismatchError("ideal job has no group table");
  const GroupTable& t = *job.table;
  const auto t0 = Clock::now();
  IdealResult res;
  res.n = t.strands();
  res.ring = job.ring.name();
  const std::size_t full_length = ambient_length(job.ring, t.order());
  if (job.strategy == Strategy::EnumerateCosets) {
    if (job.generators.size() != 1 || !(lift(job.generators[0], t.strands()) == lift(elements::q(), t.strands())))
      throw MismatchError("coset enumeration is implemented for the generator q only");
    if (job.restriction != Restriction::Full) throw MismatchError("coset enumeration runs on the full group");
    res.basis = enumerate_q_basis(t, job.ring);
    res.ideal_dim = res.basis.dimension();
    res.quotient_dim = full_length - res.ideal_dim;
  } else if (job.restriction == Restriction::Full) {
    res.basis = two_sided_ideal(t, job.ring, job.generators, opts);
    res.ideal_dim = res.basis.dimension();
    res.quotient_dim = full_length - res.ideal_dim;
  } else {
    const auto frame = index_three_frame(t);
    std::vector<PackedRow> seeds;
    for (const auto& g : job.generators) {
      const PackedRow full = element_row(t, job.ring, lift(g, t.strands()));
      PackedRow row(job.ring, frame.elements.size());
      for (Element x = 0; x < t.order(); ++x) {
        const Scalar s = full.get(x);
        if (s.code == 0) continue;
        if (frame.index[x] == ~0u) throw MismatchError("generator is not supported on the index-three subgroup");
        row.set(frame.index[x], s);
      }
      seeds.push_back(std::move(row));
    }
    res.basis = close_under_permutations(job.ring, frame.elements.size(), std::move(seeds), frame.actions, opts);
    res.ideal_dim = res.basis.dimension();
    res.quotient_dim = 3 * (ambient_length(job.ring, frame.elements.size()) - res.ideal_dim);
  }
  res.mem_bytes = res.basis.memory_bytes();
  res.wall_ms = ms_since(t0);
  return res;
}

IdealResult named_kn_dim(const GroupTable& t, RingSpec ring, const ClosureOptions& opts) {
  IdealJob job{&t, ring, {elements::q()}, Strategy::Closure,
               t.strands() >= 5 ? Restriction::IndexThree : Restriction::Full};
  auto r = ideal_closure(job, opts);
  r.computation = "kdim";
  return r;
}

IdealResult named_un_dim(const GroupTable& t, RingSpec ring, const ClosureOptions& opts) {
  IdealJob job{&t, ring, {elements::b()}, Strategy::Closure, Restriction::Full};
  auto r = ideal_closure(job, opts);
  r.computation = "udim";
  return r;
}

RadicalReport radical_powers(const GroupTable& t3) {
  if (t3.strands() != 3) throw MismatchError("radical powers are computed in Gamma_3");
  const RingSpec k = RingSpec::f2();
  const auto qset = subgroup_of_q(t3);
  RadicalReport rep;
  auto powers = [&](const EchelonBasis& j1) {
    std::vector<std::size_t> dims{j1.dimension()};
    EchelonBasis cur = j1;
    for (int r = 2; r <= 5; ++r) {
      EchelonBasis next(k, t3.order());
      for (const auto& x : cur.rows())
        for (const auto& y : j1.rows()) next.insert(algebra_product(t3, x, y));
      dims.push_back(next.dimension());
      cur = std::move(next);
    }
    return dims;
  };
  // augmentation ideal of kQ8: spanned by h - 1
  EchelonBasis jq(k, t3.order());
  for (auto h : qset) {
    PackedRow r(k, t3.order());
    r.set(h, k.one());
    r.set(0, k.add(r.get(0), k.one()));
    jq.insert(std::move(r));
  }
  rep.q8_dims = powers(jq);
  // J(k Gamma_3) is the two-sided ideal generated by J(kQ8)
  std::vector<PackedRow> seeds(jq.rows().begin(), jq.rows().end());
  const auto actions = two_sided_actions(t3);
  const EchelonBasis jg = close_under_permutations(k, t3.order(), seeds, actions);
  rep.gamma3_dims = powers(jg);
  EchelonBasis cur = jg;
  EchelonBasis j3(k, 0), j4(k, 0);
  for (int r = 2; r <= 4; ++r) {
    EchelonBasis next(k, t3.order());
    for (const auto& x : cur.rows())
      for (const auto& y : jg.rows()) next.insert(algebra_product(t3, x, y));
    cur = std::move(next);
    if (r == 3) j3 = cur;
    if (r == 4) j4 = cur;
  }
  rep.q_is_j4 = same_submodule(j4, two_sided_ideal(t3, k, {elements::q()}));
  rep.b_is_j3 = same_submodule(j3, two_sided_ideal(t3, k, {elements::b()}));
  return rep;
}

BmwReport bmw_ideal_suite(const GroupTable& t, RingSpec ring, const ClosureOptions& opts) {
  if (!ring.has_j()) throw MismatchError("the BMW ideals need a primitive cube root of unity");
  BmwReport rep;
  rep.n = t.strands();
  const auto rp = elements::rw_plus(), rm = elements::rw_minus();
  rep.rw_plus_dim = two_sided_ideal(t, ring, {rp}, opts).dimension();
  rep.rw_minus_dim = two_sided_ideal(t, ring, {rm}, opts).dimension();
  const auto b1 = two_sided_ideal(t, ring, {rp, rm}, opts);
  const auto bj = two_sided_ideal(t, ring, {phi(rp), phi(rm)}, opts);
  const auto bj2 = two_sided_ideal(t, ring, {phi_pow(rp, 2), phi_pow(rm, 2)}, opts);
  rep.b1_dim = b1.dimension();
  rep.bj_dim = bj.dimension();
  rep.bj2_dim = bj2.dimension();
  const auto s1j = subspace_sum(b1, bj), s1j2 = subspace_sum(b1, bj2), sjj2 = subspace_sum(bj, bj2);
  const auto plus = subspace_sum(s1j, bj2);
  const auto cap = subspace_intersection(subspace_intersection(b1, bj), bj2);
  rep.b_plus_dim = plus.dimension();
  rep.b_cap_dim = cap.dimension();
  const std::size_t full = ambient_length(ring, t.order());
  rep.quotient_b1 = full - rep.b1_dim;
  rep.quotient_cap = full - rep.b_cap_dim;
  rep.cap_equals_q = same_submodule(cap, two_sided_ideal(t, ring, {elements::q()}, opts));
  const PackedRow b = element_row(t, ring, lift(elements::b(), t.strands()));
  rep.b_in_pairwise_sums = s1j.contains(b) && s1j2.contains(b) && sjj2.contains(b);
  const auto bj_bj2 = subspace_intersection(bj, bj2);
  const auto b1_plus_cap = subspace_sum(b1, bj_bj2);
  rep.bj_cap_bj2_dim = bj_bj2.dimension();
  rep.b_in_b1_plus_cap = b1_plus_cap.contains(b);
  rep.lhs_dim = b1_plus_cap.dimension();
  rep.rhs_dim = subspace_intersection(s1j, s1j2).dimension();
  rep.modular_equality = rep.lhs_dim == rep.rhs_dim;
  FormalElement one_z3 = FormalElement::one(3) + FormalElement::word(elements::z(3));
  rep.one_plus_z3_in_b_plus = plus.contains(element_row(t, ring, lift(one_z3, t.strands())));
  return rep;
}

IntLattice integer_ideal(const GroupTable& t, const std::vector<FormalElement>& gens, std::int64_t modulus) {
  const std::size_t n = t.order();
  IntLattice lat(n);
  if (modulus) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = modulus;
      lat.insert(e);
    }
  }
  auto normalize = [&](std::vector<std::int64_t>& v) {
    if (!modulus) return;
    for (auto& x : v) x = ((x % modulus) + modulus) % modulus;
  };
  std::deque<std::vector<std::int64_t>> queue;
  for (const auto& g : gens) {
    if (!g.is_integral()) throw MismatchError("integer ideal needs integral generators");
    std::vector<std::int64_t> v(n, 0);
    const FormalElement gl = lift(g, t.strands());
    for (const auto& [w, c] : gl.terms()) v[t.eval(w)] += c.a;
    normalize(v);
    if (lat.insert(v)) queue.push_back(std::move(v));
  }
  const auto actions = two_sided_actions(t);
  std::vector<std::int64_t> cand(n);
  while (!queue.empty()) {
    auto src = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : actions) {
      for (std::size_t x = 0; x < n; ++x) cand[a[x]] = src[x];
      if (lat.insert(cand)) queue.push_back(cand);
    }
  }
  return lat;
}

ZModuleReport zmodule_structure(const GroupTable& t, bool cross_check) {
  const auto t0 = Clock::now();
  ZModuleReport rep;
  rep.n = t.strands();
  rep.smith = smith_normal_form(integer_ideal(t, {elements::q()}));
  rep.consistent = true;
  if (cross_check) {
    const std::vector<std::pair<unsigned, RingSpec>> fields{
        {2, RingSpec::f2()}, {3, RingSpec::f3()}, {5, RingSpec::fp(5)}, {7, RingSpec::fp(7)}};
    for (const auto& [p, ring] : fields) {
      const std::size_t d = t.order() - two_sided_ideal(t, ring, {elements::q()}).dimension();
      rep.field_dims.emplace_back(p, d);
      rep.consistent = rep.consistent && d == rep.smith.dim_mod_prime(p);
    }
    // Z/4 through the Howell closure, Z/9 through an independent lattice closure
    const std::size_t len4 = 2 * t.order() - two_sided_ideal(t, RingSpec::z4(), {elements::q()}).dimension();
    rep.prime_power_lengths.emplace_back(4, len4);
    rep.consistent = rep.consistent && len4 == rep.smith.length_mod_prime_power(2, 2);
    const auto s9 = smith_normal_form(integer_ideal(t, {elements::q()}, 9));
    const std::size_t len9 = s9.length_mod_prime_power(3, 2);
    rep.prime_power_lengths.emplace_back(9, len9);
    rep.consistent = rep.consistent && s9.free_rank == 0 && len9 == rep.smith.length_mod_prime_power(3, 2);
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

}  // namespace cubic
