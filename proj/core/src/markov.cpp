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

#include "cubic/markov.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include "cubic/hecke.hpp"

namespace cubic {

namespace {

int top_index(const std::vector<int>& w) {
  int m = 0;
  for (int l : w) m = std::max(m, std::abs(l));
  return m;
}

std::size_t count_index(const std::vector<int>& w, int m) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [m](int l) { return std::abs(l) == m; }));
}

std::vector<int> rotate_to(const std::vector<int>& w, std::size_t start) {
  std::vector<int> out(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

// Window s_m^e s_{m-1}^-e s_m^e starting at p, cyclically.
bool is_c_window(const std::vector<int>& w, std::size_t p, int m) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  const int a = w[p], b = w[(p + 1) % n], c = w[(p + 2) % n];
  return std::abs(a) == m && c == a && std::abs(b) == m - 1 && (b > 0) != (a > 0);
}

// Words one commutation or braid move away, in a fixed order.
std::vector<std::vector<int>> neighbours(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  const std::size_t n = w.size();
  if (n < 3) return out;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t q = (p + 1) % n;
    if (std::abs(std::abs(w[p]) - std::abs(w[q])) >= 2) {
      std::vector<int> x = w;
      std::swap(x[p], x[q]);
      out.push_back(std::move(x));
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t p1 = (p + 1) % n, p2 = (p + 2) % n;
    const int x = w[p], y = w[p1], z = w[p2];
    if (std::abs(x) != std::abs(z) || std::abs(std::abs(x) - std::abs(y)) != 1) continue;
    const int ex = x > 0 ? 1 : -1, ey = y > 0 ? 1 : -1;
    std::vector<int> r = w;
    if (z == x && ex == ey) {
      // x y x = y x y
      r[p] = y;
      r[p1] = x;
      r[p2] = y;
    } else if (z == -x) {
      // x^e y^d x^-e = y^-e x^d y^e
      r[p] = -ex * std::abs(y);
      r[p1] = ey * std::abs(x);
      r[p2] = ex * std::abs(y);
    } else {
      continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<int> cyclic_normal_form(std::vector<int> letters) {
  // (index, exponent mod 3)
  std::vector<std::pair<int, int>> st;
  for (int l : letters) {
    if (l == 0) throw MismatchError("braid letters are nonzero");
    int i = std::abs(l), e = l > 0 ? 1 : 2;
    if (!st.empty() && st.back().first == i) {
      e = (e + st.back().second) % 3;
      st.pop_back();
      if (e != 0) st.emplace_back(i, e);
    } else {
      st.emplace_back(i, e);
    }
  }
  std::deque<std::pair<int, int>> d(st.begin(), st.end());
  while (d.size() >= 2 && d.front().first == d.back().first) {
    const int e = (d.front().second + d.back().second) % 3;
    d.pop_back();
    if (e == 0) {
      d.pop_front();
    } else {
      d.front().second = e;
    }
  }
  std::vector<int> w;
  w.reserve(d.size());
  for (auto [i, e] : d) w.push_back(e == 1 ? i : -i);
  if (w.size() <= 1) return w;
  std::vector<int> best = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<int> r = rotate_to(w, s);
    if (r < best) best = std::move(r);
  }
  return best;
}

PolyZ z3_value() { return -(PolyZ(1) + PolyZ(6) * PolyZ::u() * PolyZ::v()); }

PolyZ TraceExpr::collapse() const { return p + q * z3_value(); }

std::string TraceExpr::to_string() const {
  std::string s;
  if (!p.is_zero() || q.is_zero()) s = "(" + p.to_string() + ")*t(1)";
  if (!q.is_zero()) s += (s.empty() ? "" : " + ") + ("(" + q.to_string() + ")*t(z3)");
  return s;
}

MarkovEvaluator::MarkovEvaluator(TraceBudget budget) : budget_(budget), g3_(GroupTable::enumerate(3)) {
  // tau_3 from Gamma_2 s_2^e: t(s1^a s2^e) = w(a) w(e), w = (1, u, v)
  const PolyZ w[3] = {PolyZ(1), PolyZ::u(), PolyZ::v()};
  const ClassPartition cls = g3_.conjugacy_classes();
  std::vector<std::optional<PolyZ>> per_class(cls.count());
  for (int a = 0; a < 3; ++a) {
    for (int e = 0; e < 3; ++e) {
      std::vector<int> letters(static_cast<std::size_t>(a), 1);
      letters.insert(letters.end(), static_cast<std::size_t>(e), 2);
      const Element g = g3_.eval(BraidWord(3, letters));
      const PolyZ val = w[a] * w[e];
      auto& slot = per_class[cls.class_of[g]];
      if (slot && !(*slot == val)) throw VerificationError("inconsistent Markov values on Gamma_3");
      slot = val;
    }
  }
  const Element z3 = g3_.eval(elements::z(3));
  g3_values_.resize(g3_.order());
  for (Element g = 0; g < g3_.order(); ++g) {
    const auto& slot = per_class[cls.class_of[g]];
    if (slot) {
      g3_values_[g] = {*slot, PolyZ()};
    } else if (cls.class_of[g] == cls.class_of[z3]) {
      g3_values_[g] = TraceExpr::z3();
    } else {
      throw VerificationError("a second Gamma_3 class escapes destabilization");
    }
  }
}

TraceExpr MarkovEvaluator::operator()(const std::vector<int>& letters) {
  states_ = 0;
  return eval(letters, 0);
}

TraceExpr MarkovEvaluator::operator()(const BraidWord& w) { return (*this)(w.letters()); }

TraceExpr MarkovEvaluator::operator()(const FormalElement& x) {
  TraceExpr acc;
  for (const auto& [w, c] : x.terms()) {
    if (c.b != 0) throw MismatchError("trace evaluation needs integral coefficients");
    acc += PolyZ(c.a) * (*this)(w);
  }
  return acc;
}

TraceExpr MarkovEvaluator::eval(std::vector<int> w, std::size_t depth) {
  if (depth > budget_.max_depth) throw UnreducedError("trace evaluation exceeded the depth budget");
  w = cyclic_normal_form(std::move(w));
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  const int m = top_index(w);
  TraceExpr result;
  if (m <= 2) {
    result = g3_values_[g3_.eval(BraidWord(3, w))];
  } else if (count_index(w, m) == 1) {
    const auto pos = static_cast<std::size_t>(
        std::find_if(w.begin(), w.end(), [m](int l) { return std::abs(l) == m; }) - w.begin());
    const PolyZ factor = w[pos] > 0 ? PolyZ::u() : PolyZ::v();
    std::vector<int> rest = rotate_to(w, pos);
    rest.erase(rest.begin());
    result = factor * eval(std::move(rest), depth + 1);
  } else {
    // Layered breadth-first search over the move class of w. Within a layer
    // a c-window is taken before a word with fewer top letters.
    const std::size_t top = count_index(w, m);
    std::set<std::vector<int>> seen{w};
    std::vector<std::vector<int>> layer{w};
    std::vector<std::vector<int>> visited;
    std::optional<std::pair<std::vector<int>, std::size_t>> window;
    std::optional<std::vector<int>> shorter;
    while (!layer.empty() && !window && !shorter) {
      states_ += layer.size();
      if (states_ > budget_.max_states) throw UnreducedError("trace evaluation exceeded the state budget");
      for (const auto& cur : layer) {
        for (std::size_t p = 0; p < cur.size() && !window; ++p) {
          if (is_c_window(cur, p, m)) window.emplace(cur, p);
        }
        if (window) break;
      }
      if (window) break;
      for (const auto& cur : layer) {
        if (cur.size() < w.size() || count_index(cur, m) < top) {
          shorter = cur;
          break;
        }
      }
      if (shorter) break;
      visited.insert(visited.end(), layer.begin(), layer.end());
      std::vector<std::vector<int>> next;
      for (const auto& cur : layer) {
        for (auto& nb : neighbours(cur)) {
          std::vector<int> nf = cyclic_normal_form(std::move(nb));
          if (seen.insert(nf).second) next.push_back(std::move(nf));
        }
      }
      layer = std::move(next);
    }
    // Last resort: a window one level down, which shortens the gaps between
    // top letters.
    for (int level = m - 1; level >= 2 && !window && !shorter; --level) {
      for (const auto& cur : visited) {
        for (std::size_t p = 0; p < cur.size() && !window; ++p) {
          if (is_c_window(cur, p, level)) window.emplace(cur, p);
        }
        if (window) break;
      }
    }
    if (shorter) {
      result = eval(std::move(*shorter), depth + 1);
    } else if (window) {
      result = expand(window->first, window->second, depth);
    } else {
      throw UnreducedError("no reduction or c-window reachable");
    }
  }
  memo_.emplace(std::move(w), result);
  return result;
}

TraceExpr MarkovEvaluator::expand(const std::vector<int>& w, std::size_t at, std::size_t depth) {
  ++expansions_;
  const std::vector<int> r = rotate_to(w, at);
  const int m = std::abs(r[0]);
  const bool mirror = r[0] < 0;
  const int x = m, y = m - 1;
  // x y^-1 x = -(y x^-1 y + y^-1 x y + y x y^-1 + y^-1 x^-1 + x^-1 y^-1 + y + x)
  static const auto terms = [](int x, int y) {
    return std::vector<std::vector<int>>{{y, -x, y}, {-y, x, y}, {y, x, -y}, {-y, -x}, {-x, -y}, {y}, {x}};
  };
  TraceExpr acc;
  for (auto t : terms(x, y)) {
    // x^-1 y x^-1 = (x y^-1 x) y
    if (mirror) t.push_back(y);
    t.insert(t.end(), r.begin() + 3, r.end());
    acc -= eval(std::move(t), depth + 1);
  }
  return acc;
}

QAnnihilation verify_q_annihilation(MarkovEvaluator& ev) {
  QAnnihilation out;
  const FormalElement q = elements::q();
  const FormalElement s1 = FormalElement::word(BraidWord(3, {1}));
  const FormalElement s1sq = FormalElement::word(BraidWord(3, {1, 1}));
  out.t_q = ev(q);
  out.t_qs1 = ev(q * s1);
  out.t_qs1sq = ev(q * s1sq);
  const PolyZ u = PolyZ::u(), v = PolyZ::v();
  out.t_q_ok = out.t_q == TraceExpr{PolyZ(1) + PolyZ(6) * u * v, PolyZ(1)};
  out.t_qs1_ok = out.t_qs1 == TraceExpr{PolyZ(4) * (v * v + u), PolyZ()};
  out.t_qs1sq_ok = out.t_qs1sq == TraceExpr{PolyZ(4) * (u * u + v), PolyZ()};
  return out;
}

namespace {

struct TraceBundle {
  std::unique_ptr<HeckeAlgebra> h;
  std::unique_ptr<OcneanuTrace> tr;
};

const TraceBundle& bundle(int n, int gamma_exp) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TraceBundle> cache;
  std::lock_guard lock(mu);
  auto& b = cache[{n, gamma_exp}];
  if (!b.h) {
    const int alpha = (gamma_exp + 1) % 3, beta = (gamma_exp + 2) % 3;
    b.h = std::make_unique<HeckeAlgebra>(n, RingSpec::z4j(), std::min(alpha, beta), std::max(alpha, beta));
    if (b.h->gamma_exp() != gamma_exp) throw VerificationError("unexpected third root");
    b.tr = std::make_unique<OcneanuTrace>(*b.h);
  }
  return b;
}

int trace_strands(int strands, int top) { return std::max({strands, top + 1, 2}); }

}  // namespace

std::array<PolyZ4J, 3> mod4_trace(const BraidWord& w) {
  std::array<PolyZ4J, 3> out;
  const int n = trace_strands(w.strands(), w.max_index());
  for (int g = 0; g < 3; ++g) {
    const TraceBundle& b = bundle(n, g);
    out[g] = (*b.tr)(b.h->project(w.with_strands(n)));
  }
  return out;
}

std::array<PolyZ4J, 3> mod4_trace(const FormalElement& x) {
  int top = 0;
  for (const auto& [w, c] : x.terms()) top = std::max(top, w.max_index());
  const int n = trace_strands(x.strands(), top);
  std::array<PolyZ4J, 3> out;
  for (int g = 0; g < 3; ++g) {
    const TraceBundle& b = bundle(n, g);
    out[g] = (*b.tr)(b.h->project(x.with_strands(n)));
  }
  return out;
}

PolyZ4J specialize_mod4(const PolyZ& f, int gamma_exp) {
  const PolyZ4J g = PolyZ4J(Z4J::j_pow(gamma_exp));
  const PolyZ4J g2 = PolyZ4J(Z4J::j_pow(2 * gamma_exp));
  const PolyZ4J v = -(g * PolyZ4J::u() + g2);
  return reduce_mod4(f).substitute(PolyZ4J::u(), v);
}

}  // namespace cubic
