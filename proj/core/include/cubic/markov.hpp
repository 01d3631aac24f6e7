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

#ifndef CUBIC_MARKOV_HPP
#define CUBIC_MARKOV_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/braidword.hpp"
#include "cubic/errors.hpp"
#include "cubic/grouptable.hpp"
#include "cubic/lattice.hpp"
#include "cubic/poly.hpp"

namespace cubic {

// P t(1) + Q t(z3) with P, Q in Z[u, v].
struct TraceExpr {
  PolyZ p;
  PolyZ q;

  static TraceExpr one() { return {PolyZ(1), PolyZ()}; }
  static TraceExpr z3() { return {PolyZ(), PolyZ(1)}; }

  TraceExpr& operator+=(const TraceExpr& o) { p += o.p; q += o.q; return *this; }
  TraceExpr& operator-=(const TraceExpr& o) { p -= o.p; q -= o.q; return *this; }
  friend TraceExpr operator+(TraceExpr x, const TraceExpr& y) { return x += y; }
  friend TraceExpr operator-(TraceExpr x, const TraceExpr& y) { return x -= y; }
  friend TraceExpr operator*(const PolyZ& c, const TraceExpr& x) { return {c * x.p, c * x.q}; }
  friend bool operator==(const TraceExpr&, const TraceExpr&) = default;

  // Coefficient of t(1) after t(z3) = -(1 + 6uv) t(1).
  PolyZ collapse() const;
  std::string to_string() const;
};

// The value t(z3) is forced to take once t(q) = 0.
PolyZ z3_value();

class UnreducedError : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

struct TraceBudget {
  std::size_t max_depth = 64;
  std::size_t max_states = 100'000;
};

// Word-level evaluator. Letters are reduced mod s_i^3 = 1, words are taken up
// to rotation, and the top generator s_m is removed as soon as it occurs once.
// Otherwise a layered breadth-first search over commutation and braid moves
// runs; in each layer a window s_m s_{m-1}^-1 s_m (or its mirror) is expanded
// with the seven-term relation coming from c = 0 before any word with fewer
// top letters is taken. If the whole move class has neither, a window one
// level down is expanded. Three-strand words are resolved by their conjugacy
// class in Gamma_3.
//
// The result is a function of the word, but conjugate words may receive
// values that differ by elements of the constraint ideal.
class MarkovEvaluator {
 public:
  explicit MarkovEvaluator(TraceBudget budget = {});

  TraceExpr operator()(const BraidWord& w);
  TraceExpr operator()(const FormalElement& x);
  TraceExpr operator()(const std::vector<int>& letters);

  std::size_t states_visited() const { return states_; }
  std::size_t expansions() const { return expansions_; }
  // Value of tau_3 on an element of Gamma_3.
  const TraceExpr& gamma3_value(Element g) const { return g3_values_[g]; }
  const GroupTable& gamma3() const { return g3_; }

 private:
  TraceExpr eval(std::vector<int> w, std::size_t depth);
  TraceExpr expand(const std::vector<int>& w, std::size_t at, std::size_t depth);

  TraceBudget budget_;
  GroupTable g3_;
  std::vector<TraceExpr> g3_values_;
  std::map<std::vector<int>, TraceExpr> memo_;
  std::size_t states_ = 0;
  std::size_t expansions_ = 0;
};

// Free and cube reduction, cyclically, then the lexicographically least
// rotation.
std::vector<int> cyclic_normal_form(std::vector<int> letters);

struct QAnnihilation {
  TraceExpr t_q, t_qs1, t_qs1sq;
  bool t_q_ok = false, t_qs1_ok = false, t_qs1sq_ok = false;
  bool all() const { return t_q_ok && t_qs1_ok && t_qs1sq_ok; }
};

QAnnihilation verify_q_annihilation(MarkovEvaluator& ev);

// f = sum_k c_k g_k over Z[u, v], found by lattice search in bounded degree.
struct Certificate {
  std::string target_name;
  PolyZ target;
  std::vector<std::string> generator_names;
  std::vector<PolyZ> cofactors;
  bool verified = false;
  std::string to_string() const;
};

struct NamedPoly {
  std::string name;
  PolyZ poly;
};

// Search for f in (gens) using monomial multipliers of total degree at most
// max_degree. Any certificate returned has been re-checked by expansion.
std::optional<Certificate> find_certificate(const NamedPoly& target, const std::vector<NamedPoly>& gens,
                                            unsigned max_degree);

struct ConstraintReport {
  bool x_times_z4_is_y = false;
  bool ac_equals_cb = false;
  bool x_conjugate_y = false;
  TraceExpr t_x, t_y, t_a, t_b;
  bool t_x_ok = false, t_y_ok = false, t_a_ok = false, t_b_ok = false;
  std::vector<NamedPoly> relations;        // derived annihilators of t(1)
  std::vector<Certificate> certificates;   // consequences, in derivation order
  bool cubic_identity_explicit = false;           // the five-term identity for u^3+v^3-3uv+1
  // 3u^3+3v^3-3uv+1: certificate search result and a mod-4 witness that it
  // does not annihilate t(1) for every trace.
  bool intro_polynomial_member = false;
  bool intro_polynomial_killed_mod4 = true;
  bool all() const;
};

ConstraintReport verify_trace_constraints(MarkovEvaluator& ev, const GroupTable& t4);

// Ocneanu traces of H(alpha, beta) over Z/4[j], gamma the remaining root,
// for gamma = 1, j, j^2. Values are polynomials in u.
std::array<PolyZ4J, 3> mod4_trace(const BraidWord& w);
std::array<PolyZ4J, 3> mod4_trace(const FormalElement& x);
// Image of a Z[u, v] value under v = -(gamma u + gamma^2), gamma = j^k.
PolyZ4J specialize_mod4(const PolyZ& f, int gamma_exp);

struct ClassSolverReport {
  std::size_t classes = 0;
  std::vector<TraceExpr> class_values;
  std::vector<BraidWord> representatives;
  std::size_t markov_checks = 0;
  std::size_t markov_failures = 0;
  std::size_t q_conditions = 0;  // distinct class-multisets of cosets q g
  std::size_t q_failures = 0;
  bool identity_is_one = false;
  bool s3_is_u = false;
  bool all() const { return markov_failures == 0 && q_failures == 0 && identity_is_one && s3_is_u; }
};

// Membership test in Z[u,v]/(16, 4(u^2+v), 4(v^2+u), 3u^3+3v^3-5uv-1).
class QuotientA {
 public:
  explicit QuotientA(unsigned degree = 10);
  bool is_zero(const PolyZ& f) const;
  unsigned degree() const { return degree_; }

 private:
  unsigned degree_;
  std::map<std::pair<unsigned, unsigned>, std::size_t> index_;
  IntLattice lattice_;
};

ClassSolverReport gamma4_class_solver(MarkovEvaluator& ev, const GroupTable& t4);

}  // namespace cubic

#endif
