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

// cubic: command-line front end to the cubic library.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubic/errors.hpp"
#include "cubic/hecke.hpp"
#include "cubic/idealdim.hpp"
#include "cubic/markov.hpp"
#include "cubic/reps.hpp"
#include "cubic/ternary.hpp"
#include "suite.hpp"

namespace {

using namespace cubic;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string cache_dir;
  std::string mem_cap = "8G";
  std::size_t workers = 1;
  std::string json_path;
  std::string suite = "fast";
  int n = 4;
  std::string ring = "f2";
  std::string word;

  ClosureOptions closure() const;
};

std::size_t parse_bytes(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  std::size_t mult = 1;
  if (used < text.size()) {
    switch (std::toupper(static_cast<unsigned char>(text[used]))) {
      case 'K': mult = std::size_t{1} << 10; break;
      case 'M': mult = std::size_t{1} << 20; break;
      case 'G': mult = std::size_t{1} << 30; break;
      default: throw MismatchError("bad memory size '" + text + "'");
    }
  }
  return static_cast<std::size_t>(v * static_cast<double>(mult));
}

ClosureOptions RunConfig::closure() const {
  ClosureOptions o;
  o.workers = workers;
  o.memory_cap = parse_bytes(mem_cap);
  if (o.memory_cap < (std::size_t{64} << 20)) throw MismatchError("--mem-cap must be at least 64M");
  if (o.workers < 1) throw MismatchError("--workers must be at least 1");
  return o;
}

std::filesystem::path cache_dir(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("CUBIC_CACHE_DIR")) return env;
  return std::filesystem::path(".cubic-cache");
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void write_json(const RunConfig& c, const json& j) {
  if (c.json_path.empty()) return;
  std::ofstream out(c.json_path);
  if (!out) throw Error("cannot write " + c.json_path);
  out << j.dump(2) << '\n';
}

json record(const std::string& computation, int n, const std::string& ring, std::size_t ideal_dim,
            std::size_t quotient_dim, double wall_ms, std::size_t mem_bytes) {
  json j;
  j["computation"] = computation;
  j["n"] = n;
  j["ring"] = ring;
  j["ideal_dim"] = ideal_dim;
  j["quotient_dim"] = quotient_dim;
  j["wall_ms"] = wall_ms;
  j["mem_bytes"] = mem_bytes;
  return j;
}

json ideal_record(const IdealResult& r) {
  return record(r.computation, r.n, r.ring, r.ideal_dim, r.quotient_dim, r.wall_ms, r.mem_bytes);
}

void print_record(const json& j) {
  std::cout << j["computation"].get<std::string>() << " n=" << j["n"].get<int>() << " ring=" << j["ring"].get<std::string>()
            << " ideal_dim=" << j["ideal_dim"].get<std::size_t>() << " quotient_dim=" << j["quotient_dim"].get<std::size_t>()
            << '\n';
}

int cmd_group(const RunConfig& c, const std::string& action) {
  const auto t0 = Clock::now();
  const GroupTable t = cached_group(c.n, cache_dir(c));
  std::cout << "Gamma_" << c.n << ": order " << t.order() << ", " << t.conjugacy_classes().count()
            << " conjugacy classes (" << static_cast<long long>(ms_since(t0)) << " ms)\n";
  if (action == "check") {
    if (c.n != 5) throw MismatchError("group check runs the Gamma_5 facts; use --n 5");
    const auto r = verify_group_facts(t);
    std::cout << "z5 order 6: " << r.z5_order_6 << "\nz5 central, center = <z5>: " << (r.z5_central && r.center_is_z5)
              << "\nz5^2 identity (" << r.z5_square_convention << "): " << r.z5_square_identity
              << "\nz5^3 identity: " << r.z5_cube_identity << "\nretraction element: "
              << (r.retraction_order_3 && r.retraction_commutes && r.retraction_braid)
              << "\nQ0 quaternion with center <z5^3>: " << (r.q0_order_8 && r.q0_quaternion && r.q0_center_z5_cube)
              << '\n';
    return r.all() ? 0 : 1;
  }
  return 0;
}

int cmd_ideal(const RunConfig& c, bool k) {
  const GroupTable t = cached_group(c.n, cache_dir(c));
  const RingSpec ring = RingSpec::parse(c.ring);
  const IdealResult r = k ? named_kn_dim(t, ring, c.closure()) : named_un_dim(t, ring, c.closure());
  const json j = ideal_record(r);
  print_record(j);
  write_json(c, j);
  return 0;
}

int cmd_snf(const RunConfig& c) {
  const GroupTable t = cached_group(c.n, cache_dir(c));
  const auto r = zmodule_structure(t, true);
  std::cout << "K_" << c.n << " = " << r.smith.primary_string() << "\ninvariant factors: " << r.smith.to_string()
            << "\nmodular cross-check: " << (r.consistent ? "consistent" : "INCONSISTENT") << '\n';
  json j = record("snf", c.n, "z", r.smith.rank, r.smith.columns - r.smith.rank, r.wall_ms, 0);
  j["structure"] = r.smith.primary_string();
  j["consistent"] = r.consistent;
  write_json(c, j);
  return r.consistent ? 0 : 1;
}

int cmd_bmw(const RunConfig& c) {
  const GroupTable t = cached_group(c.n, cache_dir(c));
  const RingSpec ring = RingSpec::parse(c.ring == "f2" ? "f4" : c.ring);
  const auto t0 = Clock::now();
  const auto r = bmw_ideal_suite(t, ring, c.closure());
  std::cout << "rw+ " << r.rw_plus_dim << ", rw- " << r.rw_minus_dim << ", B_1 " << r.b1_dim << ", B_j " << r.bj_dim
            << ", B_j2 " << r.bj2_dim << "\nB_+ " << r.b_plus_dim << ", cap " << r.b_cap_dim << " (= (q): "
            << r.cap_equals_q << ")\nk Gamma/B_1 " << r.quotient_b1 << ", BMW " << r.quotient_cap
            << "\nb in pairwise sums: " << r.b_in_pairwise_sums << "\nB_1 + B_j cap B_j2 = (B_1+B_j) cap (B_1+B_j2): "
            << r.modular_equality << " (" << r.lhs_dim << " vs " << r.rhs_dim << ")\nb in B_1 + B_j cap B_j2: "
            << r.b_in_b1_plus_cap << "\n1 + z3 in B_+: " << r.one_plus_z3_in_b_plus << '\n';
  json j = record("bmw", c.n, ring.name(), r.b_cap_dim, r.quotient_cap, ms_since(t0), 0);
  j["b_plus_dim"] = r.b_plus_dim;
  j["quotient_b1"] = r.quotient_b1;
  write_json(c, j);
  return 0;
}

int cmd_radical(const RunConfig& c) {
  const GroupTable t = cached_group(3, cache_dir(c));
  const auto r = radical_powers(t);
  std::cout << "J(kQ8)^r:";
  for (auto d : r.q8_dims) std::cout << ' ' << d;
  std::cout << "\nJ(k Gamma_3)^r:";
  for (auto d : r.gamma3_dims) std::cout << ' ' << d;
  std::cout << "\n(q) = J^4: " << r.q_is_j4 << "\n(b) = J^3: " << r.b_is_j3 << '\n';
  return r.q_is_j4 && r.b_is_j3 ? 0 : 1;
}

int cmd_hecke(const RunConfig& c, const std::string& action) {
  const RingSpec ring = RingSpec::parse(c.ring == "f2" ? "f4" : c.ring);
  const auto t0 = Clock::now();
  if (action == "dims") {
    const FormalElement cel = elements::c();
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        HeckeAlgebra h(c.n, ring, a, b);
        const bool c_zero = c.n < 3 || h.project(cel).is_zero();
        std::cout << "H_" << c.n << "(j^" << a << ", j^" << b << ") over " << ring.name() << ": dim " << h.dim()
                  << ", image of c " << (c_zero ? "0" : "nonzero") << '\n';
      }
    return 0;
  }
  if (action == "ternary") {
    const auto d = ternary_dim(c.n, ring, c.n <= 5, c.closure());
    std::cout << "ternary Hecke n=" << c.n << " over " << d.ring << ": " << d.by_kernel;
    if (d.direct_computed) std::cout << " (direct span " << d.direct << (d.free ? ", free" : ", torsion") << ")";
    std::cout << ", expected " << d.expected << '\n';
    json j = record("ternary", c.n, d.ring, 0, d.by_kernel, ms_since(t0), 0);
    write_json(c, j);
    return d.by_kernel == d.expected ? 0 : 1;
  }
  if (action == "itl") {
    EchelonBasis prev(RingSpec::f4(), 0), cur(RingSpec::f4(), 0);
    ItlReport r;
    for (int m = std::min(c.n, 5); m <= c.n; ++m) {
      r = itl_battery(m, c.closure(), &cur, m > 5 ? &prev : nullptr);
      prev = cur;
    }
    std::cout << "ITL^1 " << r.itl_1 << ", ITL^j " << r.itl_j << ", cap " << r.cap << ", sum " << r.sum;
    if (c.n >= 5) std::cout << "\n(ab) " << r.ab << ", (ab) = (ba): " << r.ab_equals_ba;
    if (c.n == 5) std::cout << "\ncap = (ab) + E_5(1) + E_5(j^2): " << r.direct_sum;
    if (c.n > 5)
      std::cout << "\nideal of the smaller cap " << r.from_smaller << ", contains E_n: " << r.from_smaller_contains_e
                << ", equals cap: " << r.generated_by_smaller;
    std::cout << "\nE_n in H E_3: " << r.e_in_left_ideal << '\n';
    write_json(c, record("itl", c.n, "f4", r.cap, factorial(c.n) - r.cap, ms_since(t0), 0));
    return 0;
  }
  if (action == "images") {
    const GroupTable t4 = cached_group(4, cache_dir(c));
    const auto r = hecke_ideal_images(&t4, c.closure());
    std::cout << "congruences: " << r.congruences << "\npi(B_1 + B_j) at n=4: " << r.pi_b1_bj_dim4 << " (group "
              << r.pi_b1_bj_dim4_group << ", ITL side " << r.rhs_dim4 << ")\nITL_4^1 cap ITL_4^j = 0: "
              << r.itl4_trivial_cap << "\ndim H_5/pi(B_1+B_j) " << r.quotient5 << ", TL_5 " << r.tl5 << '\n';
    return 0;
  }
  throw MismatchError("hecke action must be dims, ternary, itl or images");
}

std::string trace_line(const TraceExpr& e) {
  std::string s = "(" + e.p.to_string() + ")*t1";
  if (!e.q.is_zero()) s += " + (" + e.q.to_string() + ")*t(z3)";
  return s;
}

int cmd_trace(const RunConfig& c, const std::string& action) {
  if (action == "eval") {
    if (c.word.empty()) throw MismatchError("trace eval needs --word");
    MarkovEvaluator ev;
    const TraceExpr e = ev(BraidWord::parse(c.word));
    // t(q) = 0 forces t(z3) = -(1+6uv) t1.
    std::cout << "(" << e.collapse().to_string() << ")*t1\n";
    if (!e.q.is_zero()) std::cout << "before eliminating t(z3): " << trace_line(e) << '\n';
    return 0;
  }
  if (action == "mod4") {
    if (c.word.empty()) throw MismatchError("trace mod4 needs --word");
    const auto v = mod4_trace(BraidWord::parse(c.word));
    for (int g = 0; g < 3; ++g) std::cout << "gamma = j^" << g << ": " << v[g].to_string() << '\n';
    return 0;
  }
  if (action == "verify") {
    MarkovEvaluator ev;
    const auto q = verify_q_annihilation(ev);
    std::cout << "t(q) = " << q.t_q.to_string() << "\nt(q s1) = " << q.t_qs1.to_string()
              << "\nt(q s1^2) = " << q.t_qs1sq.to_string() << '\n';
    const GroupTable t4 = cached_group(4, cache_dir(c));
    const auto r = verify_trace_constraints(ev, t4);
    std::cout << "t(x) = " << trace_line(r.t_x) << "\nt(y) = " << trace_line(r.t_y) << "\nt(a) = " << trace_line(r.t_a)
              << "\nt(b) = " << trace_line(r.t_b) << '\n';
    for (const auto& cert : r.certificates) std::cout << cert.to_string() << '\n';
    std::cout << "3u^3+3v^3-3uv+1 forced: " << (r.intro_polynomial_member || r.intro_polynomial_killed_mod4) << '\n';
    const auto s = gamma4_class_solver(ev, t4);
    std::cout << "Gamma_4 classes " << s.classes << ", Markov failures " << s.markov_failures << ", q-conditions "
              << s.q_conditions << '\n';
    return q.all() && r.all() && s.all() ? 0 : 1;
  }
  throw MismatchError("trace action must be eval, mod4 or verify");
}

int cmd_verify(const RunConfig& c) {
  suite::Options o;
  o.kind = suite::parse_kind(c.suite);
  o.cache_dir = cache_dir(c);
  o.closure = c.closure();
  o.progress = &std::cout;
  const auto checks = suite::run(o);
  std::cout << '\n';
  for (int k = 0; k <= 16; ++k) {
    const std::string s = suite::criterion_status(checks, k);
    if (s != "NOT RUN") std::cout << s << "  " << k << ". " << suite::criterion_title(k) << '\n';
  }
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    out << suite::report_json(checks, o.kind) << '\n';
  }
  return suite::exit_code(checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the cubic quotients of the braid group algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Group-table cache (default $CUBIC_CACHE_DIR or .cubic-cache)");
  app.add_option("--mem-cap", cfg.mem_cap, "Memory cap for ideal closures, e.g. 2G")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  app.add_option("--json", cfg.json_path, "Write a JSON record to this path");

  auto add_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "Number of strands")->capture_default_str(); };
  auto add_ring = [&](CLI::App* s) {
    s->add_option("--ring", cfg.ring, "f2, f3, f4, f5, f7, z4, z4j or z")->capture_default_str();
  };
  std::string action;

  auto* group = app.add_subcommand("group", "Build or check a group table");
  group->add_option("action", action, "build or check")->required()->check(CLI::IsMember({"build", "check"}));
  add_n(group);
  auto* kdim = app.add_subcommand("kdim", "dim of k Gamma_n / (q)");
  add_n(kdim);
  add_ring(kdim);
  auto* udim = app.add_subcommand("udim", "dim of k Gamma_n / (b)");
  add_n(udim);
  add_ring(udim);
  auto* snf = app.add_subcommand("snf", "Z-module structure of K_n");
  add_n(snf);
  auto* bmw = app.add_subcommand("bmw", "BW/BMW ideal suite over F4");
  add_n(bmw);
  add_ring(bmw);
  auto* radical = app.add_subcommand("radical", "Radical powers in k Gamma_3");
  auto* hecke = app.add_subcommand("hecke", "Hecke algebra computations");
  hecke->add_option("action", action, "dims, ternary, itl or images")
      ->required()
      ->check(CLI::IsMember({"dims", "ternary", "itl", "images"}));
  add_n(hecke);
  add_ring(hecke);
  auto* trace = app.add_subcommand("trace", "Markov traces");
  trace->add_option("action", action, "eval, mod4 or verify")->required()->check(CLI::IsMember({"eval", "mod4", "verify"}));
  trace->add_option("--word", cfg.word, "Braid word, e.g. \"2,-3,1\"");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "fast, paper, extended or reps")
      ->capture_default_str()
      ->check(CLI::IsMember({"fast", "paper", "extended", "reps"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*group) return cmd_group(cfg, action);
    if (*kdim) return cmd_ideal(cfg, true);
    if (*udim) return cmd_ideal(cfg, false);
    if (*snf) return cmd_snf(cfg);
    if (*bmw) return cmd_bmw(cfg);
    if (*radical) return cmd_radical(cfg);
    if (*hecke) return cmd_hecke(cfg, action);
    if (*trace) return cmd_trace(cfg, action);
    if (*verify) return cmd_verify(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
