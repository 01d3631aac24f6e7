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

#ifndef CUBIC_POLY_HPP
#define CUBIC_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "cubic/coeff.hpp"

namespace cubic {

// Element a + bj of Z/4[j].
struct Z4J {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  Z4J() = default;
  explicit Z4J(std::int64_t ia) : Z4J(ia, 0) {}
  Z4J(std::int64_t ia, std::int64_t ib)
      : a(static_cast<std::uint8_t>(((ia % 4) + 4) % 4)),
        b(static_cast<std::uint8_t>(((ib % 4) + 4) % 4)) {}
  static Z4J from(const Eisenstein& e) { return Z4J(e.a, e.b); }
  static Z4J j_pow(int k) { return from(Eisenstein::j_pow(k)); }
  Scalar to_scalar() const { return {static_cast<std::uint32_t>(a | (b << 2))}; }
  static Z4J from_scalar(Scalar s) { return Z4J(s.code & 3u, (s.code >> 2) & 3u); }

  friend bool operator==(const Z4J&, const Z4J&) = default;
  friend Z4J operator+(Z4J x, Z4J y) { return Z4J(x.a + y.a, x.b + y.b); }
  friend Z4J operator-(Z4J x, Z4J y) { return Z4J(x.a - y.a, x.b - y.b); }
  friend Z4J operator-(Z4J x) { return Z4J(-x.a, -x.b); }
  friend Z4J operator*(Z4J x, Z4J y) {
    return Z4J(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
  }
};

inline bool coeff_is_zero(std::int64_t c) { return c == 0; }
inline bool coeff_is_zero(const Eisenstein& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Z4J& c) { return c.a == 0 && c.b == 0; }
std::string coeff_format(std::int64_t c);
std::string coeff_format(const Eisenstein& c);
std::string coeff_format(const Z4J& c);
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

template <class C>
inline C coeff_add(const C& x, const C& y) { return x + y; }
template <class C>
inline C coeff_mul(const C& x, const C& y) { return x * y; }
template <>
inline std::int64_t coeff_add(const std::int64_t& x, const std::int64_t& y) { return checked_add(x, y); }
template <>
inline std::int64_t coeff_mul(const std::int64_t& x, const std::int64_t& y) { return checked_mul(x, y); }

// u^i v^k
struct Monomial {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  // graded order: total degree, then descending u-degree
  friend bool operator<(const Monomial& x, const Monomial& y) {
    std::uint32_t dx = x.u + x.v, dy = y.u + y.v;
    if (dx != dy) return dx < dy;
    return x.u > y.u;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial in u, v with coefficients in C.
template <class C>
class Poly {
 public:
  Poly() = default;
  Poly(C c) { add_term({0, 0}, c); }  // NOLINT: constants convert implicitly
  static Poly u(std::uint32_t e = 1) { Poly p; p.add_term({e, 0}, C(1)); return p; }
  static Poly v(std::uint32_t e = 1) { Poly p; p.add_term({0, e}, C(1)); return p; }
  static Poly monomial(Monomial m, C c) { Poly p; p.add_term(m, c); return p; }

  const std::map<Monomial, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }
  std::uint32_t v_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.v);
    return d;
  }

  void add_term(Monomial m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = coeff_add(it->second, c);
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, coeff_mul(C(-1), c));
    return *this;
  }
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator-(const Poly& x) { return Poly() - x; }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) out.add_term({mx.u + my.u, mx.v + my.v}, coeff_mul(cx, cy));
    }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned e) const {
    Poly out(C(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  // Ring morphism u -> pu, v -> pv.
  Poly substitute(const Poly& pu, const Poly& pv) const {
    Poly out;
    for (const auto& [m, c] : terms_) out += Poly(c) * pu.pow(m.u) * pv.pow(m.v);
    return out;
  }

  // Coefficientwise image under a ring morphism f: C -> D.
  template <class D, class F>
  Poly<D> map(F f) const {
    Poly<D> out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string cs = coeff_format(c);
      bool unit_mono = m.u == 0 && m.v == 0;
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (mag.find_first_of("+-") != std::string::npos) mag = "(" + mag + ")";
      if (!s.empty() || neg) s += neg ? "-" : "+";
      if (mag != "1" || unit_mono) s += mag;
      s += mono_string(m);
    }
    return s;
  }

 private:
  static std::string mono_string(Monomial m) {
    std::string s;
    if (m.u > 0) s += m.u == 1 ? "u" : "u^" + std::to_string(m.u);
    if (m.v > 0) s += m.v == 1 ? "v" : "v^" + std::to_string(m.v);
    return s;
  }

  std::map<Monomial, C> terms_;
};

using PolyZ = Poly<std::int64_t>;
using PolyZJ = Poly<Eisenstein>;
using PolyZ4J = Poly<Z4J>;

PolyZ4J reduce_mod4(const PolyZ& p);
PolyZ4J reduce_mod4(const PolyZJ& p);
PolyZJ lift_to_zj(const PolyZ& p);

}  // namespace cubic

#endif
