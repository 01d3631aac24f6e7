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

#include "cubic/poly.hpp"

#include "cubic/errors.hpp"

namespace cubic {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in polynomial arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in polynomial arithmetic");
  return r;
}

std::string coeff_format(std::int64_t c) { return std::to_string(c); }

std::string coeff_format(const Eisenstein& c) {
  if (c.b == 0) return std::to_string(c.a);
  if (c.a == 0) {
    if (c.b == 1) return "j";
    if (c.b == -1) return "-j";
    return std::to_string(c.b) + "j";
  }
  return to_string(c);
}

std::string coeff_format(const Z4J& c) {
  if (c.b == 0) return std::to_string(c.a);
  std::string jb = c.b == 1 ? "j" : std::to_string(c.b) + "j";
  if (c.a == 0) return jb;
  return std::to_string(c.a) + "+" + jb;
}

PolyZ4J reduce_mod4(const PolyZ& p) {
  return p.map<Z4J>([](std::int64_t c) { return Z4J(c, 0); });
}

PolyZ4J reduce_mod4(const PolyZJ& p) {
  return p.map<Z4J>([](const Eisenstein& c) { return Z4J::from(c); });
}

PolyZJ lift_to_zj(const PolyZ& p) {
  return p.map<Eisenstein>([](std::int64_t c) { return Eisenstein{c, 0}; });
}

}  // namespace cubic
