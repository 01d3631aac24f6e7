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

#include "cubic/coeff.hpp"

#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

std::uint32_t mod4(std::int64_t v) { return static_cast<std::uint32_t>(((v % 4) + 4) % 4); }

struct Pair {
  std::uint32_t a, b;
};

Pair f4_split(Scalar x) { return {x.code & 1u, (x.code >> 1) & 1u}; }
Pair z4j_split(Scalar x) { return {x.code & 3u, (x.code >> 2) & 3u}; }
Scalar f4_join(std::uint32_t a, std::uint32_t b) { return {(a & 1u) | ((b & 1u) << 1)}; }
Scalar z4j_join(std::uint32_t a, std::uint32_t b) { return {(a & 3u) | ((b & 3u) << 2)}; }

}  // namespace

Eisenstein Eisenstein::j_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

std::string to_string(const Eisenstein& e) {
  std::ostringstream os;
  os << e.a;
  if (e.b != 0) os << (e.b < 0 ? "-" : "+") << (e.b < 0 ? -e.b : e.b) << "j";
  return os.str();
}

RingSpec RingSpec::fp(unsigned p) {
  switch (p) {
    case 2: return f2();
    case 3: return f3();
    case 5:
    case 7: return RingSpec(RingTag::Fp, p);
    default: throw MismatchError("unsupported prime field F" + std::to_string(p));
  }
}

RingSpec RingSpec::parse(std::string_view name) {
  if (name == "f2") return f2();
  if (name == "f3") return f3();
  if (name == "f4") return f4();
  if (name == "f5") return fp(5);
  if (name == "f7") return fp(7);
  if (name == "z4") return z4();
  if (name == "z4j") return z4j();
  if (name == "z") return integers();
  throw MismatchError("unknown ring '" + std::string(name) + "'");
}

unsigned RingSpec::characteristic() const {
  switch (tag_) {
    case RingTag::Z4:
    case RingTag::Z4J: return 4;
    case RingTag::Z: return 0;
    default: return p_;
  }
}

unsigned RingSpec::size() const {
  switch (tag_) {
    case RingTag::F2: return 2;
    case RingTag::F3: return 3;
    case RingTag::F4: return 4;
    case RingTag::Fp: return p_;
    case RingTag::Z4: return 4;
    case RingTag::Z4J: return 16;
    case RingTag::Z: return 0;
  }
  return 0;
}

unsigned RingSpec::residue_size() const {
  switch (tag_) {
    case RingTag::Z4: return 2;
    case RingTag::Z4J: return 4;
    default: return size();
  }
}

bool RingSpec::is_field() const {
  return tag_ == RingTag::F2 || tag_ == RingTag::F3 || tag_ == RingTag::F4 || tag_ == RingTag::Fp;
}

std::string RingSpec::name() const {
  switch (tag_) {
    case RingTag::F2: return "f2";
    case RingTag::F3: return "f3";
    case RingTag::F4: return "f4";
    case RingTag::Fp: return "f" + std::to_string(p_);
    case RingTag::Z4: return "z4";
    case RingTag::Z4J: return "z4j";
    case RingTag::Z: return "z";
  }
  return "?";
}

Scalar RingSpec::j() const {
  if (!has_j()) throw MismatchError("ring " + name() + " has no cube root of unity j");
  return tag_ == RingTag::F4 ? Scalar{2} : Scalar{4};
}

Scalar RingSpec::j_pow(int k) const {
  switch (((k % 3) + 3) % 3) {
    case 0: return one();
    case 1: return j();
    default: return mul(j(), j());
  }
}

Scalar RingSpec::add(Scalar x, Scalar y) const {
  switch (tag_) {
    case RingTag::F2:
    case RingTag::F4: return {x.code ^ y.code};
    case RingTag::F3: return {(x.code + y.code) % 3};
    case RingTag::Fp: return {(x.code + y.code) % p_};
    case RingTag::Z4: return {(x.code + y.code) & 3u};
    case RingTag::Z4J: {
      auto [a, b] = z4j_split(x);
      auto [c, d] = z4j_split(y);
      return z4j_join(a + c, b + d);
    }
    case RingTag::Z: break;
  }
  throw MismatchError("scalar arithmetic is not defined for ring z");
}

Scalar RingSpec::neg(Scalar x) const {
  switch (tag_) {
    case RingTag::F2:
    case RingTag::F4: return x;
    case RingTag::F3: return {(3 - x.code) % 3};
    case RingTag::Fp: return {(p_ - x.code) % p_};
    case RingTag::Z4: return {(4 - x.code) & 3u};
    case RingTag::Z4J: {
      auto [a, b] = z4j_split(x);
      return z4j_join(4 - a, 4 - b);
    }
    case RingTag::Z: break;
  }
  throw MismatchError("scalar arithmetic is not defined for ring z");
}

Scalar RingSpec::mul(Scalar x, Scalar y) const {
  switch (tag_) {
    case RingTag::F2: return {x.code & y.code};
    case RingTag::F3: return {(x.code * y.code) % 3};
    case RingTag::Fp: return {(x.code * y.code) % p_};
    case RingTag::Z4: return {(x.code * y.code) & 3u};
    case RingTag::F4: {
      // (a + bj)(c + dj) = ac + bd + (ad + bc + bd) j
      auto [a, b] = f4_split(x);
      auto [c, d] = f4_split(y);
      return f4_join((a & c) ^ (b & d), (a & d) ^ (b & c) ^ (b & d));
    }
    case RingTag::Z4J: {
      // (a + bj)(c + dj) = ac - bd + (ad + bc - bd) j
      auto [a, b] = z4j_split(x);
      auto [c, d] = z4j_split(y);
      return z4j_join(a * c + 3 * b * d, a * d + b * c + 3 * b * d);
    }
    case RingTag::Z: break;
  }
  throw MismatchError("scalar arithmetic is not defined for ring z");
}

bool RingSpec::is_unit(Scalar x) const {
  switch (tag_) {
    case RingTag::Z4: return (x.code & 1u) != 0;
    case RingTag::Z4J: {
      // units are the elements that are nonzero modulo 2
      auto [a, b] = z4j_split(x);
      return ((a | b) & 1u) != 0;
    }
    case RingTag::Z: return false;
    default: return x.code != 0;
  }
}

Scalar RingSpec::inv(Scalar x) const {
  if (!is_unit(x)) throw MismatchError("element " + format(x) + " is not a unit in " + name());
  for (Scalar y : elements()) {
    if (mul(x, y) == one()) return y;
  }
  throw MismatchError("inverse not found");
}

Scalar RingSpec::halve(Scalar x) const {
  switch (tag_) {
    case RingTag::Z4:
      if (x.code & 1u) break;
      return {x.code >> 1};
    case RingTag::Z4J: {
      auto [a, b] = z4j_split(x);
      if ((a | b) & 1u) break;
      return z4j_join(a >> 1, b >> 1);
    }
    default: break;
  }
  throw MismatchError("halve: " + format(x) + " is not in 2R for ring " + name());
}

Scalar RingSpec::from_int(std::int64_t v) const {
  switch (tag_) {
    case RingTag::F2: return {static_cast<std::uint32_t>(v & 1)};
    case RingTag::F4: return {static_cast<std::uint32_t>(v & 1)};
    case RingTag::F3: return {static_cast<std::uint32_t>(((v % 3) + 3) % 3)};
    case RingTag::Fp: {
      std::int64_t p = p_;
      return {static_cast<std::uint32_t>(((v % p) + p) % p)};
    }
    case RingTag::Z4:
    case RingTag::Z4J: return {mod4(v)};
    case RingTag::Z: break;
  }
  throw MismatchError("scalar arithmetic is not defined for ring z");
}

Scalar RingSpec::from_eisenstein(const Eisenstein& e) const {
  if (has_j()) return add(from_int(e.a), mul(from_int(e.b), j()));
  if (e.b != 0) throw MismatchError("coefficient " + to_string(e) + " needs j, absent in " + name());
  return from_int(e.a);
}

Scalar RingSpec::conj(Scalar x) const {
  switch (tag_) {
    case RingTag::F4: {
      // a + bj -> a + bj^2 = (a + b) + bj
      auto [a, b] = f4_split(x);
      return f4_join(a ^ b, b);
    }
    case RingTag::Z4J: {
      // a + bj -> a + bj^2 = (a - b) - bj
      auto [a, b] = z4j_split(x);
      return z4j_join(a + 4 - b, 4 - b);
    }
    default: return x;
  }
}

std::vector<Scalar> RingSpec::elements() const {
  std::vector<Scalar> out;
  for (std::uint32_t c = 0; c < size(); ++c) out.push_back({c});
  return out;
}

std::string RingSpec::format(Scalar x) const {
  switch (tag_) {
    case RingTag::F4: {
      static const char* names[] = {"0", "1", "j", "j^2"};
      return names[x.code & 3u];
    }
    case RingTag::Z4J: {
      auto [a, b] = z4j_split(x);
      std::string s = std::to_string(a);
      if (b != 0) s += "+" + std::to_string(b) + "j";
      return s;
    }
    default: return std::to_string(x.code);
  }
}

}  // namespace cubic
