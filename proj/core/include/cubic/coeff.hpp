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

#ifndef CUBIC_COEFF_HPP
#define CUBIC_COEFF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubic {

enum class RingTag : std::uint8_t { F2, F3, F4, Fp, Z4, Z4J, Z };

// Encoded ring value. F4: a + 2b for a + bj. Z4J: a + 4b for a + bj.
struct Scalar {
  std::uint32_t code = 0;
  friend bool operator==(Scalar, Scalar) = default;
};

// Element a + bj of Z[j], j^2 + j + 1 = 0.
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static Eisenstein j_pow(int k);
  bool is_zero() const { return a == 0 && b == 0; }
  Eisenstein conj() const { return {a - b, -b}; }
  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
  friend Eisenstein operator+(Eisenstein x, Eisenstein y) { return {x.a + y.a, x.b + y.b}; }
  friend Eisenstein operator-(Eisenstein x, Eisenstein y) { return {x.a - y.a, x.b - y.b}; }
  friend Eisenstein operator-(Eisenstein x) { return {-x.a, -x.b}; }
  friend Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  Eisenstein& operator+=(Eisenstein o) { return *this = *this + o; }
  Eisenstein& operator-=(Eisenstein o) { return *this = *this - o; }
  Eisenstein& operator*=(Eisenstein o) { return *this = *this * o; }
};

std::string to_string(const Eisenstein& e);

class RingSpec {
 public:
  RingSpec() : RingSpec(RingTag::F2, 2) {}
  static RingSpec f2() { return RingSpec(RingTag::F2, 2); }
  static RingSpec f3() { return RingSpec(RingTag::F3, 3); }
  static RingSpec f4() { return RingSpec(RingTag::F4, 2); }
  static RingSpec fp(unsigned p);
  static RingSpec z4() { return RingSpec(RingTag::Z4, 2); }
  static RingSpec z4j() { return RingSpec(RingTag::Z4J, 2); }
  static RingSpec integers() { return RingSpec(RingTag::Z, 0); }
  // Accepts f2, f3, f4, f5, f7, z4, z4j, z.
  static RingSpec parse(std::string_view name);

  RingTag tag() const { return tag_; }
  unsigned characteristic() const;
  // Number of elements; 0 for Z.
  unsigned size() const;
  // Size of the residue field (ring modulo its maximal ideal).
  unsigned residue_size() const;
  bool is_field() const;
  bool is_chain() const { return tag_ == RingTag::Z4 || tag_ == RingTag::Z4J; }
  bool has_j() const { return tag_ == RingTag::F4 || tag_ == RingTag::Z4J; }
  std::string name() const;

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }
  Scalar j() const;
  Scalar j_pow(int k) const;
  Scalar add(Scalar x, Scalar y) const;
  Scalar sub(Scalar x, Scalar y) const { return add(x, neg(y)); }
  Scalar neg(Scalar x) const;
  Scalar mul(Scalar x, Scalar y) const;
  bool is_unit(Scalar x) const;
  Scalar inv(Scalar x) const;
  // For chain rings: w with 2w = x, where x lies in the maximal ideal.
  Scalar halve(Scalar x) const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_eisenstein(const Eisenstein& e) const;
  // Galois conjugation j -> j^2 (identity on rings without j).
  Scalar conj(Scalar x) const;
  std::vector<Scalar> elements() const;
  std::string format(Scalar x) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingTag tag, unsigned p) : tag_(tag), p_(p) {}
  RingTag tag_;
  unsigned p_;
};

}  // namespace cubic

#endif
