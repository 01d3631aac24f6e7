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

#ifndef CUBIC_BRAIDWORD_HPP
#define CUBIC_BRAIDWORD_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/coeff.hpp"

namespace cubic {

// Word in s_1..s_{n-1}; letter i > 0 is s_i, letter -i is s_i^{-1}.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);
  // "2,-3,1" (comma form) or "2-31" (shorthand, one digit per generator).
  // strands = 0 picks one more than the largest index (at least 2).
  static BraidWord parse(std::string_view text, int strands = 0);
  static BraidWord generator(int strands, int i, int exponent = 1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_index() const;
  // Number of positive letters minus number of negative letters.
  int signed_length() const;

  // Merge runs of equal index with exponents mod 3 (s^2 stored as s^{-1});
  // repeat until no run can be merged.
  BraidWord normalized() const;
  BraidWord inverse() const;
  BraidWord power(int k) const;
  BraidWord with_strands(int n) const;
  // Concatenation; strand count is the larger of the two.
  friend BraidWord operator*(const BraidWord& x, const BraidWord& y);

  std::string to_string() const;
  std::string compact() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend std::strong_ordering operator<=>(const BraidWord& x, const BraidWord& y) {
    if (auto c = x.letters_ <=> y.letters_; c != 0) return c;
    return x.strands_ <=> y.strands_;
  }

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

// Finite Z[j]-combination of normalized words.
class FormalElement {
 public:
  explicit FormalElement(int strands = 2) : strands_(strands) {}
  static FormalElement word(const BraidWord& w, Eisenstein c = {1, 0});
  static FormalElement parse_sum(int strands, std::initializer_list<std::string_view> words);
  static FormalElement one(int strands) { return word(BraidWord(strands, {})); }

  int strands() const { return strands_; }
  const std::map<BraidWord, Eisenstein>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  void add(const BraidWord& w, Eisenstein c);
  FormalElement with_strands(int n) const;

  FormalElement& operator+=(const FormalElement& o);
  FormalElement& operator-=(const FormalElement& o);
  friend FormalElement operator+(FormalElement x, const FormalElement& y) { return x += y; }
  friend FormalElement operator-(FormalElement x, const FormalElement& y) { return x -= y; }
  friend FormalElement operator*(const FormalElement& x, const FormalElement& y);
  friend FormalElement operator*(Eisenstein c, const FormalElement& x);
  friend bool operator==(const FormalElement&, const FormalElement&) = default;

  std::string to_string() const;

 private:
  int strands_;
  std::map<BraidWord, Eisenstein> terms_;
};

// phi(s_i) = j s_i: word coefficient times j^(signed length).
FormalElement phi(const FormalElement& e);
FormalElement phi_pow(const FormalElement& e, int k);
// tau_gamma(s_i) = gamma^2 s_i^{-1}, with gamma = j^gamma_exp.
FormalElement tau(const FormalElement& e, int gamma_exp);

// The named elements, on the smallest strand count they need.
namespace elements {
FormalElement q();
FormalElement c();
FormalElement b();
FormalElement e1();
// e1 (s_2^{+-1} + 1) e1
FormalElement rw_plus();
FormalElement rw_minus();
FormalElement r1();
FormalElement r2();
BraidWord z(int n);
}  // namespace elements

}  // namespace cubic

#endif
