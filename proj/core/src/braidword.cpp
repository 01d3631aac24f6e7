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

#include "cubic/braidword.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw MismatchError("strand count must be positive");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > strands_ - 1) {
      throw MismatchError("letter " + std::to_string(l) + " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(start, end - start));
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty()) throw MismatchError("empty letter in word '" + std::string(text) + "'");
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size()) throw MismatchError("bad letter '" + item + "'");
      letters.push_back(value);
      start = end + 1;
    }
  } else {
    int sign = 1;
    for (char ch : text) {
      if (ch == '-') {
        sign = -1;
      } else if (ch >= '1' && ch <= '9') {
        letters.push_back(sign * (ch - '0'));
        sign = 1;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw MismatchError("bad character in word '" + std::string(text) + "'");
      }
    }
  }
  int top = 0;
  for (int l : letters) top = std::max(top, std::abs(l));
  if (strands == 0) strands = std::max(2, top + 1);
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::generator(int strands, int i, int exponent) {
  std::vector<int> letters;
  int e = ((exponent % 3) + 3) % 3;
  if (e == 1) letters.push_back(i);
  if (e == 2) letters.push_back(-i);
  return BraidWord(strands, std::move(letters));
}

int BraidWord::max_index() const {
  int top = 0;
  for (int l : letters_) top = std::max(top, std::abs(l));
  return top;
}

int BraidWord::signed_length() const {
  int s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord BraidWord::normalized() const {
  // stack of (index, exponent mod 3)
  std::vector<std::pair<int, int>> stack;
  for (int l : letters_) {
    int idx = std::abs(l);
    int e = l > 0 ? 1 : 2;
    if (!stack.empty() && stack.back().first == idx) {
      stack.back().second = (stack.back().second + e) % 3;
      if (stack.back().second == 0) stack.pop_back();
    } else {
      stack.emplace_back(idx, e);
    }
  }
  std::vector<int> out;
  out.reserve(stack.size());
  for (auto [idx, e] : stack) out.push_back(e == 1 ? idx : -idx);
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::with_strands(int n) const { return BraidWord(n, letters_); }

BraidWord operator*(const BraidWord& x, const BraidWord& y) {
  std::vector<int> out = x.letters_;
  out.insert(out.end(), y.letters_.begin(), y.letters_.end());
  return BraidWord(std::max(x.strands_, y.strands_), std::move(out));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters_[i]);
  }
  return s;
}

std::string BraidWord::compact() const {
  std::string s;
  for (int l : letters_) s += std::to_string(l);
  return s.empty() ? "1" : s;
}

FormalElement FormalElement::word(const BraidWord& w, Eisenstein c) {
  FormalElement e(w.strands());
  e.add(w, c);
  return e;
}

FormalElement FormalElement::parse_sum(int strands, std::initializer_list<std::string_view> words) {
  FormalElement e(strands);
  for (auto w : words) e.add(BraidWord::parse(w, strands), {1, 0});
  return e;
}

bool FormalElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.b == 0; });
}

void FormalElement::add(const BraidWord& w, Eisenstein c) {
  if (c.is_zero()) return;
  if (w.strands() > strands_) throw MismatchError("word has more strands than the element");
  BraidWord key = w.with_strands(strands_).normalized();
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalElement FormalElement::with_strands(int n) const {
  FormalElement out(n);
  for (const auto& [w, c] : terms_) out.add(w.with_strands(n), c);
  return out;
}

FormalElement& FormalElement::operator+=(const FormalElement& o) {
  if (o.strands_ > strands_) *this = with_strands(o.strands_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& o) {
  if (o.strands_ > strands_) *this = with_strands(o.strands_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalElement operator*(const FormalElement& x, const FormalElement& y) {
  int n = std::max(x.strands_, y.strands_);
  FormalElement out(n);
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) out.add((wx * wy).with_strands(n), cx * cy);
  }
  return out;
}

FormalElement operator*(Eisenstein c, const FormalElement& x) {
  FormalElement out(x.strands_);
  for (const auto& [w, cw] : x.terms_) out.add(w, c * cw);
  return out;
}

std::string FormalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Eisenstein{1, 0})) os << "(" << cubic::to_string(c) << ")*";
    os << w.compact();
  }
  return os.str();
}

FormalElement phi(const FormalElement& e) { return phi_pow(e, 1); }

FormalElement phi_pow(const FormalElement& e, int k) {
  FormalElement out(e.strands());
  for (const auto& [w, c] : e.terms()) out.add(w, Eisenstein::j_pow(k * w.signed_length()) * c);
  return out;
}

FormalElement tau(const FormalElement& e, int gamma_exp) {
  FormalElement out(e.strands());
  for (const auto& [w, c] : e.terms()) {
    int pos = 0, neg = 0;
    for (int l : w.letters()) (l > 0 ? pos : neg)++;
    std::vector<int> flipped = w.letters();
    for (int& l : flipped) l = -l;
    out.add(BraidWord(w.strands(), flipped), Eisenstein::j_pow(gamma_exp * (2 * pos + neg)) * c);
  }
  return out;
}

namespace elements {

FormalElement q() {
  return FormalElement::parse_sum(3, {"", "1,2,2", "2,1,1", "1,1,2", "2,2,1", "1,2,1", "1,1,2,2,1,1", "1,2,2,1,2,2"});
}

FormalElement c() {
  return FormalElement::parse_sum(3, {"2,1,1,2", "1,2,2,1", "1,1,2,1", "1,2,1,1", "1,1,2,2", "2,2,1,1", "1", "2"});
}

FormalElement b() { return FormalElement::parse_sum(3, {"1,-2", "-2,1", "-1,2", "2,-1"}); }

FormalElement e1() { return FormalElement::parse_sum(3, {"", "1", "1,1"}); }

FormalElement rw_plus() {
  FormalElement mid = FormalElement::parse_sum(3, {"2", ""});
  return e1() * mid * e1();
}

FormalElement rw_minus() {
  FormalElement mid = FormalElement::parse_sum(3, {"-2", ""});
  return e1() * mid * e1();
}

FormalElement r1() {
  return FormalElement::parse_sum(4, {"2,3,3", "1,1,2", "1,2,2", "3,1,1", "2,2,3", "1,3,3"});
}

FormalElement r2() {
  return FormalElement::parse_sum(4, {"2,2,3", "1", "2", "2,3,1,1", "2,2,3,1", "1,1,3,3"});
}

BraidWord z(int n) {
  std::vector<int> base;
  for (int i = 1; i < n; ++i) base.push_back(i);
  return BraidWord(n, base).power(n);
}

}  // namespace elements

}  // namespace cubic
