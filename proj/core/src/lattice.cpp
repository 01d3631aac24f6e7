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

#include "cubic/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace detail {

namespace {

struct Overflow {};

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

inline std::int64_t guard(std::int64_t x) {
  if (x >= kLimit || x <= -kLimit) throw Overflow{};
  return x;
}

inline std::int64_t mul_add(std::int64_t acc, std::int64_t f, std::int64_t x) {
  std::int64_t p, s;
  if (__builtin_mul_overflow(f, x, &p) || __builtin_add_overflow(acc, p, &s)) throw Overflow{};
  return guard(s);
}
inline BigInt mul_add(const BigInt& acc, const BigInt& f, const BigInt& x) { return acc + f * x; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class T>
void egcd(const T& a, const T& b, T& g, T& s, T& t) {
  T r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    T q = r0 / r1;
    T tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  g = r0; s = s0; t = t0;
}

template <class T>
std::size_t lead(const std::vector<T>& v, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// v += f * r on columns >= from
template <class T>
void axpy(std::vector<T>& v, const T& f, const std::vector<T>& r, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (r[i] != 0) v[i] = mul_add(v[i], f, r[i]);
}

}  // namespace

template <class T>
class HermiteRows {
 public:
  explicit HermiteRows(std::size_t m) : m_(m) {}

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, std::vector<T>>& rows() const { return rows_; }

  bool insert(std::vector<T> v) {
    std::map<std::size_t, std::vector<T>> pending;
    bool grew = false;
    std::size_t c = 0;
    while (true) {
      c = lead(v, c);
      if (c == m_) break;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        pending.emplace(c, std::move(v));
        grew = true;
        break;
      }
      const std::vector<T>& r = it->second;
      const T a = r[c], b = v[c];
      if (b % a == 0) {
        axpy(v, T(-(b / a)), r, c);
        continue;
      }
      T g, s, t;
      egcd(a, b, g, s, t);
      std::vector<T> nr(m_, T(0));
      axpy(nr, s, r, c);
      axpy(nr, t, v, c);
      std::vector<T> nv(m_, T(0));
      axpy(nv, T(a / g), v, c);
      axpy(nv, T(-(b / g)), r, c);
      pending.emplace(c, std::move(nr));
      v = std::move(nv);
      grew = true;
    }
    for (auto& [col, row] : pending) size_reduce(row, col, pending);
    for (auto& [col, row] : pending) rows_[col] = std::move(row);
    return grew;
  }

  bool contains(std::vector<T> v) const {
    std::size_t c = 0;
    while (true) {
      c = lead(v, c);
      if (c == m_) return true;
      auto it = rows_.find(c);
      if (it == rows_.end()) return false;
      const T a = it->second[c];
      if (v[c] % a != 0) return false;
      axpy(v, T(-(v[c] / a)), it->second, c);
    }
  }

  void reduce_fully() {
    for (auto& [col, row] : rows_) size_reduce(row, col, {});
  }

  std::size_t m_;
  std::map<std::size_t, std::vector<T>> rows_;

 private:
  // Reduce row entries at later pivot columns into [0, pivot).
  void size_reduce(std::vector<T>& row, std::size_t col,
                   const std::map<std::size_t, std::vector<T>>& pending) const {
    for (std::size_t d = col + 1; d < m_; ++d) {
      if (row[d] == 0) continue;
      const std::vector<T>* pr = nullptr;
      if (auto p = pending.find(d); p != pending.end()) pr = &p->second;
      else if (auto q = rows_.find(d); q != rows_.end()) pr = &q->second;
      if (!pr) continue;
      const T& piv = (*pr)[d];
      T q = floor_div(row[d], piv);
      if (q != 0) axpy(row, T(-q), *pr, d);
    }
  }
};

}  // namespace detail

IntLattice::IntLattice(std::size_t columns)
    : columns_(columns), small_(std::make_unique<detail::HermiteRows<std::int64_t>>(columns)) {}

IntLattice::IntLattice(const IntLattice& o) : columns_(o.columns_) {
  if (o.small_) small_ = std::make_unique<detail::HermiteRows<std::int64_t>>(*o.small_);
  if (o.big_) big_ = std::make_unique<detail::HermiteRows<BigInt>>(*o.big_);
}
IntLattice& IntLattice::operator=(const IntLattice& o) {
  if (this != &o) {
    IntLattice tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}
IntLattice::IntLattice(IntLattice&&) noexcept = default;
IntLattice& IntLattice::operator=(IntLattice&&) noexcept = default;
IntLattice::~IntLattice() = default;

std::size_t IntLattice::rank() const { return big_ ? big_->rank() : small_->rank(); }

namespace {
std::vector<BigInt> widen(const std::vector<std::int64_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

bool IntLattice::insert(const std::vector<std::int64_t>& row) {
  if (row.size() != columns_) throw MismatchError("lattice row has wrong length");
  if (!big_) {
    try {
      return small_->insert(row);
    } catch (const detail::Overflow&) {
      big_ = std::make_unique<detail::HermiteRows<BigInt>>(columns_);
      for (const auto& [c, r] : small_->rows_) big_->rows_.emplace(c, widen(r));
      small_.reset();
    }
  }
  return big_->insert(widen(row));
}

bool IntLattice::contains(const std::vector<std::int64_t>& row) const {
  if (row.size() != columns_) throw MismatchError("lattice row has wrong length");
  if (!big_) {
    try {
      return small_->contains(row);
    } catch (const detail::Overflow&) {
    }
    detail::HermiteRows<BigInt> tmp(columns_);
    for (const auto& [c, r] : small_->rows_) tmp.rows_.emplace(c, widen(r));
    return tmp.contains(widen(row));
  }
  return big_->contains(widen(row));
}

void IntLattice::reduce_fully() {
  if (!big_) {
    auto backup = *small_;
    try {
      small_->reduce_fully();
      return;
    } catch (const detail::Overflow&) {
      big_ = std::make_unique<detail::HermiteRows<BigInt>>(columns_);
      for (const auto& [c, r] : backup.rows_) big_->rows_.emplace(c, widen(r));
      small_.reset();
    }
  }
  big_->reduce_fully();
}

std::vector<std::vector<BigInt>> IntLattice::rows() const {
  std::vector<std::vector<BigInt>> out;
  if (big_) {
    for (const auto& [c, r] : big_->rows_) out.push_back(r);
  } else {
    for (const auto& [c, r] : small_->rows_) out.push_back(widen(r));
  }
  return out;
}

std::vector<std::size_t> IntLattice::pivots() const {
  std::vector<std::size_t> out;
  if (big_) {
    for (const auto& kv : big_->rows_) out.push_back(kv.first);
  } else {
    for (const auto& kv : small_->rows_) out.push_back(kv.first);
  }
  return out;
}

bool IntLattice::is_hermite() const {
  auto rs = rows();
  auto ps = pivots();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const auto& r = rs[k];
    if (detail::lead(r, 0) != ps[k] || r[ps[k]] <= 0) return false;
    if (k > 0 && ps[k] <= ps[k - 1]) return false;
  }
  return true;
}

// ---- Smith form ----

std::map<BigInt, std::size_t> SmithForm::torsion() const {
  std::map<BigInt, std::size_t> out;
  for (const auto& d : factors) ++out[d];
  return out;
}

std::map<BigInt, std::size_t> SmithForm::elementary_divisors() const {
  std::map<BigInt, std::size_t> out;
  for (BigInt f : factors) {
    for (BigInt p = 2; p * p <= f; ++p) {
      if (f % p != 0) continue;
      BigInt q = 1;
      while (f % p == 0) {
        f /= p;
        q *= p;
      }
      ++out[q];
    }
    if (f > 1) ++out[f];
  }
  return out;
}

std::string SmithForm::primary_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const auto& [d, mult] : elementary_divisors()) {
    os << " + (Z/" << d << ")";
    if (mult > 1) os << "^" << mult;
  }
  return os.str();
}

std::size_t SmithForm::dim_mod_prime(unsigned p) const {
  std::size_t d = free_rank;
  for (const auto& f : factors)
    if (f % p == 0) ++d;
  return d;
}

std::size_t SmithForm::length_mod_prime_power(unsigned p, unsigned k) const {
  std::size_t len = free_rank * k;
  for (BigInt f : factors) {
    unsigned v = 0;
    while (v < k && f % p == 0) {
      f /= p;
      ++v;
    }
    len += v;
  }
  return len;
}

std::string SmithForm::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const auto& [d, mult] : torsion()) {
    os << " + (Z/" << d << ")";
    if (mult > 1) os << "^" << mult;
  }
  return os.str();
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Diagonalize a dense matrix; returns |diagonal| entries (all nonzero).
std::vector<BigInt> diagonalize(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // smallest nonzero entry of the trailing block
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(a[k], a[bi]);
    for (auto& r : a) std::swap(r[k], r[bj]);
    while (true) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        BigInt q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        BigInt q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row k / column k onto the diagonal
        std::size_t bi2 = k, bj2 = k;
        for (std::size_t i = k + 1; i < rows; ++i)
          if (a[i][k] != 0 && abs(a[i][k]) < abs(a[bi2][bj2])) { bi2 = i; bj2 = k; }
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[k][j] != 0 && abs(a[k][j]) < abs(a[bi2][bj2])) { bi2 = k; bj2 = j; }
        if (bi2 != k) std::swap(a[k], a[bi2]);
        if (bj2 != k)
          for (auto& r : a) std::swap(r[k], r[bj2]);
        continue;
      }
      // divisibility: the pivot must divide the trailing block
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) a[k][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[k][k]));
  }
  return diag;
}

}  // namespace

SmithForm smith_normal_form(std::vector<std::vector<BigInt>> rows, std::size_t columns) {
  IntLattice lat(columns);
  // Route through the lattice so unit pivots can be stripped before the dense stage.
  Matrix dense;
  for (auto& r : rows) {
    if (r.size() != columns) throw MismatchError("smith input row has wrong length");
    bool fits = true;
    std::vector<std::int64_t> s(columns);
    for (std::size_t j = 0; j < columns && fits; ++j) {
      if (abs(r[j]) >= (BigInt(1) << 62)) fits = false;
      else s[j] = static_cast<std::int64_t>(r[j]);
    }
    if (!fits) dense.push_back(std::move(r));
    else lat.insert(s);
  }
  if (dense.empty()) return smith_normal_form(lat);
  for (auto& r : lat.rows()) dense.push_back(std::move(r));
  SmithForm out;
  out.columns = columns;
  auto diag = diagonalize(std::move(dense));
  out.rank = diag.size();
  out.free_rank = columns - out.rank;
  for (auto& d : diag)
    if (d > 1) out.factors.push_back(d);
  return out;
}

SmithForm smith_normal_form(const IntLattice& lattice) {
  IntLattice lat(lattice);
  lat.reduce_fully();
  const auto rows = lat.rows();
  const auto pivots = lat.pivots();
  const std::size_t m = lattice.columns();
  // After full reduction a pivot equal to 1 is the only nonzero in its column,
  // so that row and column split off a trivial summand.
  std::vector<char> drop_col(m, 0);
  Matrix keep;
  std::size_t ones = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k][pivots[k]] == 1) {
      drop_col[pivots[k]] = 1;
      ++ones;
    }
  }
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m; ++j) {
    if (drop_col[j]) continue;
    bool used = false;
    for (std::size_t k = 0; k < rows.size() && !used; ++k)
      if (rows[k][pivots[k]] != 1 && rows[k][j] != 0) used = true;
    if (used) cols.push_back(j);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k][pivots[k]] == 1) continue;
    std::vector<BigInt> r;
    r.reserve(cols.size());
    for (auto j : cols) r.push_back(rows[k][j]);
    keep.push_back(std::move(r));
  }
  auto diag = diagonalize(std::move(keep));
  SmithForm out;
  out.columns = m;
  out.rank = ones + diag.size();
  out.free_rank = m - out.rank;
  for (auto& d : diag)
    if (d > 1) out.factors.push_back(d);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace cubic
