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

#ifndef CUBIC_LATTICE_HPP
#define CUBIC_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cubic {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
template <class T>
class HermiteRows;
}

// Submodule of Z^columns kept in row Hermite form (positive pivots).
// Arithmetic runs on 64-bit integers and switches to arbitrary precision
// when an intermediate would leave (-2^62, 2^62).
class IntLattice {
 public:
  explicit IntLattice(std::size_t columns);
  IntLattice(const IntLattice& other);
  IntLattice& operator=(const IntLattice& other);
  IntLattice(IntLattice&&) noexcept;
  IntLattice& operator=(IntLattice&&) noexcept;
  ~IntLattice();

  std::size_t columns() const { return columns_; }
  std::size_t rank() const;
  bool escalated() const { return big_ != nullptr; }

  // Returns true if the row enlarged the lattice.
  bool insert(const std::vector<std::int64_t>& row);
  bool contains(const std::vector<std::int64_t>& row) const;
  // Reduce entries above each pivot into [0, pivot).
  void reduce_fully();
  // Rows in increasing pivot order.
  std::vector<std::vector<BigInt>> rows() const;
  std::vector<std::size_t> pivots() const;
  bool is_hermite() const;

 private:
  std::size_t columns_;
  std::unique_ptr<detail::HermiteRows<std::int64_t>> small_;
  std::unique_ptr<detail::HermiteRows<BigInt>> big_;
};

struct SmithForm {
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::size_t free_rank = 0;        // columns - rank
  std::vector<BigInt> factors;      // invariant factors > 1, each dividing the next
  // factor -> multiplicity
  std::map<BigInt, std::size_t> torsion() const;
  // prime power -> multiplicity, from splitting each invariant factor
  std::map<BigInt, std::size_t> elementary_divisors() const;
  // "Z^r + (Z/2)^a + (Z/3)^b + ..." on elementary divisors
  std::string primary_string() const;
  // dim over F_p of (Z^columns / L) tensor F_p
  std::size_t dim_mod_prime(unsigned p) const;
  // log_p |(Z^columns / L) tensor Z/p^k|
  std::size_t length_mod_prime_power(unsigned p, unsigned k) const;
  std::string to_string() const;
};

// Smith form of Z^columns / L for the lattice L.
SmithForm smith_normal_form(const IntLattice& lattice);
// Smith form of Z^columns / (row span of rows).
SmithForm smith_normal_form(std::vector<std::vector<BigInt>> rows, std::size_t columns);

}  // namespace cubic

#endif
