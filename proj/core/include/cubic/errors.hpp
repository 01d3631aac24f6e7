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

#ifndef CUBIC_ERRORS_HPP
#define CUBIC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on ring or length, or an argument is out of range.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Malformed or corrupted cache file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A configured memory cap would be exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t projected_bytes)
      : Error(what), projected_bytes_(projected_bytes) {}
  std::uint64_t projected_bytes() const { return projected_bytes_; }

 private:
  std::uint64_t projected_bytes_;
};

// A search or enumeration ran past its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A checked identity does not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubic

#endif
