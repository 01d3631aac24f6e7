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

#ifndef CUBIC_TOOLS_SUITE_HPP
#define CUBIC_TOOLS_SUITE_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubic/echelon.hpp"

namespace cubic::suite {

// fast: everything except the n = 5 group-algebra closures.
// paper: the full battery. extended: paper plus the heavy targets.
// reps: only the characteristic-2 block structure at n = 4.
enum class Kind { Fast, Paper, Extended, Reps };

Kind parse_kind(const std::string& name);
std::string kind_name(Kind k);

struct Check {
  int criterion = 0;  // 1..15; 0 = supplementary; 16 = extended
  std::string name;
  std::string expected;
  std::string got;
  std::string status;  // PASS, FAIL, SKIPPED, RECORDED (new data, never compared)
  double wall_ms = 0;
  bool resource_abort = false;
};

struct Options {
  Kind kind = Kind::Fast;
  std::filesystem::path cache_dir;
  ClosureOptions closure;
  std::ostream* progress = nullptr;  // one line per finished check
};

std::vector<Check> run(const Options& opts);

std::string criterion_title(int criterion);
// PASS if every check passed, SKIPPED if some were skipped and none failed.
std::string criterion_status(const std::vector<Check>& checks, int criterion);
// 0 all passed, 1 a mismatch, 2 only resource aborts.
int exit_code(const std::vector<Check>& checks);
std::string report_json(const std::vector<Check>& checks, Kind kind);

}  // namespace cubic::suite

#endif
