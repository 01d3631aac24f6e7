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

// Acceptance run: the full verification battery, then one line per
// criterion. Usage: cubic_acceptance [fast|paper|extended] [--json path]

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
  using namespace cubic::suite;
  Options o;
  o.kind = Kind::Paper;
  const char* json_path = nullptr;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--json") == 0 && k + 1 < argc) {
      json_path = argv[++k];
    } else {
      try {
        o.kind = parse_kind(argv[k]);
      } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
      }
    }
  }
  const char* cache = std::getenv("CUBIC_CACHE_DIR");
  o.cache_dir = cache ? cache : CUBIC_TEST_CACHE;
  o.progress = &std::cout;

  const auto checks = run(o);

  std::cout << "\n== acceptance (" << kind_name(o.kind) << ") ==\n";
  for (int c = 1; c <= 15; ++c) std::cout << criterion_status(checks, c) << "  " << c << ". " << criterion_title(c) << '\n';
  for (int c : {0, 16}) {
    const std::string s = criterion_status(checks, c);
    if (s != "NOT RUN") std::cout << s << "  supplementary: " << criterion_title(c) << '\n';
  }
  if (json_path) std::ofstream(json_path) << report_json(checks, o.kind) << '\n';
  const int code = exit_code(checks);
  std::cout << "exit code " << code << '\n';
  return code;
}
