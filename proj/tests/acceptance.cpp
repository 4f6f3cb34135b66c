// Copyright 2026 The arrowkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: runs the ten reproduction checks and prints one line per
// check. Exit status is 0 only if every check passes. Pass --quick for the
// reduced subset.

#include <cstring>
#include <iostream>

#include "arrowkit/audit.hpp"

int main(int argc, char** argv) {
  arrowkit::AuditOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  arrowkit::Audit audit(options);
  int failed = 0;
  audit.run_all([&](const arrowkit::AuditResult& r) {
    std::cout << arrowkit::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (arrowkit::kAuditCriteria - failed) << "/" << arrowkit::kAuditCriteria
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
