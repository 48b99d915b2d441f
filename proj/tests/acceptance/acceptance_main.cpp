// Copyright 2026 The wittext Authors
//
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

#include <cstdlib>
#include <iostream>
#include <string>

#include "wittext/acceptance.hpp"
#include "wittext/errors.hpp"

// usage: acceptance [--json] [criterion ids...]
int main(int argc, char** argv) {
  bool as_json = false;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--json") as_json = true;
    else ids.push_back(std::atoi(a.c_str()));
  }
  if (ids.empty()) ids = wittext::suite_criteria("all");
  int failed = 0;
  for (int id : ids) {
    wittext::CriterionResult r = wittext::run_criterion(id);
    if (!r.pass) ++failed;
    if (as_json) std::cout << r.to_json().dump() << "\n";
    else std::cout << r.line() << std::endl;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
