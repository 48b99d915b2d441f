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

#ifndef WITTEXT_ACCEPTANCE_HPP
#define WITTEXT_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "wittext/serialize.hpp"

namespace wittext {

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget = 0;
  std::vector<SubCheck> checks;
  json details = json::object();

  std::string line() const;
  json to_json(bool with_timing = true) const;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id);
// dense, verma, lowest, glue, counterexample, freelie, functor, all
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace wittext

#endif  // WITTEXT_ACCEPTANCE_HPP
