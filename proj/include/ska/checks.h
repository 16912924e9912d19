// Copyright 2026 The ska Authors.
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

// Randomized property batteries run by `ska check`.

#ifndef SKA_CHECKS_H_
#define SKA_CHECKS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ska/equivalence.h"
#include "ska/term.h"

namespace ska {

struct PropertyTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t passed = 0;
  // Description of the first failing instance, if any.
  std::string first_failure;

  bool ok() const { return instances == passed; }
  void record(bool pass, const std::string& what);
};

struct CheckReport {
  std::string suite;
  std::vector<PropertyTally> properties;

  bool ok() const;
  PropertyTally& tally(const std::string& name);
  const PropertyTally* find(const std::string& name) const;
};

struct CheckConfig {
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::size_t bound = 4;
  LetterMask alphabet = 0b111;
  // Largest random term, in AST nodes; 0 picks a per-suite default.
  std::size_t max_size = 0;
  std::size_t pair_cap = kDefaultPairCap;
};

// "axioms", "derivatives", "fundamental", "normalform", "countermodel".
const std::vector<std::string>& check_suites();

// Throws std::invalid_argument on an unknown suite name.
CheckReport run_check(std::string_view suite, const CheckConfig& config);

// One line per property: "PASS name passed/instances" or "FAIL ...".
std::string format_report(const CheckReport& report);

}  // namespace ska

#endif  // SKA_CHECKS_H_
