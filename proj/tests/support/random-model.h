// Copyright 2026 The acenls Authors.
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

#ifndef ACENLS_TESTS_SUPPORT_RANDOM_MODEL_H_
#define ACENLS_TESTS_SUPPORT_RANDOM_MODEL_H_

#include <cstdint>

#include "acenls/model.h"

namespace acenls::testing {

// Bounds of the randomized corpus. Every generated model is valid.
struct RandomModelBounds {
  int min_enums = 1, max_enums = 10;
  int min_members = 1, max_members = 8;
  int max_constants = 5;
  int max_components = 3;
  int max_ports = 4;
  int max_automata = 2;
  int min_states = 1, max_states = 6;
  int max_transitions = 5;
};

Model RandomModel(std::uint64_t seed, const RandomModelBounds& bounds = {});

}  // namespace acenls::testing

#endif  // ACENLS_TESTS_SUPPORT_RANDOM_MODEL_H_
