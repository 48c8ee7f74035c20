// Copyright 2026 The qpbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPBC_RNG_H
#define QPBC_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace qpbc {

using Rng = std::mt19937_64;

/// Derives an independent seed for a named stage from a root seed.
uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t index = 0);

inline Rng stage_rng(uint64_t root, std::string_view label, uint64_t index = 0) {
    return Rng(derive_seed(root, label, index));
}

/// Uniform draw from {0, ..., p-1}.
uint32_t uniform_below(Rng &rng, uint32_t p);

/// Uniform draw from [0, 1).
double uniform_unit(Rng &rng);

}  // namespace qpbc

#endif
