// Copyright 2026 The pmatch Authors
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

#ifndef PMATCH_SDR_HPP_
#define PMATCH_SDR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pmatch {

// Family (A_1, ..., A_m) of subsets of the ground set {0, ..., ground_size-1}.
struct SetSystem {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::uint32_t>> sets;
};

// Exactly one of the two members is set.
struct SdrResult {
  std::optional<std::vector<std::uint32_t>> representatives;  // a_i in A_i, distinct
  std::optional<std::vector<std::size_t>> violator;           // family indices S, |U A_i| < |S|
};

// Throws Error(kOutOfRange) on elements outside the ground set.
SdrResult sdr_solve(const SetSystem& system);

// |U_{i in S} A_i| for the given family indices.
std::size_t union_size(const SetSystem& system, const std::vector<std::size_t>& indices);

// True iff `reps` is a system of distinct representatives.
bool is_sdr(const SetSystem& system, const std::vector<std::uint32_t>& reps);

// Scans all 2^m index sets; returns the first violator found in mask order.
// Throws Error(kTooLarge) for m > 20.
std::optional<std::vector<std::size_t>> exhaustive_hall_violator(const SetSystem& system);

// Each element of each set is present independently with probability p.
SetSystem random_set_system(std::size_t sets, std::size_t ground_size, double p,
                            std::uint64_t seed);

}  // namespace pmatch

#endif  // PMATCH_SDR_HPP_
