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

#include "pmatch/sdr.hpp"

#include <algorithm>

#include "pmatch/bipartite.hpp"
#include "pmatch/error.hpp"
#include "random.hpp"

namespace pmatch {

SdrResult sdr_solve(const SetSystem& system) {
  std::vector<std::vector<std::uint32_t>> adj;
  adj.reserve(system.sets.size());
  for (const auto& set : system.sets) {
    std::vector<std::uint32_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t x : sorted) {
      if (x >= system.ground_size) {
        throw Error(ErrorKind::kOutOfRange, "element " + std::to_string(x) +
                                                " outside ground set of size " +
                                                std::to_string(system.ground_size));
      }
    }
    adj.push_back(std::move(sorted));
  }
  HopcroftKarp hk(system.ground_size, std::move(adj));
  SdrResult result;
  if (hk.run() == system.sets.size()) {
    result.representatives = hk.mate_of_left();
    return result;
  }
  std::uint32_t root = 0;
  while (hk.mate_of_left()[root] != HopcroftKarp::kFree) ++root;
  // Family indices reachable from an unmatched index by alternating paths
  // have a union consisting only of elements matched back into the set.
  std::vector<char> left_seen, right_seen;
  hk.alternating_reach({root}, left_seen, right_seen);
  std::vector<std::size_t> violator;
  for (std::size_t i = 0; i < left_seen.size(); ++i) {
    if (left_seen[i]) violator.push_back(i);
  }
  result.violator = std::move(violator);
  return result;
}

std::size_t union_size(const SetSystem& system, const std::vector<std::size_t>& indices) {
  std::vector<char> seen(system.ground_size, 0);
  std::size_t count = 0;
  for (std::size_t i : indices) {
    for (std::uint32_t x : system.sets.at(i)) {
      if (x >= system.ground_size)
        throw Error(ErrorKind::kOutOfRange, "element outside ground set");
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
      }
    }
  }
  return count;
}

bool is_sdr(const SetSystem& system, const std::vector<std::uint32_t>& reps) {
  if (reps.size() != system.sets.size()) return false;
  std::vector<std::uint32_t> sorted = reps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& set = system.sets[i];
    if (std::find(set.begin(), set.end(), reps[i]) == set.end()) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> exhaustive_hall_violator(const SetSystem& system) {
  const std::size_t m = system.sets.size();
  if (m > 20) throw Error(ErrorKind::kTooLarge, "exhaustive Hall scan needs m <= 20");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) indices.push_back(i);
    }
    if (union_size(system, indices) < indices.size()) return indices;
  }
  return std::nullopt;
}

SetSystem random_set_system(std::size_t sets, std::size_t ground_size, double p,
                            std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "p must lie in [0, 1]");
  detail::Rng rng(seed);
  SetSystem s;
  s.ground_size = ground_size;
  s.sets.resize(sets);
  for (auto& set : s.sets) {
    for (std::uint32_t x = 0; x < ground_size; ++x) {
      if (rng.chance(p)) set.push_back(x);
    }
  }
  return s;
}

}  // namespace pmatch
