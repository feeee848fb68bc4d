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

#ifndef PMATCH_SRC_SOLVER_INTERNAL_HPP_
#define PMATCH_SRC_SOLVER_INTERNAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pmatch/blossom.hpp"
#include "pmatch/error.hpp"
#include "pmatch/graph.hpp"

namespace pmatch::detail {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

  void tick() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "node budget of " + std::to_string(budget_) + " exceeded");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// Matching number of the graph on vertices 0..n-1 with the given edges.
inline std::size_t matching_number(std::size_t n, std::span<const Edge> edges) {
  if (edges.empty()) return 0;
  BlossomMatcher matcher(n, edges);
  matcher.greedy_init();
  return matcher.maximize();
}

}  // namespace pmatch::detail

#endif  // PMATCH_SRC_SOLVER_INTERNAL_HPP_
