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

#include "pmatch/corpus.hpp"

#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"

namespace pmatch {

void Corpus::add_all_graphs(std::size_t n) {
  if (n > 7) throw Error(ErrorKind::kTooLarge, "exhaustive corpora need n <= 7");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  Range r{Range::Kind::kAllGraphs, std::size_t{1} << pairs};
  r.n = n;
  ranges_.push_back(r);
}

void Corpus::add_random(std::size_t count, std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "p must lie in [0, 1]");
  Range r{Range::Kind::kRandom, count};
  r.n = n;
  r.p = p;
  r.seed = seed;
  ranges_.push_back(r);
}

void Corpus::add(std::string id, Graph g) {
  Range r{Range::Kind::kExplicit, 1};
  r.explicit_index = explicit_.size();
  explicit_.push_back({std::move(id), std::move(g)});
  ranges_.push_back(r);
}

std::size_t Corpus::size() const {
  std::size_t total = 0;
  for (const Range& r : ranges_) total += r.count;
  return total;
}

NamedGraph Corpus::at(std::size_t index) const {
  for (const Range& r : ranges_) {
    if (index >= r.count) {
      index -= r.count;
      continue;
    }
    switch (r.kind) {
      case Range::Kind::kAllGraphs:
        return {"n" + std::to_string(r.n) + "-mask" + std::to_string(index),
                graph_from_edge_mask(r.n, index)};
      case Range::Kind::kRandom: {
        const std::uint64_t seed = r.seed + index;
        return {"gnp-n" + std::to_string(r.n) + "-s" + std::to_string(seed),
                random_gnp(r.n, r.p, seed)};
      }
      case Range::Kind::kExplicit:
        return explicit_[r.explicit_index];
    }
  }
  throw Error(ErrorKind::kOutOfRange, "corpus index out of range");
}

}  // namespace pmatch
