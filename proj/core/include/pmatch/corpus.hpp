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

#ifndef PMATCH_CORPUS_HPP_
#define PMATCH_CORPUS_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "pmatch/graph.hpp"

namespace pmatch {

struct NamedGraph {
  std::string id;
  Graph graph;
};

// An indexable list of graphs. Exhaustive ranges are materialized on demand,
// so a corpus of every labeled graph on 7 vertices stays small.
class Corpus {
 public:
  // Every labeled graph on n vertices (n <= 7), ids "n<N>-mask<M>".
  void add_all_graphs(std::size_t n);
  // `count` G(n, p) graphs with seeds seed, seed+1, ...; ids
  // "gnp-n<N>-s<SEED>".
  void add_random(std::size_t count, std::size_t n, double p, std::uint64_t seed);
  void add(std::string id, Graph g);

  std::size_t size() const;
  NamedGraph at(std::size_t index) const;

 private:
  struct Range {
    enum class Kind { kAllGraphs, kRandom, kExplicit } kind;
    std::size_t count;
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t explicit_index = 0;
  };
  std::vector<Range> ranges_;
  std::vector<NamedGraph> explicit_;
};

// Calls fn(i) for i in [0, count) on up to `threads` workers. Each index runs
// exactly once unless fn throws, in which case the first exception is
// rethrown. Callers store results by index for deterministic output.
template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace pmatch

#endif  // PMATCH_CORPUS_HPP_
