// Copyright 2026 The ksctx developers
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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksctx/ray.hpp"

namespace ksctx {

struct GraphStats {
  std::size_t rays = 0;
  std::size_t edges = 0;
  std::size_t triads = 0;
  /// triad-membership count -> number of rays with that count
  std::map<std::size_t, std::size_t> triads_per_ray;
  /// rays with no orthogonal partner; kept and reported, never dropped
  std::vector<int> isolated;
};

/// Orthogonality graph of a RaySet: vertices are rays, edges the exactly
/// orthogonal pairs, and triads the maximal contexts (mutually orthogonal
/// d-subsets; triples in dimension 3, found by testing the third vertex of
/// every edge, d-clique extension otherwise).
class OrthoGraph {
 public:
  explicit OrthoGraph(RaySet rays);

  const RaySet& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  std::size_t dim() const { return rays_.dim(); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Sorted index tuples of size dim(), in lexicographic order.
  const std::vector<std::vector<int>>& triads() const { return triads_; }

  bool adjacent(int i, int j) const { return adjacency_[i][j]; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  /// Indices into triads() of the triads containing ray i.
  const std::vector<int>& triads_of(int i) const { return triads_of_[i]; }
  std::size_t degree(int i) const { return neighbors_[i].size(); }

  GraphStats stats() const;

  /// Graphviz DOT rendering, vertices labelled by canonical key. With
  /// with_triads, each triad's three edges share a per-triad colour.
  std::string to_dot(bool with_triads = false) const;

  /// {"rays": [...], "edges": [[i,j],...], "triads": [[i,j,k],...]}
  std::string to_json() const;

 private:
  RaySet rays_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> triads_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> triads_of_;
};

inline OrthoGraph build_graph(RaySet rays) { return OrthoGraph(std::move(rays)); }

/// The shared-ray table over pairs of maximal contexts. In dimension 3 two
/// distinct triads share at most one ray (two shared rays would force the
/// third by completion); a pair sharing more signals broken arithmetic and
/// raises SharedPairViolation.
struct ContextPoset {
  std::vector<std::array<int, 3>> maximal;
  std::map<std::pair<int, int>, int> shared;  // key (a, b) with a < b

  std::size_t size() const { return maximal.size(); }
  std::optional<int> shared_ray(int a, int b) const;
};

ContextPoset build_poset(const OrthoGraph& g);

}  // namespace ksctx
