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

#include "ksctx/ortho_graph.hpp"

#include <algorithm>

#include <json.hpp>

#include "ksctx/errors.hpp"

namespace ksctx {

namespace {

// enumerate maximal mutually-orthogonal d-subsets by clique extension;
// only used for dim > 3
void extend_clique(const OrthoGraph& g, std::vector<int>& clique, int from,
                   std::size_t target, std::vector<std::vector<int>>& out) {
  if (clique.size() == target) {
    out.push_back(clique);
    return;
  }
  for (int k = from; k < static_cast<int>(g.size()); ++k) {
    bool ok = true;
    for (int v : clique)
      if (!g.adjacent(v, k)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    clique.push_back(k);
    extend_clique(g, clique, k + 1, target, out);
    clique.pop_back();
  }
}

}  // namespace

OrthoGraph::OrthoGraph(RaySet rays) : rays_(std::move(rays)) {
  const int n = static_cast<int>(rays_.size());
  adjacency_.assign(n, std::vector<bool>(n, false));
  neighbors_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!dot(rays_[i], rays_[j]).is_zero()) continue;
      edges_.emplace_back(i, j);
      adjacency_[i][j] = adjacency_[j][i] = true;
      neighbors_[i].push_back(j);
      neighbors_[j].push_back(i);
    }
  }

  if (rays_.dim() == 3) {
    // each triad is discovered exactly once at its lexicographically
    // smallest edge, so the list comes out in lexicographic order
    for (const auto& [i, j] : edges_) {
      for (int k = j + 1; k < n; ++k)
        if (adjacency_[i][k] && adjacency_[j][k])
          triads_.push_back({i, j, k});
    }
    std::sort(triads_.begin(), triads_.end());
  } else {
    std::vector<int> clique;
    extend_clique(*this, clique, 0, rays_.dim(), triads_);
  }

  triads_of_.assign(n, {});
  for (int t = 0; t < static_cast<int>(triads_.size()); ++t)
    for (int v : triads_[t]) triads_of_[v].push_back(t);
}

GraphStats OrthoGraph::stats() const {
  GraphStats s;
  s.rays = rays_.size();
  s.edges = edges_.size();
  s.triads = triads_.size();
  for (int i = 0; i < static_cast<int>(rays_.size()); ++i) {
    ++s.triads_per_ray[triads_of_[i].size()];
    if (neighbors_[i].empty()) s.isolated.push_back(i);
  }
  return s;
}

std::string OrthoGraph::to_dot(bool with_triads) const {
  static const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                   "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  std::string out = "graph orthogonality {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < rays_.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + rays_[i].canonical_key() + "\"];\n";

  std::vector<int> triad_of_edge(edges_.size(), -1);
  if (with_triads) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [i, j] = edges_[e];
      for (int t : triads_of_[i])
        if (std::find(triads_[t].begin(), triads_[t].end(), j) != triads_[t].end()) {
          triad_of_edge[e] = t;
          break;
        }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [i, j] = edges_[e];
    out += "  v" + std::to_string(i) + " -- v" + std::to_string(j);
    if (triad_of_edge[e] >= 0)
      out += " [color=\"" + std::string(kPalette[triad_of_edge[e] % 8]) +
             "\", penwidth=2]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string OrthoGraph::to_json() const {
  nlohmann::json j;
  j["rays"] = nlohmann::json::array();
  for (const Ray& r : rays_) j["rays"].push_back(r.canonical_key());
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) j["edges"].push_back({a, b});
  j["triads"] = triads_;
  return j.dump(2) + "\n";
}

std::optional<int> ContextPoset::shared_ray(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = shared.find({a, b});
  if (it == shared.end()) return std::nullopt;
  return it->second;
}

ContextPoset build_poset(const OrthoGraph& g) {
  if (g.dim() != 3)
    throw NotSupported("build_poset: context poset requires dimension 3");
  ContextPoset poset;
  for (const auto& t : g.triads()) poset.maximal.push_back({t[0], t[1], t[2]});
  const int m = static_cast<int>(poset.maximal.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      std::vector<int> common;
      std::set_intersection(poset.maximal[a].begin(), poset.maximal[a].end(),
                            poset.maximal[b].begin(), poset.maximal[b].end(),
                            std::back_inserter(common));
      if (common.size() >= 2)
        throw SharedPairViolation("triads " + std::to_string(a) + " and " +
                                  std::to_string(b) + " share " +
                                  std::to_string(common.size()) + " rays");
      if (common.size() == 1) poset.shared.emplace(std::make_pair(a, b), common[0]);
    }
  }
  return poset;
}

}  // namespace ksctx
