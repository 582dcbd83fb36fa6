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

#include "ksctx/corpus.hpp"

#include <algorithm>
#include <cstdlib>

#include "ksctx/errors.hpp"
#include "ksctx/ray_io.hpp"

namespace ksctx {

namespace {

RaySet from_sqmag_list(const std::vector<std::vector<long long>>& triples) {
  RaySet s(3);
  for (const auto& t : triples) s.insert(Ray::from_sqmag(t));
  return s;
}

// The 13 rays of Yu and Oh (Phys. Rev. Lett. 108, 030402, 2012) in
// squared-magnitude notation: coordinate axes, the six axis-diagonal rays
// and the four cube diagonals.
RaySet yu_oh_13() {
  return from_sqmag_list({
      {0, 0, 1}, {0, 1, 0}, {1, 0, 0},
      {0, 1, 1}, {0, -1, 1}, {1, 0, 1}, {-1, 0, 1}, {1, 1, 0}, {-1, 1, 0},
      {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1},
  });
}

// All projectively distinct signed coordinate permutations of one
// squared-magnitude pattern, in a deterministic order.
void add_orbit(RaySet& s, std::vector<long long> pattern) {
  std::sort(pattern.begin(), pattern.end());
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (pattern[i] != 0) nonzero.push_back(i);
    for (std::uint32_t signs = 0; signs < (1u << nonzero.size()); ++signs) {
      std::vector<long long> t = pattern;
      for (std::size_t b = 0; b < nonzero.size(); ++b)
        if (signs >> b & 1) t[nonzero[b]] = -t[nonzero[b]];
      Ray r = Ray::from_sqmag(t);
      if (!s.contains(r)) s.insert(std::move(r));  // orbit overlap is expected,
                                                   // not an input duplicate
    }
  } while (std::next_permutation(pattern.begin(), pattern.end()));
}

// The 33 rays of Peres (J. Phys. A 24, L175, 1991), generated as the
// sign/permutation orbits of the squared-cosine patterns
// 0+0+1, 0+1/2+1/2, 0+1/3+2/3 and 1/4+1/4+1/2.
RaySet peres_33() {
  RaySet s(3);
  for (const auto& pattern : {std::vector<long long>{0, 0, 1},
                              std::vector<long long>{0, 1, 1},
                              std::vector<long long>{0, 1, 2},
                              std::vector<long long>{1, 1, 2}})
    add_orbit(s, pattern);
  if (s.size() != 33)
    throw Error("peres-33 generator produced " + std::to_string(s.size()) + " rays");
  return s;
}

RaySet closed_variant(const RaySet& base, std::size_t expected_size,
                      const std::string& name) {
  RaySet closed = triad_closure(base);
  if (closed.size() != expected_size)
    throw Error(name + " closure has " + std::to_string(closed.size()) +
                " rays, expected " + std::to_string(expected_size));
  return closed;
}

std::optional<CorpusEntry> external_override(const std::string& name) {
  const char* dir = std::getenv("KSCTX_CORPUS_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir) / (name + ".rays");
  if (!std::filesystem::exists(p)) return std::nullopt;
  return CorpusEntry{name, parse_rayfile(p), {}};
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{
      "triad", "two-triads", "yu-oh-13", "yu-oh-25", "peres-33", "peres-57"};
  return names;
}

CorpusEntry corpus_get(const std::string& name) {
  if (auto ext = external_override(name)) return std::move(*ext);

  if (name == "triad")
    return {name, from_sqmag_list({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
            {3, 1, true, true}};
  if (name == "two-triads")  // (x, y, z) plus (1,1,0), (1,-1,0) sharing z
    return {name,
            from_sqmag_list({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {-1, 1, 0}}),
            {5, 2, true, true}};
  if (name == "yu-oh-13")  // closes to 25 rays; KS-colourable, not 3-colourable
    return {name, yu_oh_13(), {25, 4, true, false}};
  if (name == "yu-oh-25")
    return {name, closed_variant(yu_oh_13(), 25, "yu-oh-13"), {25, 16, true, false}};
  if (name == "peres-33")  // closes to 57 rays / 40 triads; admits no KS colouring
    return {name, peres_33(), {57, 16, false, false}};
  if (name == "peres-57")
    return {name, closed_variant(peres_33(), 57, "peres-33"), {57, 40, false, false}};

  throw UnknownCorpus("unknown corpus entry '" + name + "'");
}

}  // namespace ksctx
