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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksctx/ortho_graph.hpp"

namespace ksctx {

enum class Status { sat, unsat, inconclusive };

std::string to_string(Status s);

/// {0,1} valuation on rays: exactly one 1 per triad, and no two orthogonal
/// rays both 1 (enforced on every edge, also edges lying in no triad).
struct KsColoring {
  std::vector<std::int8_t> values;  // 0 or 1; -1 marks unassigned
};

/// {X,Y,Z} labelling: orthogonal rays get distinct labels, so every triad
/// carries all three.
struct Labeling {
  static constexpr std::int8_t kX = 0, kY = 1, kZ = 2;
  std::vector<std::int8_t> labels;  // 0..2; -1 marks unassigned
};

char label_char(std::int8_t label);

template <typename Witness>
struct Verdict {
  Status status = Status::inconclusive;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;

  bool satisfiable() const { return status == Status::sat; }
};

struct SolveOptions {
  /// 0 = no limit. When the budget is hit the verdict is inconclusive,
  /// never a guessed answer.
  std::uint64_t node_budget = 0;
};

/// Complete backtracking search for a KS colouring. Variables in
/// degree-descending order (ties by canonical key), value order 1 before 0,
/// with unit propagation: a 1 forces its neighbours to 0, a triad with two
/// 0s forces the third ray to 1. Returned witnesses are re-verified.
Verdict<KsColoring> ks_colorable(const OrthoGraph& g, const SolveOptions& opts = {});

/// Complete proper-3-colouring search with propagation; the first triad in
/// canonical order is pinned to (X, Y, Z) since colourability is invariant
/// under label permutation. Value order X < Y < Z.
Verdict<Labeling> three_colorable(const OrthoGraph& g, const SolveOptions& opts = {});

/// Exhaustive 2^n oracle (TooLarge above max_rays). Assignments are scanned
/// in a fixed order, so the witness is deterministic; valid_count, when
/// given, receives the number of valid assignments.
Verdict<KsColoring> brute_force_ks(const OrthoGraph& g, std::size_t max_rays = 20,
                                   std::uint64_t* valid_count = nullptr);

/// Exhaustive 3^n oracle (TooLarge above max_rays).
Verdict<Labeling> brute_force_3c(const OrthoGraph& g, std::size_t max_rays = 13,
                                 std::uint64_t* valid_count = nullptr);

/// True iff the assignment satisfies all KsColoring invariants on g.
/// Throws PartialAssignment unless the assignment is total.
bool check_witness(const OrthoGraph& g, const KsColoring& w);

/// True iff the assignment is a proper 3-colouring of g.
bool check_witness(const OrthoGraph& g, const Labeling& w);

/// {"problem": ..., "satisfiable": bool|null, "witness": {canonical_key:
/// value}|null, "nodes": n, "ms": m}
std::string verdict_to_json(const Verdict<KsColoring>& v, const OrthoGraph& g,
                            bool include_ms = true);
std::string verdict_to_json(const Verdict<Labeling>& v, const OrthoGraph& g,
                            bool include_ms = true);

}  // namespace ksctx
