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

#include <optional>
#include <string>

#include "ksctx/coloring.hpp"
#include "ksctx/connection.hpp"
#include "ksctx/ortho_graph.hpp"

namespace ksctx {

struct PipelineOptions {
  bool close = false;
  bool run_ks = false;
  bool run_3c = false;
  bool run_connection = false;
  /// Switches ks/3c to the exhaustive oracles and the connection stage to
  /// the enumeration path (both are size-capped and may throw TooLarge).
  bool brute_force = false;
  std::uint64_t node_budget = 0;
  /// Wall-clock timings make reports differ between identical runs, so they
  /// are opt-in; with the default, reports are byte-stable.
  bool include_timings = false;
};

/// Everything one pipeline run computed. The JSON and text renderings are
/// generated from the same fields and agree on every fact.
struct Report {
  std::string input_name;
  std::size_t dim = 3;
  std::size_t rays_parsed = 0;  // including dropped duplicates
  std::size_t duplicates_dropped = 0;

  bool closure_applied = false;
  std::size_t rays_before_closure = 0;
  std::size_t rays_after_closure = 0;

  OrthoGraph graph;
  GraphStats stats;
  std::optional<ContextPoset> poset;

  std::optional<Verdict<KsColoring>> ks;
  std::optional<Verdict<Labeling>> three_color;
  std::optional<Verdict<Connection>> connection;

  bool include_timings = false;
};

/// Runs closure (optional), graph construction and the requested verdicts.
/// Verdicts never affect success: an unsatisfiable answer is a completed
/// computation. Errors from the stages propagate.
Report run_pipeline(const RaySet& input, const PipelineOptions& opts,
                    const std::string& name = "");

std::string render_report_json(const Report& r);
std::string render_report_text(const Report& r);

}  // namespace ksctx
