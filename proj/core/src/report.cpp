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

#include "ksctx/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ksctx {

Report run_pipeline(const RaySet& input, const PipelineOptions& opts,
                    const std::string& name) {
  std::size_t before = input.size();
  RaySet working = opts.close ? triad_closure(input) : input;

  Report r{.input_name = name,
           .dim = input.dim(),
           .rays_parsed = before + input.duplicates_dropped(),
           .duplicates_dropped = input.duplicates_dropped(),
           .closure_applied = opts.close,
           .rays_before_closure = before,
           .rays_after_closure = working.size(),
           .graph = OrthoGraph(std::move(working)),
           .stats = {},
           .poset = {},
           .ks = {},
           .three_color = {},
           .connection = {},
           .include_timings = opts.include_timings};
  r.stats = r.graph.stats();

  SolveOptions solve{opts.node_budget};
  if (opts.run_ks)
    r.ks = opts.brute_force ? brute_force_ks(r.graph) : ks_colorable(r.graph, solve);
  if (opts.run_3c)
    r.three_color =
        opts.brute_force ? brute_force_3c(r.graph) : three_colorable(r.graph, solve);
  if (opts.run_connection) {
    r.poset = build_poset(r.graph);
    r.connection = opts.brute_force
                       ? brute_force_connections(*r.poset, r.graph)
                       : connection_search(*r.poset, r.graph, solve);
  }
  return r;
}

namespace {

nlohmann::json verdict_fields(Status status, std::uint64_t nodes, double ms,
                              bool include_ms) {
  nlohmann::json j;
  if (status == Status::inconclusive)
    j["satisfiable"] = nullptr;
  else
    j["satisfiable"] = status == Status::sat;
  j["nodes"] = nodes;
  if (include_ms) j["ms"] = std::llround(ms);
  return j;
}

}  // namespace

std::string render_report_json(const Report& r) {
  nlohmann::json j;
  j["input"] = {{"name", r.input_name},
                {"dim", r.dim},
                {"rays_parsed", r.rays_parsed},
                {"duplicates_dropped", r.duplicates_dropped}};
  if (r.closure_applied)
    j["closure"] = {{"rays_before", r.rays_before_closure},
                    {"rays_added", r.rays_after_closure - r.rays_before_closure},
                    {"rays_after", r.rays_after_closure}};
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, v] : r.stats.triads_per_ray) hist[std::to_string(k)] = v;
  j["graph"] = {{"rays", r.stats.rays},
                {"edges", r.stats.edges},
                {"triads", r.stats.triads},
                {"isolated_rays", r.stats.isolated},
                {"triads_per_ray", hist}};

  nlohmann::json verdicts = nlohmann::json::object();
  if (r.ks) {
    nlohmann::json v = verdict_fields(r.ks->status, r.ks->nodes_explored,
                                      r.ks->elapsed_ms, r.include_timings);
    v["problem"] = "ks";
    v["witness"] = nullptr;
    if (r.ks->witness) {
      nlohmann::json w = nlohmann::json::object();
      for (std::size_t i = 0; i < r.graph.size(); ++i)
        w[r.graph.rays()[i].canonical_key()] = static_cast<int>(r.ks->witness->values[i]);
      v["witness"] = std::move(w);
    }
    verdicts["ks"] = std::move(v);
  }
  if (r.three_color) {
    nlohmann::json v =
        verdict_fields(r.three_color->status, r.three_color->nodes_explored,
                       r.three_color->elapsed_ms, r.include_timings);
    v["problem"] = "3c";
    v["witness"] = nullptr;
    if (r.three_color->witness) {
      nlohmann::json w = nlohmann::json::object();
      for (std::size_t i = 0; i < r.graph.size(); ++i)
        w[r.graph.rays()[i].canonical_key()] =
            std::string(1, label_char(r.three_color->witness->labels[i]));
      v["witness"] = std::move(w);
    }
    verdicts["3c"] = std::move(v);
  }
  if (r.connection) {
    nlohmann::json v =
        verdict_fields(r.connection->status, r.connection->nodes_explored,
                       r.connection->elapsed_ms, r.include_timings);
    v["problem"] = "connection";
    v["witness"] = nullptr;
    if (r.connection->witness && r.poset)
      v["witness"] =
          nlohmann::json::parse(connection_to_json(*r.connection->witness, *r.poset));
    verdicts["connection"] = std::move(v);
  }
  j["verdicts"] = std::move(verdicts);
  return j.dump(2) + "\n";
}

namespace {

void render_verdict_line(std::ostringstream& out, const std::string& problem,
                         Status status, std::uint64_t nodes, double ms,
                         bool include_ms) {
  out << "  " << problem << ": " << to_string(status) << " (" << nodes << " nodes";
  if (include_ms) out << ", " << std::llround(ms) << " ms";
  out << ")\n";
}

}  // namespace

std::string render_report_text(const Report& r) {
  std::ostringstream out;
  out << "input: " << (r.input_name.empty() ? "<unnamed>" : r.input_name)
      << " (dim " << r.dim << ", " << r.rays_parsed << " rays parsed, "
      << r.duplicates_dropped << " duplicates dropped)\n";
  if (r.closure_applied)
    out << "closure: " << r.rays_before_closure << " -> " << r.rays_after_closure
        << " rays (+" << r.rays_after_closure - r.rays_before_closure << ")\n";
  out << "graph: " << r.stats.rays << " rays, " << r.stats.edges << " edges, "
      << r.stats.triads << " triads, " << r.stats.isolated.size()
      << " isolated\n";
  out << "triads per ray:";
  for (const auto& [k, v] : r.stats.triads_per_ray)
    out << " " << k << "x" << v;
  out << "\n";
  if (r.ks) {
    render_verdict_line(out, "ks", r.ks->status, r.ks->nodes_explored,
                        r.ks->elapsed_ms, r.include_timings);
    if (r.ks->witness) {
      out << "    witness:";
      for (std::size_t i = 0; i < r.graph.size(); ++i)
        if (r.ks->witness->values[i] == 1)
          out << " [" << r.graph.rays()[i].canonical_key() << "]=1";
      out << " (all other rays 0)\n";
    }
  }
  if (r.three_color) {
    render_verdict_line(out, "3c", r.three_color->status,
                        r.three_color->nodes_explored, r.three_color->elapsed_ms,
                        r.include_timings);
    if (r.three_color->witness) {
      out << "    witness:";
      for (std::size_t i = 0; i < r.graph.size(); ++i)
        out << " [" << r.graph.rays()[i].canonical_key()
            << "]=" << label_char(r.three_color->witness->labels[i]);
      out << "\n";
    }
  }
  if (r.connection) {
    render_verdict_line(out, "connection", r.connection->status,
                        r.connection->nodes_explored, r.connection->elapsed_ms,
                        r.include_timings);
    if (r.connection->witness && r.poset) {
      const auto& conn = *r.connection->witness;
      const auto& poset = *r.poset;
      for (int a = 0; a < static_cast<int>(poset.size()); ++a)
        for (int b = a + 1; b < static_cast<int>(poset.size()); ++b) {
          if (!conn.has(a, b)) continue;
          TriadPerm p = conn.map(a, b);
          out << "    pair " << a << "-" << b << ": slots " << int(p[0]) << " "
              << int(p[1]) << " " << int(p[2]) << "\n";
        }
    }
  }
  return out.str();
}

}  // namespace ksctx
