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

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksctx/coloring.hpp"
#include "ksctx/connection.hpp"
#include "ksctx/corpus.hpp"
#include "ksctx/errors.hpp"
#include "ksctx/ortho_graph.hpp"
#include "ksctx/ray_io.hpp"
#include "ksctx/report.hpp"

namespace {

using namespace ksctx;

struct InputOpts {
  std::string input_file;
  std::string corpus_name;
  bool close = false;
};

void add_input_options(CLI::App* cmd, InputOpts& in, bool with_close = true) {
  auto* f = cmd->add_option("--input", in.input_file, "ray file to analyse");
  auto* c = cmd->add_option("--corpus", in.corpus_name, "built-in ray set name");
  f->excludes(c);
  if (with_close)
    cmd->add_flag("--close", in.close, "apply triad closure before analysing");
}

RaySet load_input(const InputOpts& in, std::string* name) {
  if (!in.input_file.empty()) {
    *name = in.input_file;
    return parse_rayfile(in.input_file);
  }
  if (!in.corpus_name.empty()) {
    *name = in.corpus_name;
    return corpus_get(in.corpus_name).rays;
  }
  throw Error("no input: pass --input FILE or --corpus NAME");
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

int find_ray_by_key(const OrthoGraph& g, const std::string& key) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.rays()[i].canonical_key() == key) return static_cast<int>(i);
  return -1;
}

void cmd_corpus(const std::string& name, bool json) {
  auto describe = [&](const CorpusEntry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["rays"] = e.rays.size();
    if (e.expected.closure_size) j["closure_size"] = *e.expected.closure_size;
    if (e.expected.triad_count) j["triads"] = *e.expected.triad_count;
    if (e.expected.ks_satisfiable) j["ks_colorable"] = *e.expected.ks_satisfiable;
    if (e.expected.three_color_satisfiable)
      j["three_colorable"] = *e.expected.three_color_satisfiable;
    return j;
  };
  if (!name.empty()) {
    CorpusEntry e = corpus_get(name);
    if (json) {
      nlohmann::json j = describe(e);
      j["ray_keys"] = nlohmann::json::array();
      for (const Ray& r : e.rays) j["ray_keys"].push_back(r.canonical_key());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.name << ": " << e.rays.size() << " rays\n";
      std::cout << to_rayfile(e.rays);
    }
    return;
  }
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const std::string& n : corpus_names()) j.push_back(describe(corpus_get(n)));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& n : corpus_names()) {
      CorpusEntry e = corpus_get(n);
      std::cout << n << ": " << e.rays.size() << " rays";
      if (e.expected.closure_size) std::cout << ", closure " << *e.expected.closure_size;
      if (e.expected.ks_satisfiable)
        std::cout << ", ks " << (*e.expected.ks_satisfiable ? "sat" : "unsat");
      if (e.expected.three_color_satisfiable)
        std::cout << ", 3c "
                  << (*e.expected.three_color_satisfiable ? "sat" : "unsat");
      std::cout << "\n";
    }
  }
}

void verify_connection_witness(const ContextPoset& poset, const nlohmann::json& w) {
  Connection conn(poset.size());
  auto triad_index = [&](const std::vector<int>& rays) {
    std::array<int, 3> key{rays[0], rays[1], rays[2]};
    for (std::size_t t = 0; t < poset.size(); ++t)
      if (poset.maximal[t] == key) return static_cast<int>(t);
    throw Error("witness references a triad not present in the poset");
  };
  for (const auto& entry : w.at("pairs")) {
    int a = triad_index(entry.at("from").get<std::vector<int>>());
    int b = triad_index(entry.at("to").get<std::vector<int>>());
    auto m = entry.at("map").get<std::vector<std::uint8_t>>();
    conn.set(a, b, TriadPerm{m.at(0), m.at(1), m.at(2)});
  }

  bool total = conn.total();
  bool shared_ok = conn.fixes_shared_rays(poset);
  std::cout << "pairs total: " << (total ? "yes" : "no") << "\n";
  std::cout << "shared rays fixed: " << (shared_ok ? "yes" : "no") << "\n";
  if (!total) return;
  CocycleResult cc = cocycle_check(conn, poset);
  std::cout << "cocycle condition: " << (cc.ok ? "holds" : "violated") << "\n";
  if (!cc.ok) {
    auto [a, b, c] = *cc.violating;
    std::cout << "  violating triple: (" << a << ", " << b << ", " << c << ")\n";
    return;
  }
  if (poset.size() < 2) {
    std::cout << "holonomy: no cycles exist (fewer than two contexts)\n";
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::size_t trivial = 0;
  const std::size_t samples = 1000;
  for (std::size_t i = 0; i < samples; ++i) {
    HolonomyResult h = verify_holonomy(conn, random_cycle(poset.size(), 8, rng));
    if (h.trivial)
      ++trivial;
    else
      std::cout << "  nontrivial cycle, residual " << perm_cycle_notation(h.composite)
                << "\n";
  }
  std::cout << "holonomy: " << trivial << "/" << samples
            << " sampled cycles trivial\n";
}

void cmd_verify(const InputOpts& in, const std::string& witness_path) {
  std::string name;
  RaySet set = load_input(in, &name);
  if (in.close) set = triad_closure(set);
  OrthoGraph g = build_graph(std::move(set));

  std::ifstream wf(witness_path);
  if (!wf) throw Error("cannot open witness file: " + witness_path);
  nlohmann::json j = nlohmann::json::parse(wf);

  std::string problem = j.at("problem").get<std::string>();
  if (j.at("witness").is_null()) throw Error("witness file has no witness payload");

  if (problem == "ks" || problem == "3c") {
    const auto& w = j.at("witness");
    bool ok = false;
    if (problem == "ks") {
      KsColoring coloring;
      coloring.values.assign(g.size(), -1);
      for (const auto& [key, val] : w.items()) {
        int idx = find_ray_by_key(g, key);
        if (idx < 0) throw Error("witness key not in ray set: " + key);
        coloring.values[idx] = static_cast<std::int8_t>(val.get<int>());
      }
      ok = check_witness(g, coloring);
    } else {
      Labeling lab;
      lab.labels.assign(g.size(), -1);
      for (const auto& [key, val] : w.items()) {
        int idx = find_ray_by_key(g, key);
        if (idx < 0) throw Error("witness key not in ray set: " + key);
        std::string s = val.get<std::string>();
        lab.labels[idx] = static_cast<std::int8_t>(
            s == "X" ? Labeling::kX : s == "Y" ? Labeling::kY : Labeling::kZ);
      }
      ok = check_witness(g, lab);
    }
    std::cout << problem << " witness: " << (ok ? "valid" : "INVALID") << "\n";
    return;
  }
  if (problem == "connection") {
    ContextPoset poset = build_poset(g);
    verify_connection_witness(poset, j.at("witness"));
    return;
  }
  throw Error("unknown problem kind in witness file: " + problem);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact decision procedures for Kochen-Specker contextuality of finite "
      "ray sets"};
  app.set_version_flag("--version", "ksctx 0.1.0");
  app.require_subcommand(1);

  // info -------------------------------------------------------------
  InputOpts info_in;
  PipelineOptions info_opts;
  bool info_json = false;
  std::string info_dot;
  auto* info = app.add_subcommand(
      "info", "run the analysis pipeline and print a report");
  add_input_options(info, info_in);
  info->add_flag("--ks", info_opts.run_ks, "decide KS colourability");
  info->add_flag("--3c,--three-color", info_opts.run_3c,
                 "decide proper 3-colourability");
  info->add_flag("--connect", info_opts.run_connection,
                 "search for a trivial context connection");
  info->add_flag("--brute-force", info_opts.brute_force,
                 "use the exhaustive engines (size-capped)");
  info->add_option("--budget", info_opts.node_budget,
                   "node budget; exceeding it yields an inconclusive verdict");
  info->add_flag("--timings", info_opts.include_timings,
                 "include wall-clock timings (reports stop being byte-stable)");
  info->add_flag("--json", info_json, "machine-readable report");
  info->add_option("--dot", info_dot, "also write the graph in DOT format");

  // close ------------------------------------------------------------
  InputOpts close_in;
  std::string close_out;
  bool close_json = false;
  auto* close =
      app.add_subcommand("close", "compute the triad closure of the input");
  add_input_options(close, close_in, /*with_close=*/false);
  close->add_option("--out", close_out, "write the closed set to a ray file");
  close->add_flag("--json", close_json, "print a JSON summary");

  // graph ------------------------------------------------------------
  InputOpts graph_in;
  bool graph_json = false;
  bool graph_triads = false;
  std::string graph_dot;
  auto* graph = app.add_subcommand("graph", "orthogonality graph and statistics");
  add_input_options(graph, graph_in);
  graph->add_flag("--json", graph_json, "print the graph as JSON");
  graph->add_option("--dot", graph_dot, "write DOT output to this file ('-' = stdout)");
  graph->add_flag("--triads", graph_triads, "style triad edges in the DOT output");

  // ks-color / three-color -------------------------------------------
  InputOpts ks_in;
  bool ks_json = false, ks_brute = false;
  std::uint64_t ks_budget = 0;
  auto* ks = app.add_subcommand("ks-color", "decide KS colourability");
  add_input_options(ks, ks_in);
  ks->add_flag("--json", ks_json, "print the verdict as JSON");
  ks->add_flag("--brute-force", ks_brute, "exhaustive 2^n oracle (<= 20 rays)");
  ks->add_option("--budget", ks_budget, "node budget (0 = none)");

  InputOpts c3_in;
  bool c3_json = false, c3_brute = false;
  std::uint64_t c3_budget = 0;
  auto* c3 = app.add_subcommand("three-color", "decide proper 3-colourability");
  add_input_options(c3, c3_in);
  c3->add_flag("--json", c3_json, "print the verdict as JSON");
  c3->add_flag("--brute-force", c3_brute, "exhaustive 3^n oracle (<= 13 rays)");
  c3->add_option("--budget", c3_budget, "node budget (0 = none)");

  // connect ----------------------------------------------------------
  InputOpts conn_in;
  bool conn_json = false, conn_brute = false;
  std::uint64_t conn_budget = 0;
  auto* conn = app.add_subcommand(
      "connect", "decide existence of a context connection with trivial holonomy");
  add_input_options(conn, conn_in);
  conn->add_flag("--json", conn_json, "print the verdict as JSON");
  conn->add_flag("--brute-force", conn_brute,
                 "enumerate per-pair bijections (<= 6 triads)");
  conn->add_option("--budget", conn_budget, "node budget (0 = none)");

  // verify -----------------------------------------------------------
  InputOpts verify_in;
  std::string witness_path;
  auto* verify =
      app.add_subcommand("verify", "check a witness JSON file against a ray set");
  add_input_options(verify, verify_in);
  verify->add_option("--witness", witness_path, "witness JSON produced with --json")
      ->required();

  // export -----------------------------------------------------------
  InputOpts export_in;
  std::string export_out, export_format = "rays";
  bool export_triads = false;
  auto* exp = app.add_subcommand("export", "write the set in rays/json/dot form");
  add_input_options(exp, export_in);
  exp->add_option("--out", export_out, "output file ('-' = stdout)");
  exp->add_option("--format", export_format, "rays | json | dot")
      ->check(CLI::IsMember({"rays", "json", "dot"}));
  exp->add_flag("--triads", export_triads, "style triad edges in DOT output");

  // corpus -----------------------------------------------------------
  std::string corpus_name;
  bool corpus_json = false;
  auto* corpus =
      app.add_subcommand("corpus", "list built-in ray sets and expected results");
  corpus->add_option("name", corpus_name, "show one entry in full");
  corpus->add_flag("--json", corpus_json, "machine-readable listing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) {
      std::string name;
      RaySet set = load_input(info_in, &name);
      info_opts.close = info_in.close;
      Report r = run_pipeline(set, info_opts, name);
      std::cout << (info_json ? render_report_json(r) : render_report_text(r));
      if (!info_dot.empty()) write_or_print(info_dot, r.graph.to_dot(true));
    } else if (*close) {
      std::string name;
      RaySet set = load_input(close_in, &name);
      RaySet closed = triad_closure(set);
      if (close_json) {
        nlohmann::json j = {{"rays_before", set.size()},
                            {"rays_added", closed.size() - set.size()},
                            {"rays_after", closed.size()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << name << ": " << set.size() << " -> " << closed.size()
                  << " rays under triad closure\n";
      }
      if (!close_out.empty()) write_or_print(close_out, to_rayfile(closed));
    } else if (*graph) {
      std::string name;
      RaySet set = load_input(graph_in, &name);
      if (graph_in.close) set = triad_closure(set);
      OrthoGraph g = build_graph(std::move(set));
      if (!graph_dot.empty()) {
        write_or_print(graph_dot, g.to_dot(graph_triads));
      } else if (graph_json) {
        std::cout << g.to_json();
      } else {
        GraphStats s = g.stats();
        std::cout << name << ": " << s.rays << " rays, " << s.edges << " edges, "
                  << s.triads << " triads, " << s.isolated.size() << " isolated\n";
        std::cout << "triads per ray:";
        for (const auto& [k, v] : s.triads_per_ray) std::cout << " " << k << "x" << v;
        std::cout << "\n";
      }
    } else if (*ks) {
      std::string name;
      RaySet set = load_input(ks_in, &name);
      if (ks_in.close) set = triad_closure(set);
      OrthoGraph g = build_graph(std::move(set));
      Verdict<KsColoring> v =
          ks_brute ? brute_force_ks(g) : ks_colorable(g, {ks_budget});
      if (ks_json)
        std::cout << verdict_to_json(v, g);
      else
        std::cout << "ks: " << to_string(v.status) << " (" << v.nodes_explored
                  << " nodes)\n";
    } else if (*c3) {
      std::string name;
      RaySet set = load_input(c3_in, &name);
      if (c3_in.close) set = triad_closure(set);
      OrthoGraph g = build_graph(std::move(set));
      Verdict<Labeling> v =
          c3_brute ? brute_force_3c(g) : three_colorable(g, {c3_budget});
      if (c3_json)
        std::cout << verdict_to_json(v, g);
      else
        std::cout << "3c: " << to_string(v.status) << " (" << v.nodes_explored
                  << " nodes)\n";
    } else if (*conn) {
      std::string name;
      RaySet set = load_input(conn_in, &name);
      if (conn_in.close) set = triad_closure(set);
      OrthoGraph g = build_graph(std::move(set));
      ContextPoset poset = build_poset(g);
      std::uint64_t count = 0;
      Verdict<Connection> v = conn_brute
                                  ? brute_force_connections(poset, g, 6, &count)
                                  : connection_search(poset, g, {conn_budget});
      if (conn_json) {
        nlohmann::json j;
        j["problem"] = "connection";
        if (v.status == Status::inconclusive)
          j["satisfiable"] = nullptr;
        else
          j["satisfiable"] = v.status == Status::sat;
        j["witness"] = nullptr;
        if (v.witness)
          j["witness"] = nlohmann::json::parse(connection_to_json(*v.witness, poset));
        j["nodes"] = v.nodes_explored;
        j["ms"] = std::llround(v.elapsed_ms);
        if (conn_brute) j["connections_counted"] = count;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "connection: " << to_string(v.status) << " ("
                  << v.nodes_explored << " nodes)";
        if (conn_brute) std::cout << ", " << count << " connections";
        std::cout << "\n";
      }
    } else if (*verify) {
      cmd_verify(verify_in, witness_path);
    } else if (*exp) {
      std::string name;
      RaySet set = load_input(export_in, &name);
      if (export_in.close) set = triad_closure(set);
      if (export_format == "rays") {
        write_or_print(export_out, to_rayfile(set));
      } else {
        OrthoGraph g = build_graph(std::move(set));
        write_or_print(export_out, export_format == "json"
                                       ? g.to_json()
                                       : g.to_dot(export_triads));
      }
    } else if (*corpus) {
      cmd_corpus(corpus_name, corpus_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
