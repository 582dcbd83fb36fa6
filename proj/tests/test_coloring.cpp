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

#include <random>

#include <doctest.h>

#include "ksctx/coloring.hpp"
#include "ksctx/corpus.hpp"
#include "ksctx/errors.hpp"

using namespace ksctx;

namespace {

OrthoGraph corpus_graph(const std::string& name) {
  return build_graph(corpus_get(name).rays);
}

int ray_index(const OrthoGraph& g, const std::string& key) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.rays()[i].canonical_key() == key) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("single triad") {
  OrthoGraph g = corpus_graph("triad");

  std::uint64_t ks_count = 0;
  Verdict<KsColoring> kb = brute_force_ks(g, 20, &ks_count);
  CHECK(kb.status == Status::sat);
  CHECK(ks_count == 3);  // one 1 in each of three slots
  CHECK(check_witness(g, *kb.witness));

  std::uint64_t c3_count = 0;
  Verdict<Labeling> cb = brute_force_3c(g, 13, &c3_count);
  CHECK(cb.status == Status::sat);
  CHECK(c3_count == 6);  // 3! label permutations
  CHECK(check_witness(g, *cb.witness));

  CHECK(ks_colorable(g).status == Status::sat);
  CHECK(three_colorable(g).status == Status::sat);
}

TEST_CASE("unconstrained rays") {
  // three mutually non-orthogonal rays: no constraints at all
  RaySet s(3);
  s.insert(Ray::from_sqmag({1, 1, 1}));
  s.insert(Ray::from_sqmag({1, 4, 9}));
  s.insert(Ray::from_sqmag({4, 1, 1}));
  OrthoGraph g = build_graph(std::move(s));
  REQUIRE(g.edges().empty());

  std::uint64_t count = 0;
  CHECK(brute_force_ks(g, 20, &count).status == Status::sat);
  CHECK(count == 8);
  CHECK(brute_force_3c(g, 13, &count).status == Status::sat);
  CHECK(count == 27);
}

TEST_CASE("a pair of orthogonal rays") {
  RaySet s(3);
  s.insert(Ray::from_sqmag({1, 0, 0}));
  s.insert(Ray::from_sqmag({0, 1, 0}));
  OrthoGraph g = build_graph(std::move(s));
  std::uint64_t count = 0;
  Verdict<Labeling> v = brute_force_3c(g, 13, &count);
  CHECK(v.status == Status::sat);
  CHECK(count == 6);  // 3 * 2 of the 9 total assignments
}

TEST_CASE("two triads sharing a ray") {
  OrthoGraph g = corpus_graph("two-triads");
  std::uint64_t ks_count = 0, c3_count = 0;
  CHECK(brute_force_ks(g, 20, &ks_count).status == Status::sat);
  CHECK(brute_force_3c(g, 13, &c3_count).status == Status::sat);
  CHECK(ks_count == 5);
  CHECK(c3_count == 12);
  CHECK(ks_colorable(g).status == Status::sat);
  CHECK(three_colorable(g).status == Status::sat);
}

TEST_CASE("yu-oh-13 verdicts agree with the oracles") {
  OrthoGraph g = corpus_graph("yu-oh-13");

  std::uint64_t ks_count = 0;
  Verdict<KsColoring> kb = brute_force_ks(g, 20, &ks_count);
  Verdict<KsColoring> ks = ks_colorable(g);
  CHECK(kb.status == Status::sat);
  CHECK(ks.status == Status::sat);
  CHECK(ks_count == 24);
  CHECK(check_witness(g, *ks.witness));
  CHECK(check_witness(g, *kb.witness));

  std::uint64_t c3_count = 0;
  Verdict<Labeling> cb = brute_force_3c(g, 13, &c3_count);
  Verdict<Labeling> c3 = three_colorable(g);
  CHECK(cb.status == Status::unsat);
  CHECK(c3.status == Status::unsat);
  CHECK(c3_count == 0);
}

TEST_CASE("yu-oh-25 and peres verdicts") {
  OrthoGraph yo = corpus_graph("yu-oh-25");
  Verdict<KsColoring> ks = ks_colorable(yo);
  CHECK(ks.status == Status::sat);
  CHECK(check_witness(yo, *ks.witness));
  CHECK(three_colorable(yo).status == Status::unsat);

  CHECK(ks_colorable(corpus_graph("peres-33")).status == Status::unsat);
  CHECK(ks_colorable(corpus_graph("peres-57")).status == Status::unsat);
}

TEST_CASE("labelling a 3-colourable graph induces a KS colouring") {
  for (const char* name : {"triad", "two-triads"}) {
    OrthoGraph g = corpus_graph(name);
    Verdict<Labeling> v = three_colorable(g);
    REQUIRE(v.status == Status::sat);
    KsColoring ks;
    for (std::int8_t l : v.witness->labels)
      ks.values.push_back(l == Labeling::kZ ? 1 : 0);
    CHECK(check_witness(g, ks));
  }
}

TEST_CASE("witness checking") {
  OrthoGraph g = corpus_graph("triad");

  CHECK(check_witness(g, KsColoring{{1, 0, 0}}));
  CHECK_FALSE(check_witness(g, KsColoring{{1, 1, 0}}));  // two 1s in a triad
  CHECK_FALSE(check_witness(g, KsColoring{{0, 0, 0}}));
  CHECK(check_witness(g, Labeling{{0, 1, 2}}));
  CHECK_FALSE(check_witness(g, Labeling{{0, 0, 2}}));

  CHECK_THROWS_AS(check_witness(g, KsColoring{{1, 0}}), PartialAssignment);
  CHECK_THROWS_AS(check_witness(g, KsColoring{{1, 0, -1}}), PartialAssignment);
  CHECK_THROWS_AS(check_witness(g, Labeling{{0, 1, -1}}), PartialAssignment);
}

TEST_CASE("orthogonal rays sharing a label is rejected") {
  // (1,-1,-1) and (0,1,-1) are orthogonal members of the 25-ray set; any
  // labelling giving both the same label must fail, which is the clash the
  // 25-ray impossibility argument turns on
  OrthoGraph g = corpus_graph("yu-oh-25");
  int a = ray_index(g, "1, -1, -1");
  int b = ray_index(g, "0, 1, -1");
  REQUIRE(g.adjacent(a, b));
  Labeling lab;
  lab.labels.assign(g.size(), -1);
  for (std::size_t i = 0; i < g.size(); ++i)
    lab.labels[i] = static_cast<std::int8_t>(i % 3);
  lab.labels[a] = Labeling::kX;
  lab.labels[b] = Labeling::kX;
  CHECK_FALSE(check_witness(g, lab));
}

TEST_CASE("determinism of verdicts and witnesses") {
  OrthoGraph g = corpus_graph("yu-oh-13");
  Verdict<KsColoring> a = ks_colorable(g);
  Verdict<KsColoring> b = ks_colorable(g);
  REQUIRE(a.status == Status::sat);
  CHECK(a.witness->values == b.witness->values);
  CHECK(a.nodes_explored == b.nodes_explored);

  OrthoGraph tt = corpus_graph("two-triads");
  CHECK(three_colorable(tt).witness->labels == three_colorable(tt).witness->labels);
}

TEST_CASE("node budget yields inconclusive, never a guess") {
  OrthoGraph g = corpus_graph("peres-33");
  Verdict<KsColoring> v = ks_colorable(g, {.node_budget = 3});
  CHECK(v.status == Status::inconclusive);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("brute force size caps") {
  CHECK_THROWS_AS(brute_force_ks(corpus_graph("yu-oh-25")), TooLarge);
  CHECK_THROWS_AS(brute_force_3c(corpus_graph("yu-oh-25")), TooLarge);
}

TEST_CASE("oracle agreement on random subsets") {
  RaySet base = corpus_get("peres-57").rays;
  std::mt19937_64 rng(0xFEED);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  for (int iter = 0; iter < 30; ++iter) {
    RaySet subset(3);
    std::size_t target = 8 + iter % 6;
    while (subset.size() < target) {
      const Ray& r = base[pick(rng)];
      if (!subset.contains(r)) subset.insert(r);
    }
    OrthoGraph g = build_graph(std::move(subset));
    CAPTURE(iter);
    CHECK(ks_colorable(g).status == brute_force_ks(g).status);
    CHECK(three_colorable(g).status == brute_force_3c(g).status);
  }
}

TEST_CASE("dimension 4 uses 4-cliques as contexts") {
  RaySet s(4);
  s.insert(Ray::from_sqmag({1, 0, 0, 0}));
  s.insert(Ray::from_sqmag({0, 1, 0, 0}));
  s.insert(Ray::from_sqmag({0, 0, 1, 0}));
  s.insert(Ray::from_sqmag({0, 0, 0, 1}));
  OrthoGraph g = build_graph(std::move(s));
  REQUIRE(g.triads().size() == 1);
  std::uint64_t count = 0;
  Verdict<KsColoring> ks = brute_force_ks(g, 20, &count);
  CHECK(ks.status == Status::sat);
  CHECK(count == 4);  // one 1 among four basis rays
  CHECK(ks_colorable(g).status == Status::sat);
  // a proper 3-colouring of a 4-clique cannot exist
  CHECK(three_colorable(g).status == Status::unsat);
  CHECK(brute_force_3c(g).status == Status::unsat);
}

TEST_CASE("verdict JSON") {
  OrthoGraph g = corpus_graph("triad");
  std::string ks = verdict_to_json(ks_colorable(g), g);
  CHECK(ks.find("\"problem\": \"ks\"") != std::string::npos);
  CHECK(ks.find("\"satisfiable\": true") != std::string::npos);
  CHECK(ks.find("\"witness\"") != std::string::npos);
  CHECK(ks.find("\"nodes\"") != std::string::npos);
  CHECK(ks.find("\"ms\"") != std::string::npos);

  std::string c3 = verdict_to_json(three_colorable(g), g, /*include_ms=*/false);
  CHECK(c3.find("\"problem\": \"3c\"") != std::string::npos);
  CHECK(c3.find("\"ms\"") == std::string::npos);
  CHECK(c3.find("\"X\"") != std::string::npos);
}
