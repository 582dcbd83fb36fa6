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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "ksctx/corpus.hpp"
#include "ksctx/errors.hpp"
#include "ksctx/ray_io.hpp"
#include "ksctx/report.hpp"

using namespace ksctx;

TEST_CASE("corpus sizes and closure checks") {
  CHECK(corpus_get("triad").rays.size() == 3);
  CHECK(corpus_get("two-triads").rays.size() == 5);
  CHECK(corpus_get("yu-oh-13").rays.size() == 13);
  CHECK(corpus_get("yu-oh-25").rays.size() == 25);
  CHECK(corpus_get("peres-33").rays.size() == 33);
  CHECK(corpus_get("peres-57").rays.size() == 57);
  CHECK_THROWS_AS(corpus_get("kochen-specker-117"), UnknownCorpus);
  CHECK(corpus_names().size() == 6);
}

TEST_CASE("yu-oh-25 is the closure of yu-oh-13") {
  RaySet closed = triad_closure(corpus_get("yu-oh-13").rays);
  RaySet built = corpus_get("yu-oh-25").rays;
  REQUIRE(closed.size() == built.size());
  for (const Ray& r : closed) CHECK(built.contains(r));
}

TEST_CASE("peres-57 is the closure of peres-33") {
  RaySet closed = triad_closure(corpus_get("peres-33").rays);
  RaySet built = corpus_get("peres-57").rays;
  REQUIRE(closed.size() == built.size());
  for (const Ray& r : closed) CHECK(built.contains(r));
}

TEST_CASE("parsing ray files") {
  SUBCASE("sqmag lines") {
    RaySet s = parse_rayfile_text("sqmag: 0 0 1\nsqmag: 4 1 -1\n");
    REQUIRE(s.size() == 2);
    CHECK(s[0].canonical_key() == "0, 0, 1");
    CHECK(s[1].canonical_key() == "2, 1, -1");
  }

  SUBCASE("rad lines") {
    RaySet s = parse_rayfile_text("rad: 1, 1, -1 r2\n");
    REQUIRE(s.size() == 1);
    CHECK(s[0].canonical_key() == "1, 1, -1 r2");
  }

  SUBCASE("headers, comments and bare lines") {
    RaySet s = parse_rayfile_text(
        "# a comment\n"
        "dim: 3\n"
        "format: rad\n"
        "1, 0, 0   # tail comment\n"
        "sqmag: 0 1 0\n"
        "\n"
        "0, 0, 1\n");
    CHECK(s.size() == 3);
  }

  SUBCASE("dimension header") {
    RaySet s = parse_rayfile_text("dim: 4\nsqmag: 1 0 0 1\n");
    CHECK(s.dim() == 4);
    CHECK(s[0].canonical_key() == "1, 0, 0, 1");
  }

  SUBCASE("duplicates are dropped with a count") {
    // (0,0,2) is projectively (0,0,1)
    RaySet s = parse_rayfile_text("sqmag: 0 0 1\nsqmag: 0 0 2\n");
    CHECK(s.size() == 1);
    CHECK(s.duplicates_dropped() == 1);
  }

  SUBCASE("diagnostics carry locations") {
    try {
      parse_rayfile_text("sqmag: 0 0 1\nsqmag: 1 x 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_rayfile_text("sqmag: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rayfile_text("rad: 1, 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rayfile_text("format: hex\n"), ParseError);
    CHECK_THROWS_AS(parse_rayfile_text("sqmag: 1 0 0\ndim: 3\n"), ParseError);
    CHECK_THROWS_AS(parse_rayfile_text("rad: 1, 1, 1 q\n"), ParseError);
    CHECK_THROWS_AS(parse_rayfile_text("sqmag: 0 0 0\n"), InvalidRay);
  }
}

TEST_CASE("export round trip is byte identical") {
  for (const std::string& name : corpus_names()) {
    RaySet s = corpus_get(name).rays;
    std::string once = to_rayfile(s);
    RaySet reparsed = parse_rayfile_text(once);
    CHECK(reparsed.size() == s.size());
    CHECK(to_rayfile(reparsed) == once);
  }
}

TEST_CASE("corpus directory override") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ksctx_corpus_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "triad.rays");
    out << "sqmag: 1 0 0\nsqmag: 0 1 1\n";
  }
  setenv("KSCTX_CORPUS_DIR", dir.c_str(), 1);
  CorpusEntry e = corpus_get("triad");
  CHECK(e.rays.size() == 2);
  CHECK_FALSE(e.expected.closure_size.has_value());
  // entries without an override file still resolve to the built-ins
  CHECK(corpus_get("two-triads").rays.size() == 5);
  unsetenv("KSCTX_CORPUS_DIR");
  CHECK(corpus_get("triad").rays.size() == 3);
  fs::remove_all(dir);
}

TEST_CASE("pipeline report") {
  PipelineOptions opts;
  opts.close = true;
  opts.run_ks = true;
  opts.run_3c = true;
  Report r = run_pipeline(corpus_get("yu-oh-13").rays, opts, "yu-oh-13");

  CHECK(r.closure_applied);
  CHECK(r.rays_before_closure == 13);
  CHECK(r.rays_after_closure == 25);
  CHECK(r.stats.triads == 16);
  REQUIRE(r.ks.has_value());
  REQUIRE(r.three_color.has_value());
  CHECK(r.ks->status == Status::sat);
  CHECK(r.three_color->status == Status::unsat);

  SUBCASE("JSON and text renderings agree and are stable") {
    std::string json1 = render_report_json(r);
    std::string json2 = render_report_json(r);
    CHECK(json1 == json2);
    CHECK(json1.find("\"rays_after\": 25") != std::string::npos);
    CHECK(json1.find("\"satisfiable\": true") != std::string::npos);
    CHECK(json1.find("\"satisfiable\": false") != std::string::npos);
    CHECK(json1.find("\"ms\"") == std::string::npos);  // timings are opt-in

    std::string text = render_report_text(r);
    CHECK(text.find("13 -> 25") != std::string::npos);
    CHECK(text.find("ks: satisfiable") != std::string::npos);
    CHECK(text.find("3c: unsatisfiable") != std::string::npos);
  }

  SUBCASE("two full runs are byte identical") {
    Report again = run_pipeline(corpus_get("yu-oh-13").rays, opts, "yu-oh-13");
    CHECK(render_report_json(again) == render_report_json(r));
    CHECK(render_report_text(again) == render_report_text(r));
  }

  SUBCASE("timings appear only when requested") {
    PipelineOptions with_times = opts;
    with_times.include_timings = true;
    Report timed = run_pipeline(corpus_get("triad").rays, with_times, "triad");
    CHECK(render_report_json(timed).find("\"ms\"") != std::string::npos);
  }
}

TEST_CASE("pipeline with connection stage") {
  PipelineOptions opts;
  opts.run_connection = true;
  Report r = run_pipeline(corpus_get("two-triads").rays, opts, "two-triads");
  REQUIRE(r.connection.has_value());
  CHECK(r.connection->status == Status::sat);
  std::string json = render_report_json(r);
  CHECK(json.find("\"connection\"") != std::string::npos);
  CHECK(json.find("\"pairs\"") != std::string::npos);
}

TEST_CASE("corpus regression against expected records") {
  for (const std::string& name : corpus_names()) {
    CorpusEntry e = corpus_get(name);
    CAPTURE(name);
    if (e.expected.closure_size)
      CHECK(triad_closure(e.rays).size() == *e.expected.closure_size);
    OrthoGraph g = build_graph(e.rays);
    if (e.expected.triad_count) CHECK(g.triads().size() == *e.expected.triad_count);
    if (e.expected.ks_satisfiable)
      CHECK(ks_colorable(g).satisfiable() == *e.expected.ks_satisfiable);
    if (e.expected.three_color_satisfiable)
      CHECK(three_colorable(g).satisfiable() == *e.expected.three_color_satisfiable);
  }
}
