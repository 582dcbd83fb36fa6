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

#include "ksctx/ray_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "ksctx/errors.hpp"

namespace ksctx {

namespace {

std::string strip(std::string_view line) {
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  std::size_t end = line.find_last_not_of(" \t\r");
  return std::string(line.substr(begin, end - begin + 1));
}

bool take_prefix(std::string& line, std::string_view prefix) {
  if (line.rfind(prefix, 0) != 0) return false;
  line.erase(0, prefix.size());
  return true;
}

std::vector<long long> parse_sqmag_fields(const std::string& body, std::size_t lineno,
                                          std::size_t dim) {
  std::istringstream in(body);
  std::vector<long long> vals;
  long long v;
  while (in >> v) vals.push_back(v);
  std::string rest;
  if (!in.eof() && (in >> rest, !rest.empty()))
    throw ParseError("bad sqmag integer '" + rest + "'", lineno, body.size());
  if (vals.size() != dim)
    throw ParseError("expected " + std::to_string(dim) + " sqmag integers, got " +
                         std::to_string(vals.size()),
                     lineno, 1);
  return vals;
}

std::vector<RadScalar> parse_rad_fields(const std::string& body, std::size_t lineno,
                                        std::size_t dim) {
  std::vector<RadScalar> comps;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string field = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      comps.push_back(RadScalar::parse(field));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad radical component: ") + e.what(), lineno,
                       start + e.column);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (comps.size() != dim)
    throw ParseError("expected " + std::to_string(dim) + " components, got " +
                         std::to_string(comps.size()),
                     lineno, 1);
  return comps;
}

}  // namespace

RaySet parse_rayfile_text(std::string_view text) {
  std::size_t dim = 3;
  enum class Format { sqmag, rad } format = Format::sqmag;
  bool saw_ray = false;

  std::vector<std::pair<std::size_t, Ray>> staged;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (take_prefix(line, "dim:")) {
      if (saw_ray) throw ParseError("'dim:' header after ray lines", lineno, 1);
      try {
        dim = std::stoul(strip(line));
      } catch (...) {
        throw ParseError("bad dimension '" + strip(line) + "'", lineno, 6);
      }
      if (dim < 3) throw ParseError("dimension must be at least 3", lineno, 6);
      continue;
    }
    if (take_prefix(line, "format:")) {
      if (saw_ray) throw ParseError("'format:' header after ray lines", lineno, 1);
      std::string f = strip(line);
      if (f == "sqmag")
        format = Format::sqmag;
      else if (f == "rad")
        format = Format::rad;
      else
        throw ParseError("unknown format '" + f + "'", lineno, 9);
      continue;
    }

    Format line_format = format;
    if (take_prefix(line, "sqmag:"))
      line_format = Format::sqmag;
    else if (take_prefix(line, "rad:"))
      line_format = Format::rad;
    saw_ray = true;

    try {
      if (line_format == Format::sqmag)
        staged.emplace_back(lineno, Ray::from_sqmag(parse_sqmag_fields(line, lineno, dim)));
      else
        staged.emplace_back(lineno, Ray(parse_rad_fields(line, lineno, dim)));
    } catch (const InvalidRay& e) {
      throw InvalidRay(std::string(e.what()) + " at line " + std::to_string(lineno));
    }
  }

  RaySet set(dim);
  for (auto& [ln, ray] : staged) set.insert(std::move(ray));
  return set;
}

RaySet parse_rayfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ray file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rayfile_text(buf.str());
}

std::string to_rayfile(const RaySet& s) {
  std::string out = "dim: " + std::to_string(s.dim()) + "\nformat: rad\n";
  for (const Ray& r : s) out += "rad: " + r.canonical_key() + "\n";
  return out;
}

}  // namespace ksctx
