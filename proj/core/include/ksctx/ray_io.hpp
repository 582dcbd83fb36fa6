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

#include <filesystem>
#include <string>
#include <string_view>

#include "ksctx/ray.hpp"

namespace ksctx {

/// Parses the ray-file format: `#` comments, optional header lines
/// `dim: d` (default 3) and `format: sqmag|rad` (default sqmag) before the
/// first ray, then one ray per line as either
///
///   sqmag: a b c          signed integers, squared-magnitude notation
///   rad: x, y, z          RadScalar grammar per component
///
/// A line may also omit the prefix and is then read in the file's format.
/// Duplicate rays are dropped silently; the count is available as
/// RaySet::duplicates_dropped(). Failures carry line/column diagnostics.
RaySet parse_rayfile_text(std::string_view text);

RaySet parse_rayfile(const std::filesystem::path& path);

/// Deterministic rad-format rendering; parse(to_rayfile(s)) reproduces the
/// set and re-exporting is byte-identical.
std::string to_rayfile(const RaySet& s);

}  // namespace ksctx
