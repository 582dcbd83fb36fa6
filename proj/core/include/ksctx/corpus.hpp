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
#include <vector>

#include "ksctx/ray.hpp"

namespace ksctx {

/// Reference values a corpus entry is expected to reproduce; regression
/// tests compare every present field against the computed value.
struct ExpectedResults {
  std::optional<std::size_t> closure_size;
  std::optional<std::size_t> triad_count;
  std::optional<bool> ks_satisfiable;
  std::optional<bool> three_color_satisfiable;
};

struct CorpusEntry {
  std::string name;
  RaySet rays;
  ExpectedResults expected;
};

/// Names of the built-in ray sets: triad, two-triads, yu-oh-13, yu-oh-25,
/// peres-33, peres-57.
const std::vector<std::string>& corpus_names();

/// Returns the named built-in set. The closed variants are recomputed from
/// their generators and size-checked at load. When the environment variable
/// KSCTX_CORPUS_DIR is set and contains `<name>.rays`, that file is parsed
/// instead (with no expected values attached). Throws UnknownCorpus.
CorpusEntry corpus_get(const std::string& name);

}  // namespace ksctx
