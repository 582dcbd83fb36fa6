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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ksctx/coloring.hpp"
#include "ksctx/ortho_graph.hpp"

namespace ksctx {

/// Bijection between the three ray slots of one triad and another;
/// perm[s] is the target slot of source slot s.
using TriadPerm = std::array<std::uint8_t, 3>;

constexpr TriadPerm kIdentityPerm{0, 1, 2};

/// first(second(s)) — apply `second` first, then `first`.
TriadPerm compose(const TriadPerm& first, const TriadPerm& second);
TriadPerm inverse(const TriadPerm& p);

/// Cycle notation over slots of the source triad, e.g. "(0 1 2)" or "id".
std::string perm_cycle_notation(const TriadPerm& p);

/// A context connection: one bijection between the ray sets of every
/// unordered pair of maximal contexts. Only one direction is stored; the
/// reverse map is the inverse, so the inverse-pair axiom holds by
/// construction. The bijection for a pair sharing a ray must fix that ray;
/// this is a property of the stored maps, checked by fixes_shared_rays().
class Connection {
 public:
  explicit Connection(std::size_t n_triads);

  std::size_t n_triads() const { return n_; }

  bool has(int from, int to) const;
  void set(int from, int to, const TriadPerm& p);
  void unset(int from, int to);

  /// The stored bijection from `from`'s slots to `to`'s slots.
  /// Throws MissingPair when absent.
  TriadPerm map(int from, int to) const;

  /// True when a bijection is present for every unordered pair.
  bool total() const;

  /// Verifies the shared-ray condition against the poset: whenever two
  /// triads share a ray, the bijection maps its slot to its slot.
  bool fixes_shared_rays(const ContextPoset& poset) const;

 private:
  std::size_t pair_index(int a, int b) const;

  std::size_t n_;
  std::vector<std::optional<TriadPerm>> maps_;
};

/// Cyclic tuple of maximal contexts, indices mod n; n >= 2 and consecutive
/// contexts distinct (including the wrap-around).
struct ContextCycle {
  std::vector<int> contexts;

  explicit ContextCycle(std::vector<int> cs);
  std::size_t length() const { return contexts.size(); }
};

struct HolonomyResult {
  ContextCycle cycle;
  /// The residual permutation of the first context's slots after composing
  /// the connection around the cycle.
  TriadPerm composite;
  bool trivial;
};

/// Composes the bijections around the cycle and reports the residual
/// permutation on the first context. Trivial holonomy on every cycle is the
/// geometric criterion for a noncontextual labelling to exist.
HolonomyResult verify_holonomy(const Connection& conn, const ContextCycle& cycle);

struct CocycleResult {
  bool ok;
  std::optional<std::array<int, 3>> violating;  // first bad triple, if any
};

/// Checks l_{c<-a} == l_{c<-b} . l_{b<-a} on every context triple. With
/// bijections present for every pair, this is equivalent to trivial holonomy
/// on all cycles (an n-cycle reduces to 3-cycles by replacing two legs with
/// the direct map). Throws MissingPair unless the connection is total.
CocycleResult cocycle_check(const Connection& conn, const ContextPoset& poset);

/// Builds the connection that matches rays by label: the X ray of one triad
/// maps to the X ray of the other, and likewise Y, Z. Shared rays are fixed
/// automatically (they carry the same label in both triads) and the cocycle
/// condition holds by construction. Throws InvalidLabeling unless the
/// labelling passes check_witness.
Connection connection_from_labeling(const Labeling& lab, const ContextPoset& poset,
                                    const OrthoGraph& g);

/// Outcome of transporting labels along a connection. Exactly one of
/// `labeling` / `adjacent_clash` is set: the clash reports two orthogonal
/// rays in no common triad that received equal labels, which is a structured
/// result rather than an error (the connection axioms do not constrain such
/// pairs directly).
struct LabelingTransport {
  std::optional<Labeling> labeling;
  std::optional<std::pair<int, int>> adjacent_clash;
  int rays_defaulted = 0;  // rays in no triad, labelled X with a warning
};

/// Pins the first triad to (X, Y, Z) and transports labels to every other
/// triad through the connection. Requires a total, cocycle-consistent
/// connection that fixes shared rays; a ray receiving two different labels
/// then cannot happen and raises InconsistentTransport (a bug signal).
LabelingTransport labeling_from_connection(const Connection& conn,
                                           const ContextPoset& poset,
                                           const OrthoGraph& g);

/// Decides whether a context connection with trivial holonomy exists for a
/// triad-closed ray set, via the equivalence with proper 3-colourability:
/// a satisfiable labelling induces such a connection, and conversely label
/// transport along a trivial connection yields a labelling. Throws NotClosed
/// when some orthogonal pair lacks its completion.
Verdict<Connection> connection_search(const ContextPoset& poset, const OrthoGraph& g,
                                      const SolveOptions& opts = {});

/// Independent small-instance search: enumerates per-pair bijections that
/// respect shared rays, pruning with the cocycle condition. TooLarge above
/// max_triads. valid_count, when given, receives the number of distinct
/// cocycle-consistent connections.
Verdict<Connection> brute_force_connections(const ContextPoset& poset,
                                            const OrthoGraph& g,
                                            std::size_t max_triads = 6,
                                            std::uint64_t* valid_count = nullptr);

/// True iff every edge of the graph lies in at least one triad, which for
/// dimension 3 is exactly closure under triad completion.
bool is_triad_closed(const OrthoGraph& g);

/// Uniform random context cycle of length 2..max_len with distinct
/// consecutive contexts; requires at least two triads.
ContextCycle random_cycle(std::size_t n_triads, std::size_t max_len,
                          std::mt19937_64& rng);

/// {"pairs": [{"from": [i,j,k], "to": [...], "map": [..]}, ...]}
std::string connection_to_json(const Connection& conn, const ContextPoset& poset);

}  // namespace ksctx
