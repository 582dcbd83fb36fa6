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

#include "ksctx/coloring.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "ksctx/errors.hpp"

namespace ksctx {

std::string to_string(Status s) {
  switch (s) {
    case Status::sat:
      return "satisfiable";
    case Status::unsat:
      return "unsatisfiable";
    default:
      return "inconclusive";
  }
}

char label_char(std::int8_t label) {
  switch (label) {
    case Labeling::kX:
      return 'X';
    case Labeling::kY:
      return 'Y';
    case Labeling::kZ:
      return 'Z';
    default:
      return '?';
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// degree-descending, ties by canonical key, then by index
std::vector<int> branch_order(const OrthoGraph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    const auto& ka = g.rays()[a].canonical_key();
    const auto& kb = g.rays()[b].canonical_key();
    if (ka != kb) return ka < kb;
    return a < b;
  });
  return order;
}

struct KsSearch {
  const OrthoGraph& g;
  std::uint64_t budget;
  std::vector<std::int8_t> value;
  std::vector<int> trail;
  std::vector<int> order;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  explicit KsSearch(const OrthoGraph& graph, std::uint64_t node_budget)
      : g(graph), budget(node_budget), value(graph.size(), -1), order(branch_order(graph)) {}

  bool assign(int i, std::int8_t v, std::vector<int>& queue) {
    if (value[i] == v) return true;
    if (value[i] != -1) return false;
    value[i] = v;
    trail.push_back(i);
    queue.push_back(i);
    return true;
  }

  bool propagate(std::vector<int>& queue) {
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int i = queue[qi];
      if (value[i] == 1) {
        for (int nb : g.neighbors(i))
          if (!assign(nb, 0, queue)) return false;
      }
      for (int t : g.triads_of(i)) {
        const auto& tri = g.triads()[t];
        int ones = 0;
        int zeros = 0;
        int open = -1;
        for (int v : tri) {
          if (value[v] == 1)
            ++ones;
          else if (value[v] == 0)
            ++zeros;
          else
            open = v;
        }
        if (ones > 1) return false;
        if (zeros == static_cast<int>(tri.size())) return false;
        if (ones == 0 && zeros == static_cast<int>(tri.size()) - 1)
          if (!assign(open, 1, queue)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = -1;
      trail.pop_back();
    }
  }

  bool search() {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      budget_hit = true;
      return false;
    }
    int var = -1;
    for (int i : order)
      if (value[i] == -1) {
        var = i;
        break;
      }
    if (var == -1) return true;
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
      std::size_t mark = trail.size();
      std::vector<int> queue;
      if (assign(var, v, queue) && propagate(queue)) {
        if (search()) return true;
        if (budget_hit) return false;
      }
      undo(mark);
    }
    return false;
  }
};

// 3-colouring state with bitmask domains; branches copy the state, which is
// cheap at corpus sizes
struct C3State {
  std::vector<std::int8_t> label;
  std::vector<std::uint8_t> domain;

  explicit C3State(std::size_t n) : label(n, -1), domain(n, 0b111) {}

  bool assign(const OrthoGraph& g, int i, std::int8_t l) {
    if (!(domain[i] >> l & 1)) return false;
    if (label[i] != -1) return label[i] == l;
    label[i] = l;
    domain[i] = static_cast<std::uint8_t>(1u << l);
    std::vector<int> queue{i};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      std::uint8_t bit = static_cast<std::uint8_t>(1u << label[v]);
      for (int nb : g.neighbors(v)) {
        if (!(domain[nb] & bit)) continue;
        domain[nb] = static_cast<std::uint8_t>(domain[nb] & ~bit);
        if (domain[nb] == 0) return false;
        if (label[nb] == -1 && (domain[nb] & (domain[nb] - 1)) == 0) {
          label[nb] = static_cast<std::int8_t>(std::countr_zero(domain[nb]));
          queue.push_back(nb);
        }
      }
    }
    return true;
  }
};

struct C3Search {
  const OrthoGraph& g;
  std::uint64_t budget;
  std::vector<int> order;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::optional<C3State> solution;

  C3Search(const OrthoGraph& graph, std::uint64_t node_budget)
      : g(graph), budget(node_budget), order(branch_order(graph)) {}

  bool search(const C3State& s) {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      budget_hit = true;
      return false;
    }
    int var = -1;
    for (int i : order)
      if (s.label[i] == -1) {
        var = i;
        break;
      }
    if (var == -1) {
      solution = s;
      return true;
    }
    for (std::int8_t l = 0; l < 3; ++l) {
      if (!(s.domain[var] >> l & 1)) continue;
      C3State next = s;
      if (next.assign(g, var, l)) {
        if (search(next)) return true;
        if (budget_hit) return false;
      }
    }
    return false;
  }
};

}  // namespace

Verdict<KsColoring> ks_colorable(const OrthoGraph& g, const SolveOptions& opts) {
  auto start = Clock::now();
  KsSearch s(g, opts.node_budget);
  bool sat = s.search();
  Verdict<KsColoring> v;
  v.nodes_explored = s.nodes;
  if (sat) {
    KsColoring w{s.value};
    if (!check_witness(g, w))
      throw Error("ks_colorable: produced witness fails verification");
    v.status = Status::sat;
    v.witness = std::move(w);
  } else {
    v.status = s.budget_hit ? Status::inconclusive : Status::unsat;
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict<Labeling> three_colorable(const OrthoGraph& g, const SolveOptions& opts) {
  auto start = Clock::now();
  C3Search s(g, opts.node_budget);
  C3State root(g.size());
  bool root_ok = true;
  if (!g.triads().empty()) {
    // pin the first triad to (X, Y, Z): colourability is invariant under
    // label permutation, and the pin makes witnesses deterministic
    const auto& t0 = g.triads().front();
    for (int k = 0; k < 3; ++k)
      root_ok = root_ok && root.assign(g, t0[k], static_cast<std::int8_t>(k));
  }
  bool sat = root_ok && s.search(root);
  Verdict<Labeling> v;
  v.nodes_explored = s.nodes;
  if (sat) {
    Labeling w{s.solution->label};
    if (!check_witness(g, w))
      throw Error("three_colorable: produced witness fails verification");
    v.status = Status::sat;
    v.witness = std::move(w);
  } else {
    v.status = s.budget_hit ? Status::inconclusive : Status::unsat;
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict<KsColoring> brute_force_ks(const OrthoGraph& g, std::size_t max_rays,
                                   std::uint64_t* valid_count) {
  const std::size_t n = g.size();
  if (n > max_rays || n > 62)
    throw TooLarge("brute_force_ks: " + std::to_string(n) + " rays exceeds cap of " +
                   std::to_string(max_rays));
  auto start = Clock::now();
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [i, j] : g.edges()) {
    adj[i] |= 1ULL << j;
    adj[j] |= 1ULL << i;
  }
  std::vector<std::uint64_t> triad_masks;
  for (const auto& t : g.triads()) {
    std::uint64_t m = 0;
    for (int v : t) m |= 1ULL << v;
    triad_masks.push_back(m);
  }

  std::uint64_t count = 0;
  std::optional<std::uint64_t> first;
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
    bool ok = true;
    for (std::uint64_t tm : triad_masks)
      if (std::popcount(m & tm) != 1) {
        ok = false;
        break;
      }
    if (ok)
      for (std::size_t i = 0; i < n && ok; ++i)
        if (m >> i & 1) ok = (adj[i] & m) == 0;
    if (ok) {
      ++count;
      if (!first) first = m;
    }
  }

  Verdict<KsColoring> v;
  v.nodes_explored = n == 0 ? 1 : (1ULL << n);
  if (first) {
    KsColoring w;
    w.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      w.values[i] = static_cast<std::int8_t>(*first >> i & 1);
    v.status = Status::sat;
    v.witness = std::move(w);
  } else {
    v.status = Status::unsat;
  }
  if (valid_count) *valid_count = count;
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict<Labeling> brute_force_3c(const OrthoGraph& g, std::size_t max_rays,
                                 std::uint64_t* valid_count) {
  const std::size_t n = g.size();
  if (n > max_rays)
    throw TooLarge("brute_force_3c: " + std::to_string(n) + " rays exceeds cap of " +
                   std::to_string(max_rays));
  auto start = Clock::now();
  std::vector<std::int8_t> label(n, -1);
  std::optional<std::vector<std::int8_t>> first;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    ++nodes;
    if (i == n) {
      ++count;
      if (!first) first = label;
      return;
    }
    for (std::int8_t l = 0; l < 3; ++l) {
      bool ok = true;
      for (int nb : g.neighbors(static_cast<int>(i)))
        if (nb < static_cast<int>(i) && label[nb] == l) {
          ok = false;
          break;
        }
      if (!ok) continue;
      label[i] = l;
      self(self, i + 1);
      label[i] = -1;
    }
  };
  rec(rec, 0);

  Verdict<Labeling> v;
  v.nodes_explored = nodes;
  if (first) {
    v.status = Status::sat;
    v.witness = Labeling{*first};
  } else {
    v.status = Status::unsat;
  }
  if (valid_count) *valid_count = count;
  v.elapsed_ms = ms_since(start);
  return v;
}

bool check_witness(const OrthoGraph& g, const KsColoring& w) {
  if (w.values.size() != g.size())
    throw PartialAssignment("KS witness covers " + std::to_string(w.values.size()) +
                            " of " + std::to_string(g.size()) + " rays");
  for (std::int8_t v : w.values)
    if (v == -1) throw PartialAssignment("KS witness has unassigned rays");
  for (std::int8_t v : w.values)
    if (v != 0 && v != 1) return false;
  for (const auto& t : g.triads()) {
    int ones = 0;
    for (int v : t) ones += w.values[v] == 1;
    if (ones != 1) return false;
  }
  for (const auto& [i, j] : g.edges())
    if (w.values[i] == 1 && w.values[j] == 1) return false;
  return true;
}

bool check_witness(const OrthoGraph& g, const Labeling& w) {
  if (w.labels.size() != g.size())
    throw PartialAssignment("labeling covers " + std::to_string(w.labels.size()) +
                            " of " + std::to_string(g.size()) + " rays");
  for (std::int8_t l : w.labels)
    if (l == -1) throw PartialAssignment("labeling has unassigned rays");
  for (std::int8_t l : w.labels)
    if (l < 0 || l > 2) return false;
  for (const auto& [i, j] : g.edges())
    if (w.labels[i] == w.labels[j]) return false;
  return true;
}

namespace {

nlohmann::json verdict_shell(const std::string& problem, Status status,
                             std::uint64_t nodes, double ms, bool include_ms) {
  nlohmann::json j;
  j["problem"] = problem;
  if (status == Status::inconclusive)
    j["satisfiable"] = nullptr;
  else
    j["satisfiable"] = status == Status::sat;
  j["witness"] = nullptr;
  j["nodes"] = nodes;
  if (include_ms) j["ms"] = std::llround(ms);
  return j;
}

}  // namespace

std::string verdict_to_json(const Verdict<KsColoring>& v, const OrthoGraph& g,
                            bool include_ms) {
  nlohmann::json j = verdict_shell("ks", v.status, v.nodes_explored, v.elapsed_ms,
                                   include_ms);
  if (v.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (std::size_t i = 0; i < g.size(); ++i)
      w[g.rays()[i].canonical_key()] = static_cast<int>(v.witness->values[i]);
    j["witness"] = std::move(w);
  }
  return j.dump(2) + "\n";
}

std::string verdict_to_json(const Verdict<Labeling>& v, const OrthoGraph& g,
                            bool include_ms) {
  nlohmann::json j = verdict_shell("3c", v.status, v.nodes_explored, v.elapsed_ms,
                                   include_ms);
  if (v.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (std::size_t i = 0; i < g.size(); ++i)
      w[g.rays()[i].canonical_key()] = std::string(1, label_char(v.witness->labels[i]));
    j["witness"] = std::move(w);
  }
  return j.dump(2) + "\n";
}

}  // namespace ksctx
