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

#include "ksctx/connection.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "ksctx/errors.hpp"

namespace ksctx {

TriadPerm compose(const TriadPerm& first, const TriadPerm& second) {
  TriadPerm out;
  for (int s = 0; s < 3; ++s) out[s] = first[second[s]];
  return out;
}

TriadPerm inverse(const TriadPerm& p) {
  TriadPerm out;
  for (int s = 0; s < 3; ++s) out[p[s]] = static_cast<std::uint8_t>(s);
  return out;
}

std::string perm_cycle_notation(const TriadPerm& p) {
  std::string out;
  bool seen[3] = {false, false, false};
  for (int s = 0; s < 3; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    int cur = s;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += " ";
      out += std::to_string(cur);
      first = false;
      cur = p[cur];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

Connection::Connection(std::size_t n_triads)
    : n_(n_triads), maps_(n_triads * (n_triads > 0 ? n_triads - 1 : 0) / 2) {}

std::size_t Connection::pair_index(int a, int b) const {
  // a < b required; index into the packed upper triangle
  if (a < 0 || b >= static_cast<int>(n_))
    throw Error("context index out of range: (" + std::to_string(a) + ", " +
                std::to_string(b) + ") with " + std::to_string(n_) + " contexts");
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

bool Connection::has(int from, int to) const {
  int a = std::min(from, to);
  int b = std::max(from, to);
  return maps_[pair_index(a, b)].has_value();
}

void Connection::set(int from, int to, const TriadPerm& p) {
  if (from == to) throw Error("Connection::set: identical contexts");
  if (from < to)
    maps_[pair_index(from, to)] = p;
  else
    maps_[pair_index(to, from)] = inverse(p);
}

void Connection::unset(int from, int to) {
  int a = std::min(from, to);
  int b = std::max(from, to);
  maps_[pair_index(a, b)].reset();
}

TriadPerm Connection::map(int from, int to) const {
  if (from == to) return kIdentityPerm;
  int a = std::min(from, to);
  int b = std::max(from, to);
  const auto& stored = maps_[pair_index(a, b)];
  if (!stored)
    throw MissingPair("no bijection stored for contexts " + std::to_string(from) +
                      " and " + std::to_string(to));
  return from < to ? *stored : inverse(*stored);
}

bool Connection::total() const {
  return std::all_of(maps_.begin(), maps_.end(),
                     [](const auto& m) { return m.has_value(); });
}

bool Connection::fixes_shared_rays(const ContextPoset& poset) const {
  for (const auto& [pair, ray] : poset.shared) {
    auto [a, b] = pair;
    if (!has(a, b)) continue;
    TriadPerm p = map(a, b);
    auto slot_of = [&](int t) {
      const auto& tri = poset.maximal[t];
      return static_cast<int>(std::find(tri.begin(), tri.end(), ray) - tri.begin());
    };
    if (p[slot_of(a)] != slot_of(b)) return false;
  }
  return true;
}

ContextCycle::ContextCycle(std::vector<int> cs) : contexts(std::move(cs)) {
  if (contexts.size() < 2)
    throw Error("context cycle needs at least two contexts");
  for (std::size_t i = 0; i < contexts.size(); ++i)
    if (contexts[i] == contexts[(i + 1) % contexts.size()])
      throw Error("context cycle has equal consecutive contexts");
}

HolonomyResult verify_holonomy(const Connection& conn, const ContextCycle& cycle) {
  TriadPerm acc = kIdentityPerm;
  const auto& cs = cycle.contexts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    acc = compose(conn.map(cs[i], cs[(i + 1) % cs.size()]), acc);
  return HolonomyResult{cycle, acc, acc == kIdentityPerm};
}

CocycleResult cocycle_check(const Connection& conn, const ContextPoset& poset) {
  const int m = static_cast<int>(poset.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        TriadPerm direct = conn.map(a, c);
        TriadPerm via = compose(conn.map(b, c), conn.map(a, b));
        if (direct != via) return {false, std::array<int, 3>{a, b, c}};
      }
  return {true, std::nullopt};
}

Connection connection_from_labeling(const Labeling& lab, const ContextPoset& poset,
                                    const OrthoGraph& g) {
  if (!check_witness(g, lab))
    throw InvalidLabeling("labelling fails its invariants");
  const int m = static_cast<int>(poset.size());
  Connection conn(poset.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      TriadPerm p{};
      for (int s = 0; s < 3; ++s) {
        std::int8_t want = lab.labels[poset.maximal[a][s]];
        const auto& tb = poset.maximal[b];
        int target = -1;
        for (int t = 0; t < 3; ++t)
          if (lab.labels[tb[t]] == want) target = t;
        p[s] = static_cast<std::uint8_t>(target);
      }
      conn.set(a, b, p);
    }
  }
  return conn;
}

LabelingTransport labeling_from_connection(const Connection& conn,
                                           const ContextPoset& poset,
                                           const OrthoGraph& g) {
  if (poset.size() == 0)
    throw Error("labeling_from_connection: no maximal contexts");
  if (!conn.total())
    throw MissingPair("labeling_from_connection: connection is not total");
  if (!cocycle_check(conn, poset).ok)
    throw Error("labeling_from_connection: connection violates the cocycle condition");

  LabelingTransport out;
  std::vector<std::int8_t> labels(g.size(), -1);
  // pin context 0 in canonical slot order and transport everywhere else;
  // cocycle consistency makes the direct map from context 0 path-independent
  for (int t = 0; t < static_cast<int>(poset.size()); ++t) {
    TriadPerm p = conn.map(0, t);
    for (int s = 0; s < 3; ++s) {
      int ray = poset.maximal[t][p[s]];
      if (labels[ray] != -1 && labels[ray] != s)
        throw InconsistentTransport(
            "ray " + std::to_string(ray) + " received labels " +
            std::string(1, label_char(labels[ray])) + " and " +
            std::string(1, label_char(static_cast<std::int8_t>(s))));
      labels[ray] = static_cast<std::int8_t>(s);
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == -1) {
      labels[i] = Labeling::kX;
      ++out.rays_defaulted;
    }
  for (const auto& [i, j] : g.edges()) {
    if (labels[i] != labels[j]) continue;
    // equal labels inside a common triad are impossible (bijections); this
    // pair is orthogonal across triads sharing no ray
    out.adjacent_clash = std::make_pair(i, j);
    return out;
  }
  out.labeling = Labeling{std::move(labels)};
  return out;
}

bool is_triad_closed(const OrthoGraph& g) {
  for (const auto& [i, j] : g.edges()) {
    bool in_triad = false;
    for (int t : g.triads_of(i)) {
      const auto& tri = g.triads()[t];
      if (std::find(tri.begin(), tri.end(), j) != tri.end()) {
        in_triad = true;
        break;
      }
    }
    if (!in_triad) return false;
  }
  return true;
}

Verdict<Connection> connection_search(const ContextPoset& poset, const OrthoGraph& g,
                                      const SolveOptions& opts) {
  if (!is_triad_closed(g))
    throw NotClosed("connection_search: ray set is not closed under triads");
  auto start = std::chrono::steady_clock::now();
  Verdict<Labeling> lv = three_colorable(g, opts);
  Verdict<Connection> v;
  v.status = lv.status;
  v.nodes_explored = lv.nodes_explored;
  if (lv.status == Status::sat)
    v.witness = connection_from_labeling(*lv.witness, poset, g);
  v.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return v;
}

namespace {

const std::array<TriadPerm, 6> kAllPerms{{{0, 1, 2},
                                          {0, 2, 1},
                                          {1, 0, 2},
                                          {1, 2, 0},
                                          {2, 0, 1},
                                          {2, 1, 0}}};

struct PairOrder {
  std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b, grouped by b

  explicit PairOrder(int m) {
    for (int b = 1; b < m; ++b)
      for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
  }
};

}  // namespace

Verdict<Connection> brute_force_connections(const ContextPoset& poset,
                                            const OrthoGraph& g,
                                            std::size_t max_triads,
                                            std::uint64_t* valid_count) {
  if (!is_triad_closed(g))
    throw NotClosed("brute_force_connections: ray set is not closed under triads");
  const int m = static_cast<int>(poset.size());
  if (poset.size() > max_triads)
    throw TooLarge("brute_force_connections: " + std::to_string(m) +
                   " triads exceeds cap of " + std::to_string(max_triads));
  auto start = std::chrono::steady_clock::now();

  Connection conn(poset.size());
  std::optional<Connection> first;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  PairOrder order(m);

  auto respects_shared = [&](int a, int b, const TriadPerm& p) {
    auto shared = poset.shared_ray(a, b);
    if (!shared) return true;
    const auto& ta = poset.maximal[a];
    const auto& tb = poset.maximal[b];
    int sa = static_cast<int>(std::find(ta.begin(), ta.end(), *shared) - ta.begin());
    int sb = static_cast<int>(std::find(tb.begin(), tb.end(), *shared) - tb.begin());
    return p[sa] == sb;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    ++nodes;
    if (k == order.pairs.size()) {
      ++count;
      if (!first) first = conn;
      return;
    }
    auto [a, b] = order.pairs[k];
    for (const TriadPerm& p : kAllPerms) {
      if (!respects_shared(a, b, p)) continue;
      // pairs (x, b) for x < a are already set, so the triple (x, a, b)
      // is fully determined; prune on its cocycle condition
      bool consistent = true;
      for (int x = 0; x < a && consistent; ++x)
        consistent = conn.map(x, b) == compose(p, conn.map(x, a));
      if (!consistent) continue;
      conn.set(a, b, p);
      self(self, k + 1);
      conn.unset(a, b);
    }
  };
  rec(rec, 0);

  Verdict<Connection> v;
  v.nodes_explored = nodes;
  if (first) {
    v.status = Status::sat;
    v.witness = std::move(*first);
  } else {
    v.status = Status::unsat;
  }
  if (valid_count) *valid_count = count;
  v.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return v;
}

ContextCycle random_cycle(std::size_t n_triads, std::size_t max_len,
                          std::mt19937_64& rng) {
  if (n_triads < 2) throw Error("random_cycle: needs at least two contexts");
  std::uniform_int_distribution<std::size_t> len_dist(2, max_len);
  std::uniform_int_distribution<int> ctx_dist(0, static_cast<int>(n_triads) - 1);
  std::size_t len = len_dist(rng);
  // two contexts only admit even cycles (odd ones repeat at the wrap-around)
  while (n_triads == 2 && len % 2 != 0) len = len_dist(rng);
  std::vector<int> cs;
  cs.reserve(len);
  while (cs.size() < len) {
    int c = ctx_dist(rng);
    if (!cs.empty() && cs.back() == c) continue;
    if (cs.size() == len - 1 && c == cs.front()) continue;
    cs.push_back(c);
  }
  return ContextCycle(std::move(cs));
}

std::string connection_to_json(const Connection& conn, const ContextPoset& poset) {
  nlohmann::json pairs = nlohmann::json::array();
  const int m = static_cast<int>(poset.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!conn.has(a, b)) continue;
      TriadPerm p = conn.map(a, b);
      nlohmann::json entry;
      entry["from"] = poset.maximal[a];
      entry["to"] = poset.maximal[b];
      entry["map"] = {p[0], p[1], p[2]};
      pairs.push_back(std::move(entry));
    }
  }
  nlohmann::json j;
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

}  // namespace ksctx
