#pragma once

// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's algorithms: cycles come from path DFS over all starts
// with set-based dedup, and choosability from plain enumeration over a fixed
// small universe with no canonicalization.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "planar/choosability.hpp"
#include "planar/plane_graph.hpp"

namespace oracles {

// Every simple cycle of length <= max_len as a sorted set of sorted vertex
// sets... distinguishing cycles with equal vertex sets by their edge sets.
inline std::set<std::vector<std::pair<int, int>>> naive_cycles(
    const planar::PlaneGraph& g, int max_len) {
  std::set<std::vector<std::pair<int, int>>> out;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> used(n, 0);

  auto record = [&]() {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < path.size(); ++i) {
      int a = path[i];
      int b = path[(i + 1) % path.size()];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    out.insert(edges);
  };

  std::function<void()> dfs = [&]() {
    int u = path.back();
    for (int w : g.neighbors(u)) {
      if (w == path.front() && path.size() >= 3) record();
      if (!used[w] && static_cast<int>(path.size()) < max_len) {
        used[w] = 1;
        path.push_back(w);
        dfs();
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    dfs();
  }
  return out;
}

// Full-enumeration L-colorability: tries every member of the product of the
// lists.
inline bool naive_l_colorable(const planar::ColorGraph& g,
                              const planar::ListAssignment& lists) {
  std::vector<int> chosen(g.n, -1);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == g.n) return true;
    for (int c : lists[v]) {
      bool ok = true;
      for (int u : g.adj[v])
        if (u < v && chosen[u] == c) ok = false;
      if (!ok) continue;
      chosen[v] = c;
      if (rec(v + 1)) return true;
    }
    chosen[v] = -1;
    return false;
  };
  return rec(0);
}

// Exhaustive k-choosability over the universe {0..universe-1}, with no
// canonicalization or symmetry reduction of any kind.
inline std::optional<planar::ListAssignment> naive_bad_assignment(
    const planar::ColorGraph& g, int k, int universe) {
  std::vector<std::vector<int>> combos;
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      combos.push_back(pick);
      return;
    }
    for (int c = from; c < universe; ++c) {
      pick.push_back(c);
      gen(c + 1);
      pick.pop_back();
    }
  };
  gen(0);

  planar::ListAssignment lists(g.n);
  std::optional<planar::ListAssignment> found;
  std::function<void(int)> assign = [&](int v) {
    if (found) return;
    if (v == g.n) {
      if (!naive_l_colorable(g, lists)) found = lists;
      return;
    }
    for (const auto& combo : combos) {
      lists[v] = combo;
      assign(v + 1);
      if (found) return;
    }
  };
  assign(0);
  return found;
}

inline bool naive_k_choosable(const planar::ColorGraph& g, int k, int universe) {
  return !naive_bad_assignment(g, k, universe).has_value();
}

}  // namespace oracles
