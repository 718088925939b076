#include "planar/choosability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace planar {

ColorGraph ColorGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  ColorGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("bad edge");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

ColorGraph ColorGraph::from_plane_graph(const PlaneGraph& g) {
  ColorGraph out;
  out.n = g.vertex_count();
  out.adj = g.rotation();
  for (auto& a : out.adj) std::sort(a.begin(), a.end());
  return out;
}

bool ColorGraph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> ColorGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// L-coloring solver
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> l_colorable(const ColorGraph& g,
                                            const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.n) throw MissingListError();
  std::vector<int> palette;
  for (const auto& l : lists) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > 64)
    throw TooLargeError("more than 64 distinct colors in one assignment");

  auto color_id = [&](int c) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) -
                            palette.begin());
  };
  std::vector<std::uint64_t> avail(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int c : lists[v]) avail[v] |= 1ULL << color_id(c);

  std::vector<int> chosen(g.n, -1);
  // Smallest remaining list first; exact backtracking.
  std::function<bool()> solve = [&]() -> bool {
    int best = -1;
    int best_count = 65;
    for (int v = 0; v < g.n; ++v) {
      if (chosen[v] >= 0) continue;
      int c = std::popcount(avail[v]);
      if (c < best_count) {
        best_count = c;
        best = v;
      }
    }
    if (best < 0) return true;
    if (best_count == 0) return false;
    std::uint64_t options = avail[best];
    while (options) {
      int c = std::countr_zero(options);
      options &= options - 1;
      chosen[best] = c;
      std::vector<std::pair<int, std::uint64_t>> saved;
      bool dead = false;
      for (int u : g.adj[best]) {
        if (chosen[u] == c) {
          dead = true;
          break;
        }
        if (chosen[u] < 0 && (avail[u] >> c) & 1) {
          saved.emplace_back(u, avail[u]);
          avail[u] &= ~(1ULL << c);
        }
      }
      if (!dead && solve()) return true;
      for (auto& [u, m] : saved) avail[u] = m;
      chosen[best] = -1;
    }
    return false;
  };
  if (!solve()) return std::nullopt;
  std::vector<int> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = palette[chosen[v]];
  return out;
}

// ---------------------------------------------------------------------------
// Exact "colorable from every assignment with these list sizes" decision.
//
// Sound-and-complete pieces:
//   * slack deletion: s(v) > deg(v) removes v (iff)
//   * forced singleton: s(v) = 1 removes v and debits its neighbors (iff)
//   * trees: adversary forcing-chain count, exact
//   * cycles with all sizes >= 2: closed form, exact
//   * hit-pattern split (one-sided: proves only TRUE)
//   * canonicalized enumeration fallback, exact, budgeted
// ---------------------------------------------------------------------------

namespace {

struct Decide {
  const ColorGraph& g;
  bool forbid_all_equal;
  long long budget;
  long long nodes = 0;
  std::vector<std::uint32_t> adj_mask;
  std::map<std::pair<std::uint32_t, std::uint64_t>, bool> memo;

  Decide(const ColorGraph& gg, bool forbid, long long budget_)
      : g(gg), forbid_all_equal(forbid), budget(budget_) {
    adj_mask.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
      for (int u : g.adj[v]) adj_mask[v] |= 1u << u;
  }

  static std::uint64_t pack(std::uint32_t mask, const std::vector<int>& sizes) {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < sizes.size(); ++v)
      if ((mask >> v) & 1)
        key = key * 17 + static_cast<std::uint64_t>(sizes[v] + 1);
    return key;
  }

  int alive_degree(std::uint32_t mask, int v) const {
    return std::popcount(adj_mask[v] & mask);
  }

  std::vector<std::uint32_t> components(std::uint32_t mask) const {
    std::vector<std::uint32_t> out;
    std::uint32_t left = mask;
    while (left) {
      int s = std::countr_zero(left);
      std::uint32_t comp = 0, frontier = 1u << s;
      while (frontier) {
        comp |= frontier;
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= adj_mask[v] & mask & ~comp;
        }
        frontier = next;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  bool is_forest(std::uint32_t mask) const {
    int vertices = std::popcount(mask);
    int edges = 0;
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      edges += alive_degree(mask, v);
    }
    return edges / 2 == vertices - static_cast<int>(components(mask).size());
  }

  bool is_cycle(std::uint32_t mask) const {
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (alive_degree(mask, v) != 2) return false;
    }
    return components(mask).size() == 1 && std::popcount(mask) >= 3;
  }

  // Adversary chain values over a rooted spanning tree; exact for forests.
  bool tree_true(std::uint32_t mask, const std::vector<int>& sizes) const {
    std::vector<int> t(g.n, 0);
    for (std::uint32_t comp : components(mask)) {
      int root = std::countr_zero(comp);
      // iterative post-order
      std::vector<int> order, stack{root};
      std::vector<int> parent(g.n, -1);
      std::vector<char> seen(g.n, 0);
      seen[root] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        std::uint32_t nb = adj_mask[v] & comp;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          if (!seen[u]) {
            seen[u] = 1;
            parent[u] = v;
            stack.push_back(u);
          }
        }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int forcing = 0;
        std::uint32_t nb = adj_mask[v] & comp;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          if (parent[u] == v && t[u] == 1) ++forcing;
        }
        t[v] = sizes[v] - forcing;
        if (t[v] <= 0) return false;
      }
    }
    return true;
  }

  // Lists realizing the adversary strategy at the first failing vertex.
  void tree_falsify(std::uint32_t mask, const std::vector<int>& sizes,
                    ListAssignment& lists) const {
    int root = std::countr_zero(mask);
    std::vector<int> order, stack{root};
    std::vector<int> parent(g.n, -1);
    std::vector<char> seen(g.n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      std::uint32_t nb = adj_mask[v] & mask;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          stack.push_back(u);
        }
      }
    }
    int fresh = 0;
    std::vector<int> t(g.n, 0);
    std::vector<int> forced_color(g.n, -1);
    int failing = -1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::vector<int> forced_children;
      std::uint32_t nb = adj_mask[v] & mask;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (parent[u] == v && t[u] == 1) forced_children.push_back(u);
      }
      lists[v].clear();
      for (int u : forced_children) lists[v].push_back(forced_color[u]);
      while (static_cast<int>(lists[v].size()) < sizes[v])
        lists[v].push_back(fresh++);
      if (static_cast<int>(lists[v].size()) > sizes[v])
        lists[v].resize(sizes[v]);  // enough forced colors alone kill v
      t[v] = sizes[v] - static_cast<int>(forced_children.size());
      if (t[v] == 1) forced_color[v] = lists[v].back();
      if (t[v] <= 0) {
        failing = v;
        break;
      }
    }
    // Vertices outside the failed subtree get disjoint fresh lists.
    for (int v = 0; v < g.n; ++v) {
      if (!((mask >> v) & 1)) continue;
      if (!lists[v].empty()) continue;
      for (int i = 0; i < sizes[v]; ++i) lists[v].push_back(fresh++);
    }
    (void)failing;
  }

  bool decide(std::uint32_t mask, const std::vector<int>& sizes) {
    if (mask == 0) return true;
    auto key = std::make_pair(mask, pack(mask, sizes));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = decide_impl(mask, sizes);
    memo.emplace(key, result);
    return result;
  }

  bool decide_impl(std::uint32_t mask, const std::vector<int>& sizes) {
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] <= 0) return false;
    }
    auto comps = components(mask);
    if (comps.size() > 1) {
      for (std::uint32_t comp : comps)
        if (!decide(comp, sizes)) return false;
      return true;
    }
    // slack deletion
    m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] > alive_degree(mask, v)) return decide(mask & ~(1u << v), sizes);
    }
    // forced singleton
    m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] == 1) {
        std::vector<int> sub = sizes;
        std::uint32_t nb = adj_mask[v] & mask;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          sub[u] -= 1;
        }
        return decide(mask & ~(1u << v), sub);
      }
    }
    if (is_forest(mask)) return tree_true(mask, sizes);
    if (is_cycle(mask)) {
      // all sizes >= 2 at this point
      bool any_three = false;
      std::uint32_t mm = mask;
      while (mm) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        if (sizes[v] >= 3) any_three = true;
      }
      if (any_three || std::popcount(mask) % 2 == 0) return true;
      return false;  // odd cycle, all lists of size 2: take all lists equal
    }
    if (hit_pattern_split(mask, sizes)) return true;
    return enumerate(mask, sizes) == std::nullopt;
  }

  // One-sided rule: pick a center v. Whatever the lists are, the pattern of
  // intersections with L(v) is dominated by a maximal profile, and it
  // suffices that for every maximal profile some color of v leaves a reduced
  // instance that is itself always-colorable.
  bool hit_pattern_split(std::uint32_t mask, const std::vector<int>& sizes) {
    std::vector<int> order;
    std::uint32_t m = mask;
    while (m) {
      order.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
      return a < b;
    });
    for (int v : order) {
      const int sv = sizes[v];
      if (sv < 1 || sv > 6) continue;
      std::vector<int> nbrs;
      std::uint32_t nb = adj_mask[v] & mask;
      while (nb) {
        nbrs.push_back(std::countr_zero(nb));
        nb &= nb - 1;
      }
      if (nbrs.size() > 8) continue;

      std::vector<std::vector<std::uint8_t>> profile_options(nbrs.size());
      double combos = 1;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        int take = std::min(sizes[nbrs[i]], sv);
        for (std::uint8_t sub = 0; sub < (1u << sv); ++sub)
          if (std::popcount(sub) == take) profile_options[i].push_back(sub);
        combos *= static_cast<double>(profile_options[i].size());
      }
      if (combos > 2e6) continue;

      std::map<std::uint32_t, bool> h_cache;  // neighbor-hit mask -> decide()
      auto reduced_ok = [&](std::uint32_t hits) {
        if (auto it = h_cache.find(hits); it != h_cache.end()) return it->second;
        std::vector<int> sub = sizes;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          if ((hits >> i) & 1) sub[nbrs[i]] -= 1;
        bool ok = false;
        try {
          ok = decide(mask & ~(1u << v), sub);
        } catch (const TooLargeError&) {
          ok = false;
        }
        h_cache.emplace(hits, ok);
        return ok;
      };

      std::vector<std::size_t> idx(nbrs.size(), 0);
      bool all_profiles_ok = true;
      while (all_profiles_ok) {
        bool some_color_ok = false;
        for (int a = 0; a < sv && !some_color_ok; ++a) {
          std::uint32_t hits = 0;
          for (std::size_t i = 0; i < nbrs.size(); ++i)
            if ((profile_options[i][idx[i]] >> a) & 1) hits |= 1u << i;
          some_color_ok = reduced_ok(hits);
        }
        if (!some_color_ok) {
          all_profiles_ok = false;
          break;
        }
        // next profile combination
        std::size_t i = 0;
        for (; i < nbrs.size(); ++i) {
          if (++idx[i] < profile_options[i].size()) break;
          idx[i] = 0;
        }
        if (i == nbrs.size()) break;
      }
      if (all_profiles_ok && !nbrs.empty()) return true;
    }
    return false;
  }

  // Canonical first-appearance enumeration over the alive vertices; returns
  // an uncolorable assignment or nullopt when every assignment is colorable.
  std::optional<ListAssignment> enumerate(std::uint32_t mask,
                                          const std::vector<int>& sizes) {
    std::vector<int> verts;
    std::uint32_t m = mask;
    while (m) {
      verts.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    const int k = static_cast<int>(verts.size());
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < k; ++i) local[verts[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
      for (int u : g.adj[verts[i]])
        if (local[u] > i) edges.emplace_back(i, local[u]);
    ColorGraph sub = ColorGraph::from_edges(k, edges);

    ListAssignment lists(k);
    std::optional<ListAssignment> found;

    std::function<void(int, int)> rec = [&](int i, int used) {
      if (found) return;
      if (++nodes > budget)
        throw TooLargeError("assignment enumeration budget exceeded");
      if (i == k) {
        if (forbid_all_equal) {
          bool all_equal = true;
          for (int j = 1; j < k; ++j)
            if (lists[j] != lists[0]) all_equal = false;
          if (all_equal) return;
        }
        if (!l_colorable(sub, lists)) {
          found = lists;
        }
        return;
      }
      const int s = sizes[verts[i]];
      // j new colors (appended in first-appearance order), s-j old ones
      for (int j = 0; j <= s; ++j) {
        int old_needed = s - j;
        if (old_needed > used) continue;
        std::vector<int> pick(old_needed);
        std::function<void(int, int)> choose_old = [&](int pos, int from) {
          if (found) return;
          if (pos == old_needed) {
            lists[i].clear();
            lists[i].insert(lists[i].end(), pick.begin(), pick.end());
            for (int t = 0; t < j; ++t) lists[i].push_back(used + t);
            rec(i + 1, used + j);
            return;
          }
          for (int c = from; c <= used - (old_needed - pos); ++c) {
            pick[pos] = c;
            choose_old(pos + 1, c + 1);
          }
        };
        choose_old(0, 0);
        if (found) return;
      }
    };
    rec(0, 0);
    if (!found) return std::nullopt;

    ListAssignment out(g.n);
    for (int i = 0; i < k; ++i) out[verts[i]] = (*found)[i];
    return out;
  }

  // Rebuilds an uncolorable assignment along the same reduction path that
  // made decide() return false.
  ListAssignment falsify(std::uint32_t mask, const std::vector<int>& sizes) {
    ListAssignment lists(g.n);
    falsify_into(mask, sizes, lists);
    return lists;
  }

  static int max_color(const ListAssignment& lists) {
    int mx = -1;
    for (const auto& l : lists)
      for (int c : l) mx = std::max(mx, c);
    return mx;
  }

  void fill_fresh(std::uint32_t mask, const std::vector<int>& sizes,
                  ListAssignment& lists) const {
    int fresh = max_color(lists) + 1;
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (!lists[v].empty()) continue;
      for (int i = 0; i < sizes[v]; ++i) lists[v].push_back(fresh++);
    }
  }

  void falsify_into(std::uint32_t mask, const std::vector<int>& sizes,
                    ListAssignment& lists) {
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] <= 0) {
        lists[v].clear();  // empty list: immediately uncolorable
        fill_fresh(mask & ~(1u << v), sizes, lists);
        return;
      }
    }
    auto comps = components(mask);
    if (comps.size() > 1) {
      for (std::uint32_t comp : comps) {
        if (!decide(comp, sizes)) {
          falsify_into(comp, sizes, lists);
          fill_fresh(mask & ~comp, sizes, lists);
          return;
        }
      }
      throw std::logic_error("falsify: no failing component");
    }
    m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] > alive_degree(mask, v)) {
        falsify_into(mask & ~(1u << v), sizes, lists);
        int fresh = max_color(lists) + 1;
        for (int i = 0; i < sizes[v]; ++i) lists[v].push_back(fresh++);
        return;
      }
    }
    m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (sizes[v] == 1) {
        std::vector<int> sub = sizes;
        std::uint32_t nb = adj_mask[v] & mask;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          sub[u] -= 1;
        }
        falsify_into(mask & ~(1u << v), sub, lists);
        int planted = max_color(lists) + 1;
        lists[v] = {planted};
        nb = adj_mask[v] & mask;
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          lists[u].push_back(planted);
        }
        return;
      }
    }
    if (is_forest(mask)) {
      tree_falsify(mask, sizes, lists);
      return;
    }
    if (is_cycle(mask)) {
      std::uint32_t mm = mask;
      while (mm) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        lists[v] = {0, 1};
      }
      return;
    }
    auto bad = enumerate(mask, sizes);
    if (!bad) throw std::logic_error("falsify: enumeration found no counterexample");
    for (int v = 0; v < g.n; ++v)
      if (!(*bad)[v].empty()) lists[v] = (*bad)[v];
  }
};

// The all-equal restriction only makes sense for the whole instance, so the
// recursive engine always runs unrestricted; the restriction is applied to
// the witness here, falling back to a filtered top-level enumeration (or the
// cycle closed form) when the only witnesses are all-equal assignments.
ChoosabilityResult run_decide(const ColorGraph& g, const std::vector<int>& sizes,
                              bool forbid_all_equal) {
  if (g.n > 31) throw TooLargeError("graph too large for the decision engine");
  Decide engine(g, false, 20'000'000);
  std::uint32_t full = g.n == 31 ? 0x7fffffffu : ((1u << g.n) - 1);
  ChoosabilityResult out;
  out.always = engine.decide(full, sizes);
  if (out.always) return out;

  engine.nodes = 0;  // the witness pass re-traces the same reductions
  ListAssignment bad = engine.falsify(full, sizes);
  if (forbid_all_equal) {
    bool all_equal = g.n > 1;
    for (int v = 1; v < g.n; ++v)
      if (bad[v] != bad[0]) all_equal = false;
    if (all_equal) {
      bool plain_odd_cycle = engine.is_cycle(full);
      for (int v = 0; v < g.n; ++v)
        if (sizes[v] != 2) plain_odd_cycle = false;
      if (plain_odd_cycle) {
        out.always = true;  // unequal 2-lists on a cycle always color
        return out;
      }
      Decide filtered(g, true, 20'000'000);
      auto other = filtered.enumerate(full, sizes);
      if (!other) {
        out.always = true;
        return out;
      }
      bad = *other;
    }
  }
  for (auto& l : bad) std::sort(l.begin(), l.end());
  if (l_colorable(g, bad))
    throw std::logic_error("internal error: counterexample is colorable");
  out.bad_assignment = std::move(bad);
  return out;
}

}  // namespace

ChoosabilityResult k_choosable(const ColorGraph& g, int k) {
  if (k < 1 || k > 12) throw TooLargeError("list size out of supported range");
  int cap = k <= 3 ? 10 : 13;
  if (g.n > cap)
    throw TooLargeError("k-choosability cap exceeded: " + std::to_string(g.n) +
                        " vertices, cap " + std::to_string(cap) +
                        " for k=" + std::to_string(k));
  return run_decide(g, std::vector<int>(g.n, k), false);
}

ChoosabilityResult residual_always_colorable(const ResidualSpec& spec) {
  if (spec.graph.n > 13)
    throw TooLargeError("residual gadget cap is 13 vertices");
  if (static_cast<int>(spec.sizes.size()) != spec.graph.n)
    throw MissingListError();
  for (int s : spec.sizes)
    if (s < 1 || s > 4) throw std::invalid_argument("residual sizes must lie in 1..4");
  return run_decide(spec.graph, spec.sizes, spec.forbid_all_equal_lists);
}

std::optional<ListAssignment> sample_assignment_failures(const ColorGraph& g,
                                                         int k, int samples,
                                                         unsigned seed) {
  std::mt19937 rng(seed);
  const int universe = std::max(1, k * g.n);
  std::vector<int> colors(universe);
  std::iota(colors.begin(), colors.end(), 0);
  for (int s = 0; s < samples; ++s) {
    ListAssignment lists(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::shuffle(colors.begin(), colors.end(), rng);
      lists[v].assign(colors.begin(), colors.begin() + k);
      std::sort(lists[v].begin(), lists[v].end());
    }
    if (!l_colorable(g, lists)) return lists;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gadgets
// ---------------------------------------------------------------------------

ColorGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return ColorGraph::from_edges(n, edges);
}

ColorGraph w5_graph() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                         {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  return ColorGraph::from_edges(5, edges);
}

std::vector<int> w5_gadget_sizes(bool adjacent_pair, int hub_size) {
  if (adjacent_pair) return {2, 2, 3, 3, hub_size};
  return {2, 3, 2, 3, hub_size};
}

ColorGraph quad_fan_graph(int quads, bool closed) {
  std::vector<std::pair<int, int>> edges;
  if (closed) {
    // center 0, spokes 1..q, outer corners q+1..2q
    for (int i = 1; i <= quads; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= quads; ++i) {
      int b = quads + i;
      edges.emplace_back(i, b);
      edges.emplace_back(b, i % quads + 1);
    }
    return ColorGraph::from_edges(2 * quads + 1, edges);
  }
  // center 0, spokes 1..q+1, outer corners q+2..2q+1
  for (int i = 1; i <= quads + 1; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= quads; ++i) {
    int b = quads + 1 + i;
    edges.emplace_back(i, b);
    edges.emplace_back(b, i + 1);
  }
  return ColorGraph::from_edges(2 * quads + 2, edges);
}

std::vector<int> quad_fan_sizes(int quads, bool closed) {
  std::vector<int> sizes;
  if (closed) {
    sizes.assign(2 * quads + 1, 2);
    sizes[0] = 4;
    for (int i = 1; i <= quads; ++i) sizes[i] = 3;
    return sizes;
  }
  sizes.assign(2 * quads + 2, 2);
  sizes[0] = 4;
  for (int i = 2; i <= quads; ++i) sizes[i] = 3;  // interior spokes
  return sizes;
}

std::vector<GadgetReportEntry> verify_gadget_lemmas() {
  std::vector<GadgetReportEntry> out;

  for (int n = 3; n <= 8; ++n) {
    ResidualSpec spec{cycle_graph(n), std::vector<int>(n, 2), true};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "cycle-" + std::to_string(n) + "-unequal-2-lists";
    e.description = "cycle on " + std::to_string(n) +
                    " vertices, all lists of size 2, at least two lists distinct";
    e.claim = "always-colorable";
    e.result = res.always;
    e.agrees = res.always;
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }

  {
    ResidualSpec spec{w5_graph(), w5_gadget_sizes(true), false};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "w5-residual";
    e.description =
        "wheel on five vertices; rim sizes (2,2,3,3) with the 2s adjacent, hub 4";
    e.claim = "always-colorable";
    e.result = res.always;
    e.agrees = res.always;
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }
  {
    ResidualSpec spec{w5_graph(), w5_gadget_sizes(false), false};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "w5-residual-opposite-pair";
    e.description = "same wheel with the two size-2 rim vertices non-adjacent";
    e.claim = "none";
    e.result = res.always;
    e.agrees = true;
    e.note = "no claimed outcome; recorded as data";
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }
  {
    ResidualSpec spec{quad_fan_graph(6, true), quad_fan_sizes(6, true), false};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "six-quad-wheel";
    e.description =
        "six quadrilaterals around a center: center size 4, spokes 3, ring 2";
    e.claim = "always-colorable";
    e.result = res.always;
    e.agrees = res.always;
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }
  {
    ResidualSpec spec{quad_fan_graph(5, false), quad_fan_sizes(5, false), false};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "five-quad-fan";
    e.description =
        "five quadrilaterals in an open fan: center 4, end spokes 2, interior "
        "spokes 3, ring 2";
    e.claim = "always-colorable";
    e.result = res.always;
    e.agrees = res.always;
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }
  {
    // Degree-5 pigeonhole: any 3 of 5 faces in cyclic order contain two
    // consecutive ones; exhaustively checked.
    bool ok = true;
    for (int mask = 0; mask < 32; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
      bool consecutive = false;
      for (int i = 0; i < 5; ++i)
        if (((mask >> i) & 1) && ((mask >> ((i + 1) % 5)) & 1)) consecutive = true;
      if (!consecutive) ok = false;
    }
    GadgetReportEntry e;
    e.name = "five-vertex-face-pigeonhole";
    e.description =
        "three of the five faces around a 5-vertex always include an adjacent "
        "pair";
    e.claim = "pigeonhole";
    e.result = ok;
    e.agrees = ok;
    e.note = "combinatorial step only; the rest follows from the shared-edge "
             "degree lemma";
    out.push_back(std::move(e));
  }
  {
    ResidualSpec spec{w5_graph(), w5_gadget_sizes(true, 3), false};
    auto res = residual_always_colorable(spec);
    GadgetReportEntry e;
    e.name = "w5-residual-hub-3-control";
    e.description = "control run: hub budget reduced from 4 to 3";
    e.claim = "none";
    e.result = res.always;
    e.agrees = true;
    e.note = "no claimed outcome; recorded as data";
    e.counterexample = res.bad_assignment;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace planar
