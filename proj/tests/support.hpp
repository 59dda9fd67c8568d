#pragma once

// Generators and brute-force helpers shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gfl/coloring.hpp"
#include "gfl/detect.hpp"
#include "gfl/gallai.hpp"

namespace gfl::testing {

using Rng = std::mt19937_64;

inline auto uniform_int(Rng &rng, unsigned lo, unsigned hi) -> unsigned {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline auto random_coloring(Rng &rng, Vertex n, unsigned k) -> ColoredCompleteGraph {
  ColoredCompleteGraph g(n, k, 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.set_color(u, v, static_cast<Color>(uniform_int(rng, 1, k)));
  return g;
}

/// Split n into t positive sizes.
inline auto random_composition(Rng &rng, unsigned n, unsigned t) -> std::vector<unsigned> {
  std::vector<unsigned> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1u);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(t - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<unsigned> sizes;
  unsigned prev = 0;
  for (auto c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

/// Random 2-coloring of K_t in colors a and b (palette k).
inline auto random_two_coloring(Rng &rng, Vertex t, Color a, Color b, unsigned k)
    -> ColoredCompleteGraph {
  ColoredCompleteGraph g(t, k, a);
  for (Vertex u = 0; u < t; ++u)
    for (Vertex v = u + 1; v < t; ++v)
      if (rng() & 1)
        g.set_color(u, v, b);
  return g;
}

/// Random rainbow-free coloring by nested blow-ups of 2-colored templates.
inline auto random_gallai(Rng &rng, Vertex n, unsigned k) -> ColoredCompleteGraph {
  if (n == 1)
    return ColoredCompleteGraph(1, k, 1);
  auto t = uniform_int(rng, 2, std::min<unsigned>(n, 5));
  auto a = static_cast<Color>(uniform_int(rng, 1, k));
  auto b = k == 1 ? a : static_cast<Color>(uniform_int(rng, 1, k));
  auto reduced = random_two_coloring(rng, t, a, b, k);
  std::vector<ColoredCompleteGraph> parts;
  for (auto s : random_composition(rng, n, t))
    parts.push_back(random_gallai(rng, s, k));
  return blow_up(reduced, parts);
}

/// Every 2-coloring of K_n over palette {1,2}, indexed by the bits of `mask`
/// over edges in row-major order (bit set = color 2).
inline auto coloring_from_mask(Vertex n, std::uint64_t mask) -> ColoredCompleteGraph {
  ColoredCompleteGraph g(n, 2, 1);
  std::size_t i = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++i)
      if (mask >> i & 1)
        g.set_color(u, v, 2);
  return g;
}

inline auto max_degree(std::span<const Edge> edges, Vertex n) -> unsigned {
  std::vector<unsigned> deg(n, 0);
  for (auto e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

/// Three pairwise disjoint edges, by trying every triple.
inline auto has_3k2(std::span<const Edge> edges) -> bool {
  auto disjoint = [](Edge a, Edge b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!disjoint(edges[i], edges[j]))
        continue;
      for (std::size_t l = j + 1; l < edges.size(); ++l)
        if (disjoint(edges[i], edges[l]) && disjoint(edges[j], edges[l]))
          return true;
    }
  return false;
}

/// Embedding by brute force: an injective map of the used vertices into C4,
/// C5 or 2K3 that sends every edge to an edge.
inline auto brute_embeds(std::span<const Edge> edges) -> bool {
  std::vector<Vertex> used;
  for (auto e : edges) {
    used.push_back(e.u);
    used.push_back(e.v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  auto cycle_adj = [](unsigned len, unsigned offset, std::vector<std::vector<bool>> &adj) {
    for (unsigned i = 0; i < len; ++i) {
      auto a = offset + i, b = offset + (i + 1) % len;
      adj[a][b] = adj[b][a] = true;
    }
  };
  std::vector<std::vector<std::vector<bool>>> targets;
  for (unsigned len : {4u, 5u}) {
    std::vector<std::vector<bool>> adj(len, std::vector<bool>(len, false));
    cycle_adj(len, 0, adj);
    targets.push_back(adj);
  }
  {
    std::vector<std::vector<bool>> adj(6, std::vector<bool>(6, false));
    cycle_adj(3, 0, adj);
    cycle_adj(3, 3, adj);
    targets.push_back(adj);
  }

  for (const auto &adj : targets) {
    auto size = static_cast<unsigned>(adj.size());
    if (used.size() > size)
      continue;
    // Choose images for `used` in order via permutations of the target.
    std::vector<unsigned> perm(size);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      bool ok = true;
      for (auto e : edges) {
        auto iu = std::lower_bound(used.begin(), used.end(), e.u) - used.begin();
        auto iv = std::lower_bound(used.begin(), used.end(), e.v) - used.begin();
        if (!adj[perm[iu]][perm[iv]]) {
          ok = false;
          break;
        }
      }
      if (ok)
        return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

/// Two parts X (vertices 0..|X|-1) and Y joined completely in color c.
inline auto join(const ColoredCompleteGraph &x, const ColoredCompleteGraph &y, Color c)
    -> ColoredCompleteGraph {
  auto k = std::max(x.palette(), y.palette());
  std::vector<ColoredCompleteGraph> parts{x.with_palette(k), y.with_palette(k)};
  return blow_up(ColoredCompleteGraph(2, k, c), parts);
}

/// Random coloring of K_n in colors other than c, over palette k >= 2.
inline auto random_avoiding(Rng &rng, Vertex n, unsigned k, Color c) -> ColoredCompleteGraph {
  Color base = c == 1 ? 2 : 1;
  ColoredCompleteGraph g(n, k, base);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Color col;
      do
        col = static_cast<Color>(uniform_int(rng, 1, k));
      while (col == c);
      g.set_color(u, v, col);
    }
  return g;
}

/// A random injective placement of `count` vertex labels out of 0..n-1.
inline auto random_vertices(Rng &rng, Vertex n, unsigned count) -> std::vector<Vertex> {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0u);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

// ---- property-suite instances ----
// Each generator returns a graph in which the stated hypothesis holds; the
// property is that find_mono_fan(g, m, c) is present.

struct PropertyInstance {
  ColoredCompleteGraph g;
  unsigned m;
  Color c;
};

/// 3K2: X, Y joined in c, X nonempty, Y has three disjoint c-edges.
inline auto instance_3k2(Rng &rng) -> PropertyInstance {
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  auto nx = uniform_int(rng, 1, 6), ny = uniform_int(rng, 6, 12);
  auto x = random_coloring(rng, nx, k);
  auto y = random_coloring(rng, ny, k);
  auto vs = random_vertices(rng, ny, 6);
  for (unsigned i = 0; i < 3; ++i)
    y.set_color(vs[2 * i], vs[2 * i + 1], c);
  return {join(x, y, c), 3, c};
}

/// Two edges at a vertex: X, Y joined in c, |X| >= 3, |Y| >= 4, a vertex
/// of X with two c-edges inside X, and a c-edge inside Y.
inline auto instance_deg2(Rng &rng) -> PropertyInstance {
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  auto nx = uniform_int(rng, 3, 8), ny = uniform_int(rng, 4, 8);
  auto x = random_avoiding(rng, nx, k, c);
  auto y = random_avoiding(rng, ny, k, c);
  auto xs = random_vertices(rng, nx, 3);
  x.set_color(xs[0], xs[1], c);
  x.set_color(xs[0], xs[2], c);
  auto ys = random_vertices(rng, ny, 2);
  y.set_color(ys[0], ys[1], c);
  return {join(x, y, c), 3, c};
}

/// Three edges at a vertex: X, Y joined in c, |Y| >= 3, a vertex of X with
/// three c-edges inside X.
inline auto instance_deg3(Rng &rng) -> PropertyInstance {
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  auto nx = uniform_int(rng, 4, 8), ny = uniform_int(rng, 3, 8);
  auto x = random_avoiding(rng, nx, k, c);
  auto y = random_coloring(rng, ny, k);
  auto xs = random_vertices(rng, nx, 4);
  for (unsigned i = 1; i < 4; ++i)
    x.set_color(xs[0], xs[i], c);
  return {join(x, y, c), 3, c};
}

/// Two disjoint edges: X, Y joined in c, |X| >= 5, two disjoint c-edges in X,
/// a c-edge in Y.
inline auto instance_2disjoint(Rng &rng) -> PropertyInstance {
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  auto nx = uniform_int(rng, 5, 9), ny = uniform_int(rng, 2, 8);
  auto x = random_avoiding(rng, nx, k, c);
  auto y = random_avoiding(rng, ny, k, c);
  auto xs = random_vertices(rng, nx, 4);
  x.set_color(xs[0], xs[1], c);
  x.set_color(xs[2], xs[3], c);
  auto ys = random_vertices(rng, ny, 2);
  y.set_color(ys[0], ys[1], c);
  return {join(x, y, c), 3, c};
}

/// Small parts: at least 4n-3 vertices in Gallai parts of order
/// at most n-1, every edge between parts in color c.
inline auto instance_mono_small_parts(Rng &rng) -> PropertyInstance {
  unsigned n = uniform_int(rng, 2, 5);
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  unsigned total = 4 * n - 3 + uniform_int(rng, 0, 4);
  std::vector<ColoredCompleteGraph> parts;
  unsigned left = total;
  while (left > 0) {
    auto s = std::min(left, uniform_int(rng, 1, n - 1));
    parts.push_back(random_gallai(rng, s, k));
    left -= s;
  }
  auto t = static_cast<Vertex>(parts.size());
  return {blow_up(ColoredCompleteGraph(t, k, c), parts), n, c};
}

/// 2K2: a vertex joined in c to a part A containing a c-colored 2K2.
inline auto instance_f2_claim(Rng &rng) -> PropertyInstance {
  unsigned k = uniform_int(rng, 2, 4);
  auto c = static_cast<Color>(uniform_int(rng, 1, k));
  auto na = uniform_int(rng, 4, 9);
  auto a = random_coloring(rng, na, k);
  auto vs = random_vertices(rng, na, 4);
  a.set_color(vs[0], vs[1], c);
  a.set_color(vs[2], vs[3], c);
  return {join(ColoredCompleteGraph(1, k, 1), a, c), 2, c};
}

} // namespace gfl::testing
