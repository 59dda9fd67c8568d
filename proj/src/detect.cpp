#include "gfl/detect.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace gfl {

namespace {

void check_fan_args(unsigned m, Color c, unsigned k) {
  if (m < 1)
    throw ParamError("fan order must be at least 1");
  if (c < 1 || c > k)
    throw PaletteError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(k));
}

// Exact test for a matching of size `need` among `live`. On success appends
// exactly `need` edges to `out`; on failure leaves `out` untouched.
auto exact_matching(const ColorAdjacency &adj, Color c, const Bitset &live, unsigned need,
                    EdgeList &out) -> bool {
  if (need == 0)
    return true;

  // Drop vertices with no neighbor left.
  Bitset active(live.size());
  std::size_t active_count = 0;
  live.for_each([&](std::size_t v) {
    if (live.count_and(adj.row(c, static_cast<Vertex>(v))) > 0) {
      active.set(v);
      ++active_count;
    }
  });
  if (active_count < 2 * static_cast<std::size_t>(need))
    return false;

  // A vertex of degree >= 2*need-1 extends any (need-1)-matching of the rest.
  std::size_t heavy = Bitset::npos;
  active.for_each([&](std::size_t v) {
    if (heavy == Bitset::npos &&
        active.count_and(adj.row(c, static_cast<Vertex>(v))) >= 2 * std::size_t{need} - 1)
      heavy = v;
  });
  if (heavy != Bitset::npos) {
    Bitset rest = active;
    rest.reset(heavy);
    auto mark = out.size();
    if (!exact_matching(adj, c, rest, need - 1, out))
      return false;
    Bitset free_nbrs = active;
    free_nbrs.reset(heavy);
    for (auto i = mark; i < out.size(); ++i) {
      free_nbrs.reset(out[i].u);
      free_nbrs.reset(out[i].v);
    }
    auto w = free_nbrs.find_and_from(adj.row(c, static_cast<Vertex>(heavy)), 0);
    if (w == Bitset::npos)
      throw InternalInconsistency("heavy vertex lost all free neighbors");
    out.emplace_back(static_cast<Vertex>(heavy), static_cast<Vertex>(w));
    return true;
  }

  // Branch on the lowest active vertex: matched to each neighbor, or unmatched.
  auto a = active.first();
  Bitset nbrs = active;
  nbrs &= adj.row(c, static_cast<Vertex>(a));
  for (auto b = nbrs.first(); b != Bitset::npos; b = nbrs.find_from(b + 1)) {
    Bitset rest = active;
    rest.reset(a);
    rest.reset(b);
    out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (exact_matching(adj, c, rest, need - 1, out))
      return true;
    out.pop_back();
  }
  Bitset rest = active;
  rest.reset(a);
  return exact_matching(adj, c, rest, need, out);
}

} // namespace

ColorAdjacency::ColorAdjacency(const ColoredCompleteGraph &g)
    : n_(g.order()), k_(g.palette()), wpr_((g.order() + 63) / 64),
      rows_(static_cast<std::size_t>(g.palette()) * g.order() * ((g.order() + 63) / 64), 0) {
  auto entries = g.entries();
  std::size_t i = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v, ++i) {
      auto base = static_cast<std::size_t>(entries[i] - 1) * n_;
      rows_[(base + u) * wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
      rows_[(base + v) * wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
}

auto find_matching(const ColorAdjacency &adj, Color c, const Bitset &candidates, unsigned m)
    -> std::optional<EdgeList> {
  EdgeList greedy;
  Bitset free = candidates;
  for (auto u = free.first(); u != Bitset::npos; u = free.find_from(u + 1)) {
    auto w = free.find_and_from(adj.row(c, static_cast<Vertex>(u)), u + 1);
    if (w == Bitset::npos)
      continue;
    greedy.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    free.reset(u);
    free.reset(w);
    if (greedy.size() >= m)
      return greedy;
  }
  // A maximal matching is at least half of a maximum one.
  if (2 * greedy.size() < m)
    return std::nullopt;

  EdgeList exact;
  if (!exact_matching(adj, c, candidates, m, exact))
    return std::nullopt;
  std::sort(exact.begin(), exact.end());
  return exact;
}

auto find_rainbow_triangle(const ColoredCompleteGraph &g) -> std::optional<RainbowTriangle> {
  const auto n = g.order();
  const auto entries = g.entries();
  for (Vertex u = 0; u < n; ++u) {
    // Unsigned wrap is intended: base + w lands inside the row for w > u.
    const std::size_t base_u = g.row_offset(u) - (u + 1);
    for (Vertex v = u + 1; v < n; ++v) {
      const Color a = entries[base_u + v];
      const std::size_t base_v = g.row_offset(v) - (v + 1);
      for (Vertex w = v + 1; w < n; ++w) {
        const Color b = entries[base_u + w];
        const Color c = entries[base_v + w];
        if (a != b && b != c && a != c)
          return RainbowTriangle{u, v, w};
      }
    }
  }
  return std::nullopt;
}

auto find_mono_fan(const ColorAdjacency &adj, unsigned m, Color c) -> std::optional<MonoFan> {
  check_fan_args(m, c, adj.palette());
  const auto n = adj.order();
  for (Vertex v = 0; v < n; ++v) {
    Bitset nbrs = adj.neighbors(c, v);
    if (nbrs.count() < 2 * std::size_t{m})
      continue;
    if (auto matching = find_matching(adj, c, nbrs, m))
      return MonoFan{c, v, std::move(*matching)};
  }
  return std::nullopt;
}

auto find_mono_fan(const ColoredCompleteGraph &g, unsigned m, Color c) -> std::optional<MonoFan> {
  check_fan_args(m, c, g.palette());
  return find_mono_fan(ColorAdjacency(g), m, c);
}

auto find_any_mono_fan(const ColorAdjacency &adj, unsigned m) -> std::optional<MonoFan> {
  for (unsigned c = 1; c <= adj.palette(); ++c)
    if (auto fan = find_mono_fan(adj, m, static_cast<Color>(c)))
      return fan;
  return std::nullopt;
}

auto find_any_mono_fan(const ColoredCompleteGraph &g, unsigned m) -> std::optional<MonoFan> {
  return find_any_mono_fan(ColorAdjacency(g), m);
}

auto max_fan_order(const ColorAdjacency &adj, Color c) -> unsigned {
  check_fan_args(1, c, adj.palette());
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < adj.order(); ++v)
    max_deg = std::max(max_deg, adj.neighbors(c, v).count());
  // Fan presence is monotone in m, so binary search the largest present order.
  unsigned lo = 0;
  auto hi = static_cast<unsigned>(max_deg / 2);
  while (lo < hi) {
    unsigned mid = lo + (hi - lo + 1) / 2;
    if (find_mono_fan(adj, mid, c))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

auto max_fan_order(const ColoredCompleteGraph &g, Color c) -> unsigned {
  check_fan_args(1, c, g.palette());
  return max_fan_order(ColorAdjacency(g), c);
}

auto count_useful_colors(const ColoredCompleteGraph &g) -> unsigned {
  const auto n = g.order();
  const auto k = g.palette();
  std::vector<std::uint32_t> degree(static_cast<std::size_t>(k + 1) * n, 0);
  std::vector<bool> useful(k + 1, false);
  auto entries = g.entries();
  std::size_t i = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++i) {
      auto c = entries[i];
      auto du = ++degree[static_cast<std::size_t>(c) * n + u];
      auto dv = ++degree[static_cast<std::size_t>(c) * n + v];
      if (du >= 2 || dv >= 2)
        useful[c] = true;
    }
  return static_cast<unsigned>(std::count(useful.begin(), useful.end(), true));
}

auto brute_fan_oracle(const ColoredCompleteGraph &g, unsigned m, Color c)
    -> std::optional<MonoFan> {
  const auto n = g.order();
  if (n > oracle_max_order)
    throw OracleSizeError("brute fan oracle is limited to " + std::to_string(oracle_max_order) +
                          " vertices, got " + std::to_string(n));
  check_fan_args(m, c, g.palette());

  for (Vertex center = 0; center < n; ++center) {
    EdgeList triangles;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (a != center && b != center && g.color(center, a) == c && g.color(center, b) == c &&
            g.color(a, b) == c)
          triangles.emplace_back(a, b);

    // Every m-subset of pairwise disjoint triangle bases, in index order.
    EdgeList chosen;
    std::vector<bool> used(n, false);
    auto extend = [&](auto &&self, std::size_t from) -> bool {
      if (chosen.size() == m)
        return true;
      for (auto i = from; i < triangles.size(); ++i) {
        auto [a, b] = triangles[i];
        if (used[a] || used[b])
          continue;
        used[a] = used[b] = true;
        chosen.push_back(triangles[i]);
        if (self(self, i + 1))
          return true;
        chosen.pop_back();
        used[a] = used[b] = false;
      }
      return false;
    };
    if (extend(extend, 0))
      return MonoFan{c, center, chosen};
  }
  return std::nullopt;
}

auto embeds_in_c4_c5_2k3(std::span<const Edge> edges) -> bool {
  // The hosts have at most 6 edges and 6 non-isolated vertices.
  constexpr unsigned cap = 6;
  std::array<Edge, cap> list{};
  unsigned count = 0;
  for (auto e : edges) {
    if (e.u == e.v)
      return false;
    if (std::find(list.begin(), list.begin() + count, e) != list.begin() + count)
      continue;
    if (count == cap)
      return false;
    list[count++] = e;
  }

  std::array<Vertex, cap> label{};
  std::array<unsigned, cap> degree{}, parent{};
  std::array<unsigned, 2 * cap> ends{};
  unsigned next = 0;
  auto id_of = [&](Vertex v) -> int {
    for (unsigned i = 0; i < next; ++i)
      if (label[i] == v)
        return static_cast<int>(i);
    if (next == cap)
      return -1;
    label[next] = v;
    parent[next] = next;
    return static_cast<int>(next++);
  };
  auto find = [&](unsigned x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned i = 0; i < count; ++i) {
    auto a = id_of(list[i].u), b = id_of(list[i].v);
    if (a < 0 || b < 0)
      return false;
    ends[2 * i] = static_cast<unsigned>(a);
    ends[2 * i + 1] = static_cast<unsigned>(b);
    if (++degree[a] > 2 || ++degree[b] > 2)
      return false;
    parent[find(a)] = find(b);
  }

  // Max degree <= 2: each component is a path or a cycle.
  std::array<unsigned, cap> comp_vertices{}, comp_edges{};
  for (unsigned v = 0; v < next; ++v)
    ++comp_vertices[find(v)];
  for (unsigned i = 0; i < count; ++i)
    ++comp_edges[find(ends[2 * i])];

  unsigned matching = 0;
  for (unsigned r = 0; r < next; ++r) {
    if (comp_vertices[r] == 0)
      continue;
    bool cycle = comp_edges[r] == comp_vertices[r];
    matching += cycle ? comp_vertices[r] / 2 : (comp_edges[r] + 1) / 2;
  }
  return matching <= 2;
}

auto VerifyReport::ok() const -> bool {
  if (rainbow)
    return false;
  return std::none_of(fans.begin(), fans.end(), [](const FanReport &f) { return f.fan.has_value(); });
}

auto verify(const ColoredCompleteGraph &g, unsigned m, bool check_rainbow, bool with_max_order)
    -> VerifyReport {
  if (m < 1)
    throw ParamError("fan order must be at least 1");
  VerifyReport report;
  if (check_rainbow)
    report.rainbow = find_rainbow_triangle(g);
  ColorAdjacency adj(g);
  for (unsigned c = 1; c <= g.palette(); ++c) {
    FanReport fan;
    fan.color = static_cast<Color>(c);
    fan.fan = find_mono_fan(adj, m, fan.color);
    if (with_max_order)
      fan.max_order = max_fan_order(adj, fan.color);
    report.fans.push_back(std::move(fan));
  }
  return report;
}

auto validate_certificate(const ColoredCompleteGraph &g, const Certificate &cert) -> bool {
  const auto n = g.order();
  if (const auto *tri = std::get_if<RainbowTriangle>(&cert)) {
    if (tri->a >= n || tri->b >= n || tri->c >= n || tri->a == tri->b || tri->b == tri->c ||
        tri->a == tri->c)
      return false;
    auto x = g.at(tri->a, tri->b), y = g.at(tri->a, tri->c), z = g.at(tri->b, tri->c);
    return x != y && y != z && x != z;
  }
  const auto &fan = std::get<MonoFan>(cert);
  if (fan.matching.empty() || fan.center >= n || fan.color < 1 || fan.color > g.palette())
    return false;
  std::vector<bool> used(n, false);
  used[fan.center] = true;
  for (auto [a, b] : fan.matching) {
    if (a >= n || b >= n || a == b || used[a] || used[b])
      return false;
    used[a] = used[b] = true;
    if (g.at(a, b) != fan.color || g.at(fan.center, a) != fan.color ||
        g.at(fan.center, b) != fan.color)
      return false;
  }
  return true;
}

} // namespace gfl
