#include "gfl/gallai.hpp"

#include <algorithm>
#include <numeric>

namespace gfl {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  auto find(unsigned x) -> unsigned {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  auto unite(unsigned a, unsigned b) -> bool {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    // Smaller root wins so roots stay the minimum vertex of their class.
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
    return true;
  }

private:
  std::vector<unsigned> parent_;
};

auto parts_from(UnionFind &uf, Vertex n) -> std::vector<std::vector<Vertex>> {
  std::vector<int> slot(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) {
    auto r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return parts;
}

// Fills between_colors and pair_colors from parts. Assumes validity.
void fill_colors(const ColoredCompleteGraph &g, GallaiPartition &p) {
  p.pair_colors.clear();
  std::vector<bool> seen(g.palette() + 1, false);
  for (unsigned i = 0; i < p.parts.size(); ++i)
    for (unsigned j = i + 1; j < p.parts.size(); ++j) {
      auto c = g.at(p.parts[i].front(), p.parts[j].front());
      p.pair_colors.push_back({i, j, c});
      seen[c] = true;
    }
  p.between_colors.clear();
  for (unsigned c = 1; c <= g.palette(); ++c)
    if (seen[c])
      p.between_colors.push_back(static_cast<Color>(c));
}

// Finest partition whose between-part edges use only colors a and b.
auto candidate_for(const ColoredCompleteGraph &g, Color a, Color b)
    -> std::vector<std::vector<Vertex>> {
  const auto n = g.order();
  UnionFind uf(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto c = g.at(u, v);
      if (c != a && c != b)
        uf.unite(u, v);
    }

  // Merge classes joined by more than one color until stable.
  std::vector<unsigned> root(n);
  std::vector<Color> seen(static_cast<std::size_t>(n) * n, no_color);
  bool merged = true;
  while (merged) {
    merged = false;
    for (Vertex v = 0; v < n; ++v)
      root[v] = uf.find(v);
    std::fill(seen.begin(), seen.end(), no_color);
    std::vector<std::pair<unsigned, unsigned>> to_merge;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        auto ru = root[u], rv = root[v];
        if (ru == rv)
          continue;
        auto &cell = seen[static_cast<std::size_t>(std::min(ru, rv)) * n + std::max(ru, rv)];
        auto c = g.at(u, v);
        if (cell == no_color)
          cell = c;
        else if (cell != c)
          to_merge.emplace_back(ru, rv);
      }
    for (auto [x, y] : to_merge)
      merged |= uf.unite(x, y);
  }
  return parts_from(uf, n);
}

} // namespace

RainbowPresent::RainbowPresent(RainbowTriangle t)
    : Error("rainbow triangle (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
            std::to_string(t.c) + ") present"),
      triangle_(t) {}

auto GallaiPartition::pair_color(unsigned i, unsigned j) const -> Color {
  if (i == j || i >= parts.size() || j >= parts.size())
    throw IndexError("bad part pair");
  if (i > j)
    std::swap(i, j);
  auto t = static_cast<unsigned>(parts.size());
  // Row-major offset of (i, j) among pairs i < j.
  auto idx = i * t - i * (i + 1) / 2 + (j - i - 1);
  if (idx >= pair_colors.size())
    throw PartitionShapeError("pair color table is incomplete");
  return pair_colors[idx].c;
}

auto find_gallai_partition(const ColoredCompleteGraph &g) -> GallaiPartition {
  if (g.order() < 2)
    throw ParamError("a Gallai partition needs at least 2 vertices");
  if (auto tri = find_rainbow_triangle(g))
    throw RainbowPresent(*tri);

  GallaiPartition best;
  auto present = g.colors_present();
  if (present.size() <= 2) {
    for (Vertex v = 0; v < g.order(); ++v)
      best.parts.push_back({v});
    fill_colors(g, best);
    return best;
  }

  for (std::size_t x = 0; x < present.size(); ++x)
    for (std::size_t y = x + 1; y < present.size(); ++y) {
      auto parts = candidate_for(g, present[x], present[y]);
      if (parts.size() >= 2 && parts.size() > best.parts.size())
        best.parts = std::move(parts);
    }
  if (best.parts.empty())
    throw InternalInconsistency("rainbow-free coloring without a Gallai partition");
  fill_colors(g, best);
  return best;
}

auto validate_partition(const ColoredCompleteGraph &g, const GallaiPartition &p) -> bool {
  const auto n = g.order();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty())
      throw PartitionShapeError("empty part " + std::to_string(i));
    for (auto v : p.parts[i]) {
      if (v >= n)
        throw PartitionShapeError("vertex " + std::to_string(v) + " out of range");
      if (owner[v] >= 0)
        throw PartitionShapeError("vertex " + std::to_string(v) + " in two parts");
      owner[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0)
      throw PartitionShapeError("vertex " + std::to_string(v) + " not covered");

  const auto t = static_cast<unsigned>(p.parts.size());
  if (t < 2 || p.between_colors.size() > 2)
    return false;
  if (p.pair_colors.size() != static_cast<std::size_t>(t) * (t - 1) / 2)
    return false;
  for (auto c : p.between_colors)
    if (c < 1 || c > g.palette())
      return false;

  std::size_t idx = 0;
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = i + 1; j < t; ++j, ++idx) {
      const auto &pc = p.pair_colors[idx];
      if (pc.i != i || pc.j != j)
        return false;
      if (std::find(p.between_colors.begin(), p.between_colors.end(), pc.c) ==
          p.between_colors.end())
        return false;
      for (auto u : p.parts[i])
        for (auto v : p.parts[j])
          if (g.at(u, v) != pc.c)
            return false;
    }
  return true;
}

auto quotient(const ColoredCompleteGraph &g, const GallaiPartition &p) -> ColoredCompleteGraph {
  if (!validate_partition(g, p))
    throw PartitionShapeError("partition does not satisfy the Gallai conditions");
  const auto t = static_cast<Vertex>(p.parts.size());
  ColoredCompleteGraph reduced(t, g.palette(), p.pair_colors.front().c);
  for (const auto &pc : p.pair_colors)
    reduced.set_color(pc.i, pc.j, pc.c);
  return reduced;
}

auto blow_up(const ColoredCompleteGraph &reduced, std::span<const ColoredCompleteGraph> parts)
    -> ColoredCompleteGraph {
  if (parts.size() != reduced.order())
    throw ParamError("blow_up needs one part per reduced vertex");
  const auto k = reduced.palette();
  std::size_t total = 0;
  for (const auto &part : parts) {
    if (part.palette() != k)
      throw PaletteError("blow_up part palette " + std::to_string(part.palette()) +
                         " differs from reduced palette " + std::to_string(k));
    total += part.order();
  }
  if (total > max_order)
    throw ParamError("blow_up order exceeds " + std::to_string(max_order));

  std::vector<Vertex> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + parts[i].order();

  ColoredCompleteGraph out(static_cast<Vertex>(total), k, 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto &part = parts[i];
    for (Vertex u = 0; u < part.order(); ++u)
      for (Vertex v = u + 1; v < part.order(); ++v)
        out.set_color(offset[i] + u, offset[i] + v, part.at(u, v));
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      auto c = reduced.at(static_cast<Vertex>(i), static_cast<Vertex>(j));
      for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
        for (Vertex v = offset[j]; v < offset[j + 1]; ++v)
          out.set_color(u, v, c);
    }
  }
  return out;
}

auto natural_partition(const ColoredCompleteGraph &reduced,
                       std::span<const ColoredCompleteGraph> parts) -> GallaiPartition {
  if (parts.size() != reduced.order())
    throw ParamError("one part per reduced vertex required");
  GallaiPartition p;
  Vertex next = 0;
  for (const auto &part : parts) {
    std::vector<Vertex> block(part.order());
    std::iota(block.begin(), block.end(), next);
    next += part.order();
    p.parts.push_back(std::move(block));
  }
  std::vector<bool> seen(reduced.palette() + 1, false);
  for (unsigned i = 0; i < parts.size(); ++i)
    for (unsigned j = i + 1; j < parts.size(); ++j) {
      auto c = reduced.at(i, j);
      p.pair_colors.push_back({i, j, c});
      seen[c] = true;
    }
  for (unsigned c = 1; c <= reduced.palette(); ++c)
    if (seen[c])
      p.between_colors.push_back(static_cast<Color>(c));
  return p;
}

auto pentagon_coloring(Color a, Color b, unsigned k) -> ColoredCompleteGraph {
  if (a == b)
    throw PaletteError("pentagon coloring needs two distinct colors");
  if (a == no_color || b == no_color)
    throw PaletteError("color 0 is not a valid color");
  if (k == 0)
    k = std::max(a, b);
  ColoredCompleteGraph g(5, k, a);
  for (Vertex i = 0; i < 5; ++i)
    g.set_color(i, (i + 2) % 5, b);
  return g;
}

} // namespace gfl
