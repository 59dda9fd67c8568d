#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/errors.hpp"

namespace gfl {

using Vertex = std::uint32_t;

/// 1-based color index. 0 is an internal "unset" sentinel and never escapes
/// a finished graph.
using Color = std::uint8_t;

inline constexpr Vertex max_order = 65535;
inline constexpr unsigned max_palette = 255;
inline constexpr Color no_color = 0;

/// Unordered vertex pair, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge &) const = default;
};

using EdgeList = std::vector<Edge>;

/// An edge-coloring of the complete graph K_n with palette {1..k}.
///
/// Colors live in a flat upper-triangular array, row-major over u < v. A
/// graph is built through set_color() and is treated as an immutable value
/// afterwards; const instances are safe to share between threads.
class ColoredCompleteGraph {
public:
  /// Every edge gets color `fill`. Throws PaletteError if fill is not in 1..k.
  ColoredCompleteGraph(Vertex n, unsigned k, Color fill);

  static auto uniform(Vertex n, unsigned k, Color c) -> ColoredCompleteGraph {
    return {n, k, c};
  }

  [[nodiscard]] auto order() const noexcept -> Vertex { return n_; }
  [[nodiscard]] auto palette() const noexcept -> unsigned { return k_; }
  [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return colors_.size(); }

  /// Checked access; symmetric in (u, v).
  [[nodiscard]] auto color(Vertex u, Vertex v) const -> Color;

  /// Unchecked access for hot loops. Requires u != v, both < order().
  [[nodiscard]] auto at(Vertex u, Vertex v) const noexcept -> Color {
    return u < v ? colors_[index(u, v)] : colors_[index(v, u)];
  }

  void set_color(Vertex u, Vertex v, Color c);

  /// Row-major upper-triangular entries: (0,1), (0,2), ..., (n-2,n-1).
  [[nodiscard]] auto entries() const noexcept -> std::span<const Color> { return colors_; }

  /// Offset of row u (the entry for (u, u+1)).
  [[nodiscard]] auto row_offset(Vertex u) const noexcept -> std::size_t {
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2;
  }

  [[nodiscard]] auto index(Vertex u, Vertex v) const noexcept -> std::size_t {
    return row_offset(u) + (v - u - 1);
  }

  /// Sorted list of colors that appear on at least one edge.
  [[nodiscard]] auto colors_present() const -> std::vector<Color>;

  /// Same coloring declared over a palette of size k. Narrowing below a used
  /// color throws PaletteError.
  [[nodiscard]] auto with_palette(unsigned k) const -> ColoredCompleteGraph;

  /// Image under the vertex permutation `perm`: the image colors
  /// (perm[u], perm[v]) the way the source colors (u, v).
  [[nodiscard]] auto relabel(std::span<const Vertex> perm) const -> ColoredCompleteGraph;

  /// Recolor through `map`, indexed by old color (map[0] ignored). The result
  /// keeps the palette size unless `k` is given.
  [[nodiscard]] auto recolor(std::span<const Color> map, unsigned k = 0) const
      -> ColoredCompleteGraph;

  friend auto operator==(const ColoredCompleteGraph &, const ColoredCompleteGraph &)
      -> bool = default;

private:
  ColoredCompleteGraph() = default;

  void check_pair(Vertex u, Vertex v) const;

  Vertex n_ = 0;
  unsigned k_ = 0;
  std::vector<Color> colors_;
};

/// Parse the .gcg text format. Any whitespace separates tokens.
auto parse_gcg(std::string_view text) -> ColoredCompleteGraph;

/// Canonical .gcg text: header, then one line per row u = 0..n-2.
auto serialize_gcg(const ColoredCompleteGraph &g) -> std::string;

auto read_gcg_file(const std::string &path) -> ColoredCompleteGraph;
void write_gcg_file(const std::string &path, const ColoredCompleteGraph &g);

} // namespace gfl
