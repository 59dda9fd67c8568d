#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gfl/bitset.hpp"
#include "gfl/coloring.hpp"

namespace gfl {

/// Three vertices whose edges carry three distinct colors.
struct RainbowTriangle {
  Vertex a = 0, b = 0, c = 0;

  auto operator<=>(const RainbowTriangle &) const = default;
};

/// A monochromatic fan F_m: `center` joined in `color` to both ends of each
/// of m pairwise disjoint `color` edges.
struct MonoFan {
  Color color = no_color;
  Vertex center = 0;
  EdgeList matching;

  [[nodiscard]] auto order() const noexcept -> unsigned {
    return static_cast<unsigned>(matching.size());
  }

  auto operator<=>(const MonoFan &) const = default;
};

using Certificate = std::variant<RainbowTriangle, MonoFan>;

/// True iff `cert` holds in g, by direct inspection of edge colors.
auto validate_certificate(const ColoredCompleteGraph &g, const Certificate &cert) -> bool;

/// Per-color neighborhood bitsets: row(c, v) is the set of w with color(v,w) = c.
class ColorAdjacency {
public:
  explicit ColorAdjacency(const ColoredCompleteGraph &g);

  [[nodiscard]] auto order() const noexcept -> Vertex { return n_; }
  [[nodiscard]] auto palette() const noexcept -> unsigned { return k_; }
  [[nodiscard]] auto words_per_row() const noexcept -> std::size_t { return wpr_; }

  [[nodiscard]] auto row(Color c, Vertex v) const noexcept -> std::span<const std::uint64_t> {
    return {rows_.data() + (static_cast<std::size_t>(c - 1) * n_ + v) * wpr_, wpr_};
  }

  [[nodiscard]] auto neighbors(Color c, Vertex v) const -> Bitset { return {n_, row(c, v)}; }

private:
  Vertex n_;
  unsigned k_;
  std::size_t wpr_;
  std::vector<std::uint64_t> rows_;
};

/// A matching of size m inside `candidates`, using only edges of color c.
/// Greedy maximal matching first; the exact search runs only when the greedy
/// result lies in [m/2, m).
auto find_matching(const ColorAdjacency &adj, Color c, const Bitset &candidates, unsigned m)
    -> std::optional<EdgeList>;

/// Lexicographically first rainbow triple u < v < w, scanning u, then v, then w.
auto find_rainbow_triangle(const ColoredCompleteGraph &g) -> std::optional<RainbowTriangle>;

/// Monochromatic F_m in color c: smallest center first, matching found by
/// lexicographic greedy extension (exact search as fallback).
auto find_mono_fan(const ColoredCompleteGraph &g, unsigned m, Color c) -> std::optional<MonoFan>;
auto find_mono_fan(const ColorAdjacency &adj, unsigned m, Color c) -> std::optional<MonoFan>;

/// First monochromatic F_m over colors 1..k in increasing order.
auto find_any_mono_fan(const ColoredCompleteGraph &g, unsigned m) -> std::optional<MonoFan>;
auto find_any_mono_fan(const ColorAdjacency &adj, unsigned m) -> std::optional<MonoFan>;

/// Largest m with a color-c F_m; 0 when color c has no triangle.
auto max_fan_order(const ColoredCompleteGraph &g, Color c) -> unsigned;
auto max_fan_order(const ColorAdjacency &adj, Color c) -> unsigned;

/// Colors whose edge set has a vertex of degree at least 2.
auto count_useful_colors(const ColoredCompleteGraph &g) -> unsigned;

inline constexpr Vertex oracle_max_order = 12;

/// Exhaustive fan search over every center and every m-set of disjoint
/// pairs. Testing oracle; throws OracleSizeError above 12 vertices.
auto brute_fan_oracle(const ColoredCompleteGraph &g, unsigned m, Color c)
    -> std::optional<MonoFan>;

/// True iff the graph is a subgraph of C4, C5 or 2K3. Edges may use any
/// vertex labels; duplicates are ignored.
auto embeds_in_c4_c5_2k3(std::span<const Edge> edges) -> bool;

struct FanReport {
  Color color = no_color;
  std::optional<MonoFan> fan;
  std::optional<unsigned> max_order;
};

struct VerifyReport {
  std::optional<RainbowTriangle> rainbow;
  std::vector<FanReport> fans; // one per color 1..k

  [[nodiscard]] auto ok() const -> bool;
};

/// Full detector sweep: rainbow scan (when requested) plus a fan search of
/// order m in every color.
auto verify(const ColoredCompleteGraph &g, unsigned m, bool check_rainbow,
            bool with_max_order = false) -> VerifyReport;

} // namespace gfl
