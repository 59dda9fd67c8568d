#pragma once

#include <span>
#include <vector>

#include "gfl/coloring.hpp"
#include "gfl/detect.hpp"

namespace gfl {

struct PairColor {
  unsigned i = 0, j = 0; // part indices, i < j
  Color c = no_color;

  auto operator<=>(const PairColor &) const = default;
};

/// A nontrivial vertex partition where every pair of parts is joined in a
/// single color and at most two colors appear between parts.
struct GallaiPartition {
  std::vector<std::vector<Vertex>> parts; // each sorted; parts ordered by first vertex
  std::vector<Color> between_colors;      // sorted, size <= 2
  std::vector<PairColor> pair_colors;     // every i < j, row-major

  [[nodiscard]] auto pair_color(unsigned i, unsigned j) const -> Color;

  auto operator<=>(const GallaiPartition &) const = default;
};

/// Raised by find_gallai_partition when the input is not a Gallai coloring.
class RainbowPresent : public Error {
public:
  explicit RainbowPresent(RainbowTriangle t);
  [[nodiscard]] auto triangle() const noexcept -> const RainbowTriangle & { return triangle_; }

private:
  RainbowTriangle triangle_;
};

/// Finest Gallai partition over all candidate between-color pairs; see the
/// README for the search. Requires a rainbow-free graph with n >= 2.
auto find_gallai_partition(const ColoredCompleteGraph &g) -> GallaiPartition;

/// Checks every GallaiPartition invariant against g. Throws
/// PartitionShapeError when the parts overlap, miss a vertex, or are empty.
auto validate_partition(const ColoredCompleteGraph &g, const GallaiPartition &p) -> bool;

/// Reduced graph: one vertex per part, colored by the between-part color.
auto quotient(const ColoredCompleteGraph &g, const GallaiPartition &p) -> ColoredCompleteGraph;

/// Substitute parts[i] for vertex i of `reduced`. Vertices are numbered by
/// concatenating the parts in order. All inputs must declare the same palette.
auto blow_up(const ColoredCompleteGraph &reduced, std::span<const ColoredCompleteGraph> parts)
    -> ColoredCompleteGraph;

/// The partition of blow_up(reduced, parts) into its substituted copies.
auto natural_partition(const ColoredCompleteGraph &reduced,
                       std::span<const ColoredCompleteGraph> parts) -> GallaiPartition;

/// The 2-coloring of K5 with no monochromatic triangle: color a on
/// {i, i+1 mod 5}, color b on {i, i+2 mod 5}. Palette is max(a, b) unless
/// k is given.
auto pentagon_coloring(Color a, Color b, unsigned k = 0) -> ColoredCompleteGraph;

} // namespace gfl
