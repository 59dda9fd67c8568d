#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/coloring.hpp"

namespace gfl {

enum class Family { F2Odd, F2Even, F2Useful, F3, FnGeneral };

/// Names one of the extremal colorings. `k` is the color count (the
/// iteration count i for F2Useful); `n` is the fan order for FnGeneral.
struct ConstructionSpec {
  Family family = Family::F2Odd;
  unsigned k = 1;
  unsigned n = 0;
};

auto family_name(Family f) -> std::string_view;
auto parse_family(std::string_view name) -> Family;

/// Fan order the construction avoids: 2 for the F2 families, 3 for F3, n for Fn.
auto fan_target(const ConstructionSpec &spec) -> unsigned;

/// Closed-form order of the construction. Throws ParamError on bad parameters
/// or when the order exceeds max_order.
auto expected_order(const ConstructionSpec &spec) -> std::uint64_t;

/// Recursive description of a coloring: a leaf coloring, or the blow-up of
/// `graph` (the reduced coloring) by `children`.
struct Blueprint {
  std::string tag;
  ColoredCompleteGraph graph;
  std::vector<Blueprint> children;

  static auto leaf(std::string tag, ColoredCompleteGraph g) -> Blueprint;
  static auto node(std::string tag, ColoredCompleteGraph reduced, std::vector<Blueprint> kids)
      -> Blueprint;

  [[nodiscard]] auto is_leaf() const noexcept -> bool { return children.empty(); }
  [[nodiscard]] auto order() const -> std::uint64_t;

  /// Flatten to a coloring over palette k (vertex numbering is DFS
  /// concatenation order).
  [[nodiscard]] auto materialize(unsigned k) const -> ColoredCompleteGraph;

  using Path = std::vector<unsigned>;

  /// Paths (child indices from the root) of every subtree with this tag, in
  /// DFS pre-order.
  [[nodiscard]] auto find(std::string_view tag) const -> std::vector<Path>;

  [[nodiscard]] auto at(const Path &path) const -> const Blueprint &;
  [[nodiscard]] auto replaced(const Path &path, Blueprint sub) const -> Blueprint;
};

/// Pentagon layouts: entry p is the part type placed at pentagon vertex p.
using Layout = std::array<std::uint8_t, 5>;

/// Gadget placements chosen by the detector-validated search and frozen.
/// derive_* below recomputes each one from scratch.
namespace frozen {
/// A'4 parts: types 0..3 are K2 in colors 1..4, type 4 is K1.
inline constexpr Layout a4_layout{0, 1, 2, 3, 4};
/// A_j parts: types 0..3 are K2 in colors 1..4, type 4 is K2 in color j.
inline constexpr Layout aj_layout{0, 1, 2, 3, 4};
/// Which of the five G2 copies of G'4 becomes A'4.
inline constexpr unsigned g4_slot = 0;
/// G3 parts: 0 = G1, 1 = G3^3.
inline constexpr Layout g3_layout{0, 0, 0, 0, 1};
/// Even F3 step: 0 = previous stage, 1 = variant with triangle color 2i-1,
/// 2 = variant with triangle color 2i.
inline constexpr Layout f3_even_layout{0, 1, 2, 2, 1};
/// k = 5 step: 0 = G3, 1 = G4^4, 2 = G4^5.
inline constexpr Layout f3_five_layout{0, 0, 0, 1, 2};
/// Odd F3 step for k >= 7: 0 = previous stage, 1 = variant with C5 color
/// 2i, 2 = variant with C5 color 2i+1.
inline constexpr Layout f3_odd_layout{0, 0, 0, 1, 2};
} // namespace frozen

struct GadgetChoices {
  Layout a4 = frozen::a4_layout;
  Layout aj = frozen::aj_layout;
  unsigned g4_slot = frozen::g4_slot;
  Layout g3 = frozen::g3_layout;
  Layout f3_even = frozen::f3_even_layout;
  Layout f3_five = frozen::f3_five_layout;
  Layout f3_odd = frozen::f3_odd_layout;
};

auto blueprint_f2_odd(unsigned k) -> Blueprint;
auto blueprint_f2_useful(unsigned i) -> Blueprint;
auto blueprint_f2_even(unsigned k, const GadgetChoices &choices = {}) -> Blueprint;
auto blueprint_f3(unsigned k, const GadgetChoices &choices = {}) -> Blueprint;
auto blueprint_fn(unsigned n, unsigned k) -> Blueprint;

auto construct_f2_odd(unsigned k) -> ColoredCompleteGraph;
auto construct_f2_useful(unsigned i) -> ColoredCompleteGraph;
auto construct_f2_even(unsigned k) -> ColoredCompleteGraph;
auto construct_f3(unsigned k) -> ColoredCompleteGraph;
auto construct_fn(unsigned n, unsigned k) -> ColoredCompleteGraph;

auto construct(const ConstructionSpec &spec) -> ColoredCompleteGraph;

/// No rainbow triangle and no monochromatic F_m in any color.
auto is_fan_free_gallai(const ColoredCompleteGraph &g, unsigned m) -> bool;

/// Palette size of the construction (2i + 1 for F2Useful, else k).
auto palette_of(const ConstructionSpec &spec) -> unsigned;

/// The coloring of K8: color-c5 5-cycle on 0..4, color-tri triangle on 5..7,
/// every other edge color 1.
auto cycle_triangle_k8(Color c5, Color tri) -> ColoredCompleteGraph;

// Detector-validated searches behind the frozen choices. Each enumerates
// candidates in lexicographic order and returns the first whose coloring has
// no rainbow triangle and no monochromatic fan of the family's order.

/// Distinct arrangements of `types` (a multiset) in lexicographic order.
auto layouts_of(Layout types) -> std::vector<Layout>;

/// First valid candidate for which build(candidate) is F_m-free and
/// rainbow-free; std::nullopt if none.
auto first_valid_layout(const std::vector<Layout> &candidates,
                        const std::function<ColoredCompleteGraph(const Layout &)> &build,
                        unsigned m) -> std::optional<Layout>;

auto derive_a4_layout() -> std::optional<Layout>;
auto derive_aj_layout() -> std::optional<Layout>;
auto derive_g4_slot() -> std::optional<unsigned>;
/// First valid pair of A'4 sites (DFS indices) for the k-color even step.
auto derive_f2_even_sites(unsigned k) -> std::optional<std::pair<unsigned, unsigned>>;
auto derive_g3_layout() -> std::optional<Layout>;
auto derive_f3_even_layout() -> std::optional<Layout>;
auto derive_f3_five_layout() -> std::optional<Layout>;
auto derive_f3_odd_layout() -> std::optional<Layout>;
/// First valid G1 replacement site, as an index among all G1 leaves of the
/// previous stage in DFS order, for the step that produces k colors.
auto derive_f3_site(unsigned k) -> std::optional<unsigned>;
/// Whether any layout and G1 site makes the odd step to k colors F3-free when
/// the variants carry a C5 in color 2 and a triangle in color k-1 or k.
/// Exhaustive; slow.
auto literal_f3_odd_step_exists(unsigned k) -> bool;
/// Index among all G1 leaves that the builder's site rule picks for step k.
auto f3_rule_site(unsigned k) -> unsigned;

/// One row of a bound table. `exact` is set where lower == upper is proven.
struct BoundRow {
  unsigned k = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;

  auto operator<=>(const BoundRow &) const = default;
};

enum class BoundFamily { F2, F3, Fn };

struct BoundTable {
  BoundFamily family = BoundFamily::F2;
  unsigned n = 0;                    // fan order (2 for F2, 3 for F3)
  std::vector<BoundRow> rows;        // gr_k(K3 : F_n), k = 2..k_max
  std::vector<BoundRow> useful_rows; // F2 only: gr'_{k'}(K3 : F2), k' = 0..k_max
  std::optional<BoundRow> ramsey;    // Fn only: 4n+1 <= R(F_n, F_n) <= 6n (k = 2)
};

/// Closed-form bounds for k = 2..k_max. Requires 2 <= k_max <= 20; Fn needs n >= 1.
auto bound_table(BoundFamily family, unsigned k_max, unsigned n = 0) -> BoundTable;

} // namespace gfl
