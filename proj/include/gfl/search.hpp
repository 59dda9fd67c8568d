#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfl/coloring.hpp"

namespace gfl {

/// Search limits. At least one limit must be set unless `unlimited` is.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  bool unlimited = false;

  static auto none() -> SearchBudget { return {std::nullopt, std::nullopt, true}; }
  static auto nodes(std::uint64_t n) -> SearchBudget { return {n, std::nullopt, false}; }
  static auto seconds(double s) -> SearchBudget { return {std::nullopt, s, false}; }

  /// Throws ParamError when no limit is set and `unlimited` is false.
  void validate() const;
};

enum class Verdict { Exhausted, Witness, BudgetExceeded };

auto verdict_name(Verdict v) -> std::string_view;

struct SearchStats {
  std::uint64_t nodes = 0;  // variable assignments attempted
  std::uint64_t prunes = 0; // assignments rejected by fan detection
  std::uint64_t leaves = 0; // complete assignments with no forbidden structure
  std::uint64_t cases = 0;  // enumerated instances (claim checks)
  double elapsed_seconds = 0;
};

struct SearchOutcome {
  Verdict verdict = Verdict::Exhausted;
  std::optional<ColoredCompleteGraph> witness;
  SearchStats stats;
  std::string note;
};

enum class EdgeOrder {
  Lexicographic,     // (0,1), (0,2), ..., (1,2), ...
  VertexIncremental, // (0,1), (0,2), (1,2), (0,3), ...
};

enum class Pruning {
  Incremental, // re-check only centers the new edges can affect
  FullRescan,  // re-check every center after each assignment
  None,        // check complete colorings only
};

struct SearchOptions {
  unsigned threads = 1;        // 0 picks default_thread_count()
  bool deterministic = false;  // forces one thread
  EdgeOrder order = EdgeOrder::Lexicographic;
  Pruning pruning = Pruning::Incremental;
  unsigned split_depth = 4;    // variables fixed per parallel task
  bool count_all = false;      // keep going after the first witness
};

/// GFL_THREADS if set and positive, else hardware concurrency (at least 1).
auto default_thread_count() -> unsigned;

/// A 2-coloring search over groups of edges that take one color together.
/// Colors are 1 and 2; edges in `fixed` are pre-colored and never revisited.
struct TwoColorProblem {
  Vertex n = 0;
  unsigned m = 1; // forbidden fan order
  std::vector<std::pair<Edge, Color>> fixed;
  std::vector<EdgeList> vars;
  /// Edges outside both color classes (e.g. a third color); colored this way
  /// in a witness and ignored by fan detection.
  std::vector<std::pair<Edge, Color>> extra;
  unsigned palette = 2;
};

/// Depth-first search for an assignment with no monochromatic F_m in colors 1
/// and 2. Requires n <= 64.
auto solve_two_color(const TwoColorProblem &problem, const SearchBudget &budget,
                     const SearchOptions &options = {}) -> SearchOutcome;

/// Decide whether every 2-coloring of K_n has a monochromatic F_m.
/// Exhausted: R(F_m, F_m) <= n. Witness: an F_m-free 2-coloring. Edge (0,1) is
/// fixed to color 1, which also removes the color swap.
auto ramsey2_decide(unsigned m, Vertex n, const SearchBudget &budget,
                    const SearchOptions &options = {}) -> SearchOutcome;

/// Number of F_m-free 2-colorings of K_n by plain enumeration of all
/// 2^C(n,2) colorings. Testing oracle; n <= 7.
auto brute_ramsey_count(unsigned m, Vertex n) -> std::uint64_t;

/// Checks R(F_m, F_m) = value: a witness on value - 1 vertices and exhaustion
/// on value vertices. Exhausted means both sides were confirmed.
auto check_ramsey_value(unsigned m, Vertex value, const SearchBudget &budget,
                        const SearchOptions &options = {}) -> SearchOutcome;

/// Matching number of a small edge list (at most 16 edges).
auto matching_number(std::span<const Edge> edges) -> unsigned;

/// Every edge subset of `allowed` that embeds in C4, C5 or 2K3, including the
/// empty set, in DFS order over `allowed`.
auto embeddable_edge_sets(std::span<const Edge> allowed) -> std::vector<EdgeList>;

/// One edge set per isomorphism class of graphs without isolated vertices
/// that embed in C4, C5 or 2K3 (the empty set included), on vertices 0, 1, ...
auto embeddable_class_representatives() -> std::vector<EdgeList>;

/// Every 2-coloring of K7 whose color-1 edges embed in C4, C5 or 2K3 has a
/// color-2 F3. Witness: a counterexample.
auto check_fact_k7() -> SearchOutcome;

/// Every rainbow-free 3-coloring of K9 whose color-1 and color-2 edges each
/// embed in C4, C5 or 2K3 has a color-3 F3. Color-1 sets are taken up to
/// isomorphism.
auto check_claim_f1(const SearchBudget &budget) -> SearchOutcome;

/// Every Gallai coloring of K_n with one edge in color 3 and the rest in
/// colors 1 and 2 has a monochromatic F2 (n = 9 for the claim). The color-3
/// edge is (0,1); every w has color(0,w) = color(1,w).
auto check_claim_f2k8(const SearchBudget &budget, const SearchOptions &options = {},
                      Vertex n = 9) -> SearchOutcome;

} // namespace gfl
