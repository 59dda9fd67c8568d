#include <doctest.h>

#include "gfl/constructions.hpp"
#include "gfl/detect.hpp"
#include "gfl/gallai.hpp"

using namespace gfl;

namespace {

auto built_order(Family f, unsigned k, unsigned n = 0) -> std::uint64_t {
  return construct({f, k, n}).order();
}

} // namespace

TEST_CASE("family names") {
  for (auto f : {Family::F2Odd, Family::F2Even, Family::F2Useful, Family::F3, Family::FnGeneral})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS((void)parse_family("f4"), ParamError);
  CHECK(fan_target({Family::F2Even, 4, 0}) == 2);
  CHECK(fan_target({Family::F3, 4, 0}) == 3);
  CHECK(fan_target({Family::FnGeneral, 4, 7}) == 7);
  CHECK(palette_of({Family::F2Useful, 3, 0}) == 7);
}

TEST_CASE("orders match the closed forms") {
  CHECK(built_order(Family::F2Odd, 1) == 4);
  CHECK(built_order(Family::F2Odd, 3) == 20);
  CHECK(built_order(Family::F2Odd, 5) == 100);
  CHECK(built_order(Family::F2Odd, 7) == 500);
  CHECK(built_order(Family::F2Even, 2) == 8);
  CHECK(built_order(Family::F2Even, 4) == 41);
  CHECK(built_order(Family::F2Even, 6) == 207);
  CHECK(built_order(Family::F2Even, 8) == 1037);
  CHECK(built_order(Family::F2Useful, 1) == 10);
  CHECK(built_order(Family::F2Useful, 2) == 50);
  CHECK(built_order(Family::F2Useful, 3) == 250);
  std::vector<std::uint64_t> f3{6, 12, 32, 68, 164, 348, 824};
  for (unsigned k = 1; k <= 7; ++k)
    CHECK(built_order(Family::F3, k) == f3[k - 1]);
  CHECK(built_order(Family::FnGeneral, 4, 5) == 100);
  CHECK(built_order(Family::FnGeneral, 3, 3) == 30);
  CHECK(built_order(Family::FnGeneral, 2, 2) == 8);
  CHECK(built_order(Family::FnGeneral, 1, 4) == 8);
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= 5; ++k)
      CHECK(built_order(Family::FnGeneral, k, n) == expected_order({Family::FnGeneral, k, n}));
  for (unsigned k = 1; k <= 7; ++k)
    CHECK(blueprint_f3(k).order() == expected_order({Family::F3, k, 0}));
  for (unsigned k = 2; k <= 10; k += 2)
    CHECK(blueprint_f2_even(k).order() == expected_order({Family::F2Even, k, 0}));
  CHECK(blueprint_f3(9).order() == 4124);
  CHECK(blueprint_f3(8).order() == 1748);
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS((void)construct({Family::F2Odd, 4, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::F2Even, 3, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::F2Even, 0, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::F2Useful, 0, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::F3, 0, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::FnGeneral, 3, 0}), ParamError);
  CHECK_THROWS_AS((void)construct({Family::F2Odd, 17, 0}), ParamError);
  CHECK_THROWS_AS((void)expected_order({Family::F3, 40, 0}), ParamError);
}

TEST_CASE("small constructions are fan-free and rainbow-free") {
  for (unsigned k : {1u, 3u, 5u})
    CHECK(is_fan_free_gallai(construct_f2_odd(k), 2));
  for (unsigned k : {2u, 4u, 6u})
    CHECK(is_fan_free_gallai(construct_f2_even(k), 2));
  for (unsigned i = 1; i <= 3; ++i)
    CHECK(is_fan_free_gallai(construct_f2_useful(i), 2));
  for (unsigned k = 1; k <= 7; ++k)
    CHECK(is_fan_free_gallai(construct_f3(k), 3));
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= 5; ++k)
      CHECK(is_fan_free_gallai(construct_fn(n, k), n));
}

TEST_CASE("base cases and palettes") {
  CHECK_FALSE(is_fan_free_gallai(ColoredCompleteGraph::uniform(5, 1, 1), 2));
  CHECK(construct_f2_odd(1) == ColoredCompleteGraph::uniform(4, 1, 1));
  CHECK(construct_f3(1) == ColoredCompleteGraph::uniform(6, 1, 1));
  CHECK(construct_fn(4, 1) == ColoredCompleteGraph::uniform(8, 1, 1));
  // Each construction uses exactly its palette.
  CHECK(construct_f2_odd(5).colors_present().size() == 5);
  CHECK(construct_f2_even(6).colors_present().size() == 6);
  CHECK(construct_f3(6).colors_present().size() == 6);
  CHECK(construct_f3(7).colors_present().size() == 7);
  CHECK(construct_fn(3, 4).colors_present().size() == 4);
}

TEST_CASE("useful colors of the F2-useful family") {
  for (unsigned i = 1; i <= 3; ++i) {
    auto g = construct_f2_useful(i);
    CHECK(count_useful_colors(g) == 2 * i);
    CHECK(g.palette() == 2 * i + 1);
  }
}

TEST_CASE("fn decomposes with the expected reduced graph") {
  auto g = construct_fn(3, 3);
  auto p = find_gallai_partition(g);
  CHECK(validate_partition(g, p));
  CHECK(p.between_colors == std::vector<Color>{2, 3});
  CHECK(p.parts.size() == 5);
  auto h = construct_fn(3, 4);
  auto q = find_gallai_partition(h);
  CHECK(q.between_colors == std::vector<Color>{4});
  CHECK(q.parts.size() == 2);
}

TEST_CASE("blueprint navigation") {
  auto b = blueprint_f2_odd(5);
  CHECK(b.tag == "G5");
  CHECK(b.find("G3").size() == 5);
  CHECK(b.find("G1").size() == 25);
  CHECK(b.at({2, 3}).tag == "G1");
  auto swapped = b.replaced({2, 3}, Blueprint::leaf("K3", ColoredCompleteGraph::uniform(3, 1, 1)));
  CHECK(swapped.order() == 99);
  CHECK(b.order() == 100);
  CHECK(swapped.find("K3") == std::vector<Blueprint::Path>{{2, 3}});
  CHECK_THROWS_AS((void)b.at({7}), IndexError);
  CHECK(cycle_triangle_k8(2, 3).color(0, 1) == 2);
  CHECK(cycle_triangle_k8(2, 3).color(5, 6) == 3);
  CHECK(cycle_triangle_k8(2, 3).color(0, 2) == 1);
}

TEST_CASE("layouts") {
  CHECK(layouts_of({0, 1, 2, 3, 4}).size() == 120);
  CHECK(layouts_of({0, 0, 0, 0, 1}).size() == 5);
  CHECK(layouts_of({0, 0, 0, 1, 2}).size() == 20);
  CHECK(layouts_of({0, 1, 2, 2, 1}).front() == Layout{0, 1, 1, 2, 2});
}

TEST_CASE("frozen gadget placements match the search") {
  CHECK(derive_a4_layout() == frozen::a4_layout);
  CHECK(derive_aj_layout() == frozen::aj_layout);
  CHECK(derive_g4_slot() == frozen::g4_slot);
  CHECK(derive_g3_layout() == frozen::g3_layout);
  CHECK(derive_f3_even_layout() == frozen::f3_even_layout);
  CHECK(derive_f3_five_layout() == frozen::f3_five_layout);
  CHECK(derive_f3_odd_layout() == frozen::f3_odd_layout);
  CHECK(derive_f2_even_sites(6) == std::pair{0u, 1u});
  CHECK(derive_f2_even_sites(8) == std::pair{0u, 1u});
}

TEST_CASE("F3 site rules match the search") {
  for (unsigned k = 4; k <= 7; ++k) {
    CAPTURE(k);
    auto derived = derive_f3_site(k);
    REQUIRE(derived);
    CHECK(*derived == f3_rule_site(k));
  }
}

TEST_CASE("literal odd F3 step has no valid placement at k = 7") {
  CHECK_FALSE(literal_f3_odd_step_exists(7));
  CHECK_THROWS_AS((void)literal_f3_odd_step_exists(6), ParamError);
}

TEST_CASE("bound tables") {
  auto f2 = bound_table(BoundFamily::F2, 10);
  std::vector<std::uint64_t> f2_expected{9, 21, 42, 101, 208, 501, 1038, 2501, 5188};
  REQUIRE(f2.rows.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(f2.rows[i].k == i + 2);
    CHECK(f2.rows[i].exact == f2_expected[i]);
  }
  std::vector<std::uint64_t> useful{3, 5, 11, 21, 51, 101, 251, 501, 1251, 2501, 6251};
  REQUIRE(f2.useful_rows.size() == 11);
  for (std::size_t i = 0; i < 11; ++i)
    CHECK(f2.useful_rows[i].exact == useful[i]);

  auto f3 = bound_table(BoundFamily::F3, 9);
  CHECK(f3.rows[0].exact == 13);
  CHECK(f3.rows[1].exact == 33);
  CHECK(f3.rows[2].exact == 69);
  CHECK(f3.rows[3].exact == 165);
  CHECK(f3.rows[4].exact == 349);
  CHECK(f3.rows[5] == BoundRow{7, 825, 828, std::nullopt});
  CHECK(f3.rows[6].exact == 1749);
  CHECK(f3.rows[7] == BoundRow{9, 4125, 4143, std::nullopt});

  auto f4 = bound_table(BoundFamily::Fn, 8, 4);
  CHECK(f4.rows[1] == BoundRow{3, 41, 81, std::nullopt});
  CHECK(f4.rows[0] == BoundRow{2, 17, 31, std::nullopt});
  REQUIRE(f4.ramsey);
  CHECK(f4.ramsey->lower == 17);
  CHECK(f4.ramsey->upper == 24);
  CHECK_FALSE(f4.ramsey->exact);
  CHECK(bound_table(BoundFamily::Fn, 2, 2).ramsey->exact == 9);
  CHECK(bound_table(BoundFamily::Fn, 2, 3).ramsey->exact == 13);

  CHECK_THROWS_AS((void)bound_table(BoundFamily::F2, 1), ParamError);
  CHECK_THROWS_AS((void)bound_table(BoundFamily::F2, 21), ParamError);
  CHECK_THROWS_AS((void)bound_table(BoundFamily::Fn, 4, 0), ParamError);
}

TEST_CASE("constructions realize the lower bounds") {
  auto f2 = bound_table(BoundFamily::F2, 10);
  for (const auto &r : f2.rows) {
    auto order = r.k % 2 == 1 ? blueprint_f2_odd(r.k).order() : blueprint_f2_even(r.k).order();
    CHECK(r.lower - 1 == order);
  }
  for (const auto &r : f2.useful_rows) {
    if (r.k == 0)
      continue;
    auto order =
        r.k % 2 == 0 ? blueprint_f2_useful(r.k / 2).order() : blueprint_f2_odd(r.k).order();
    CHECK(r.lower - 1 == order);
  }
  for (const auto &r : bound_table(BoundFamily::F3, 9).rows)
    CHECK(r.lower - 1 == blueprint_f3(r.k).order());
  for (unsigned n = 2; n <= 5; ++n)
    for (const auto &r : bound_table(BoundFamily::Fn, 8, n).rows)
      CHECK(r.lower - 1 == blueprint_fn(n, r.k).order());
}
