#include <doctest.h>

#include "gfl/constructions.hpp"
#include "gfl/detect.hpp"
#include "gfl/gallai.hpp"
#include "support.hpp"

using namespace gfl;
using gfl::testing::Rng;

namespace {

template <class Gen> void run_suite(std::uint64_t seed, Gen gen) {
  Rng rng(seed);
  for (int iter = 0; iter < 1000; ++iter) {
    auto inst = gen(rng);
    auto fan = find_mono_fan(inst.g, inst.m, inst.c);
    REQUIRE(fan);
    CHECK(validate_certificate(inst.g, *fan));
  }
}

} // namespace

TEST_CASE("3K2 in a part forces F3") { run_suite(101, testing::instance_3k2); }

TEST_CASE("two edges at a vertex plus an edge across forces F3") {
  run_suite(102, testing::instance_deg2);
}

TEST_CASE("three edges at a vertex forces F3") { run_suite(103, testing::instance_deg3); }

TEST_CASE("two disjoint edges plus an edge across forces F3") {
  run_suite(104, testing::instance_2disjoint);
}

TEST_CASE("many small parts joined in one color force F_n") {
  run_suite(105, testing::instance_mono_small_parts);
}

TEST_CASE("2K2 in a part forces F2") { run_suite(106, testing::instance_f2_claim); }

TEST_CASE("generated Gallai colorings are rainbow-free") {
  Rng rng(107);
  for (int iter = 0; iter < 1000; ++iter) {
    auto g = testing::random_gallai(rng, testing::uniform_int(rng, 1, 40),
                                    testing::uniform_int(rng, 1, 6));
    REQUIRE_FALSE(find_rainbow_triangle(g));
  }
}

TEST_CASE("Deg2 needs four vertices in Y") {
  // Deg2 with |Y| = 3: X = {x, x1, x2} with red x-x1, x-x2; Y has one red edge.
  ColoredCompleteGraph x(3, 2, 2);
  x.set_color(0, 1, 1);
  x.set_color(0, 2, 1);
  ColoredCompleteGraph y(3, 2, 2);
  y.set_color(0, 1, 1);
  CHECK_FALSE(find_mono_fan(testing::join(x, y, 1), 3, 1));
}
