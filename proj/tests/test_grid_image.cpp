#include <doctest.h>

#include <random>

#include "hlf/enumerate.hpp"
#include "hlf/error.hpp"
#include "hlf/grid_image.hpp"
#include "test_support.hpp"

using namespace hlf;
using namespace hlf::testing;

TEST_CASE("2x2 grid, b = 0000 image") {
  const std::set<BitVector> solutions{bv("0000"), bv("0110"), bv("1001"), bv("1111")};
  const GridImage image = render_distribution_grid(solutions, 4);
  CHECK(image.width == 4);
  CHECK(image.height == 4);
  CHECK(write_pbm(image, true) ==
        "P1\n4 4\n"
        "1000\n"
        "0010\n"
        "0100\n"
        "0001\n");
  CHECK(image.at(0b00, 0b00));
  CHECK(image.at(0b01, 0b10));
  CHECK(image.at(0b10, 0b01));
  CHECK(image.at(0b11, 0b11));
}

TEST_CASE("empty and full sets") {
  const GridImage empty = render_distribution_grid(std::set<BitVector>{}, 4);
  CHECK(std::none_of(empty.cells.begin(), empty.cells.end(), [](bool c) { return c; }));

  const auto inst = build_grid_instance(2, bv("1111"));
  const auto all = enumerate_solutions(inst, run_cla(inst));
  const GridImage full = render_distribution_grid(std::span<const BitVector>(all), 4);
  CHECK(std::all_of(full.cells.begin(), full.cells.end(), [](bool c) { return c; }));
}

TEST_CASE("odd n puts the extra bit on the horizontal axis") {
  const GridImage image = render_distribution_grid(std::set<BitVector>{bv("110")}, 3);
  CHECK(image.width == 4);
  CHECK(image.height == 2);
  CHECK(image.at(0b11, 0));
}

TEST_CASE("render then parse recovers the set") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 12;
    std::set<BitVector> set;
    const std::size_t size = rng() % 50;
    for (std::size_t k = 0; k < size; ++k) {
      set.insert(BitVector::random(n, rng));
    }
    const GridImage image = render_distribution_grid(set, n);
    for (bool plain : {true, false}) {
      const GridImage back = parse_pbm(write_pbm(image, plain));
      CHECK(back == image);
      CHECK(image_solutions(back, n) == set);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(render_distribution_grid(std::set<BitVector>{bv("10"), bv("101")}, 2), ValidationError);
  CHECK_THROWS_AS(render_distribution_grid(std::set<BitVector>{}, 29), ResourceCapError);
  CHECK_THROWS_AS(parse_pbm("P2\n1 1\n0\n"), ValidationError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n01\n"), ValidationError);
  CHECK_THROWS_AS(parse_pbm("P4\n16 2\n\x01"), ValidationError);
  CHECK(parse_pbm("P1\n# comment\n2 1\n0 1\n").at(1, 0));
}
