// The oracles themselves against values known by hand.
#include <doctest.h>

#include "oracles.hpp"

TEST_CASE("hook-content dimensions of small unitary irreps") {
  CHECK(oracle::hook_content_dimension({1}, 2) == 2);
  CHECK(oracle::hook_content_dimension({2}, 2) == 3);
  CHECK(oracle::hook_content_dimension({1, 1}, 2) == 1);
  CHECK(oracle::hook_content_dimension({2, 1}, 3) == 8);
  CHECK(oracle::hook_content_dimension({1, 1, 1}, 2) == 0);
  CHECK(oracle::u_dimension({0, -1}, 2) == 2);
  CHECK(oracle::u_dimension({1, 0, -1}, 3) == 8);
}

TEST_CASE("harmonic counts by monomial counting") {
  for (int ell = 0; ell <= 10; ++ell) CHECK(oracle::harmonics(4, ell) == (ell + 1) * (ell + 1));
  CHECK(oracle::harmonics(3, 5) == 11);
  CHECK(oracle::harmonics(6, 1) == 6);
}

TEST_CASE("box energies") {
  CHECK(oracle::box_energy({}) == 0);
  CHECK(oracle::box_energy({1}) == 1);
  CHECK(oracle::box_energy({2}) == 2);
  CHECK(oracle::box_energy({1, 1}) == 3);
  CHECK(oracle::partitions_up_to(3).size() == 7);
}
