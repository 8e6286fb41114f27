#include <doctest.h>

#include "bilocal/errors.hpp"
#include "bilocal/spectrum.hpp"
#include "oracles.hpp"

using namespace bilocal;

TEST_CASE("harmonic counts") {
  for (int D : {4, 6, 8, 10})
    for (int ell = 0; ell <= 10; ++ell) CHECK(harmonic_count(D, ell) == oracle::harmonics(D, ell));
  CHECK_THROWS(require_dimension(2));
  CHECK_THROWS(require_dimension(5));
}

TEST_CASE("mode enumeration order and energies") {
  const auto modes = enumerate_modes(4, 6);
  REQUIRE(modes.size() == 6);
  CHECK(modes[0].ell == 0);
  CHECK(modes[1].ell == 1);
  CHECK(modes[5].ell == 2);
  CHECK(modes[0].energy() == 1);
  CHECK(modes[1].energy() == 2);
  CHECK(mode_energies(6, 2) == std::vector<Rational>{2, 3});
}

TEST_CASE("normalizations cancel") {
  for (int D : {4, 6, 8})
    for (int ell = 0; ell <= 10; ++ell)
      CHECK(oscillator_normalization(ell, D) * mode_ccr_coefficient(ell, D) == 1);
}

TEST_CASE("conformal spectrum degeneracies") {
  CHECK(conformal_spectrum_check(FockContext{FieldKind::Complex, 2, 1, 2}, 4, 5).passed);
  CHECK(conformal_spectrum_check(FockContext{FieldKind::Real, 1, 1, 2}, 4, 14).passed);
}

TEST_CASE("spectrum table for D = 4") {
  const auto t = spectrum_table(4, 14);
  REQUIRE(t.size() == 3);
  for (int ell = 0; ell < 3; ++ell) CHECK(t[ell]["h"] == (ell + 1) * (ell + 1));
  CHECK(t[2]["cumulative"] == 14);
}
