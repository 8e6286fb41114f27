#pragma once

#include <vector>

#include <json.hpp>

#include "bilocal/fock.hpp"
#include "bilocal/rational.hpp"
#include "bilocal/report.hpp"

namespace bilocal {

/// One oscillator mode on the sphere: harmonic degree ell, index mu in 1..h_ell.
struct ModeLabel {
  int D = 4;
  int ell = 0;
  int mu = 1;

  Rational d0() const { return ratio(D - 2, 2); }
  Rational energy() const { return ell + d0(); }
  bool operator==(const ModeLabel&) const = default;
};

/// Abstract label of the Fourier mode (z^2)^n h_{ell,mu}(z).
struct FourierLabel {
  int n = 0;
  int ell = 0;
  int mu = 1;
};

/// Throws std::invalid_argument unless D is even and >= 4.
void require_dimension(int D);

/// Number of spherical harmonics of degree ell in D dimensions:
/// (D-2+2ell)/(D-2+ell) * C(D-2+ell, D-2).
Integer harmonic_count(int D, int ell);

/// First `count` modes, ordered by energy then (ell, mu).
std::vector<ModeLabel> enumerate_modes(int D, int count);

/// 1 iff n = -D/2 and ell = 0.
int residue(const FourierLabel& label, int D);

/// Squared rescaling (ell+d0)/d0 between the sphere modes and unit oscillators.
Rational oscillator_normalization(int ell, int D);
/// d0/(ell+d0), the commutator of two sphere modes of degree ell.
Rational mode_ccr_coefficient(int ell, int D);

/// Energies of the first `count` modes.
std::vector<Rational> mode_energies(int D, int count);

/// Hamiltonian with the mode energies is diagonal with eigenvalue equal to
/// the sum of slot energies on every monomial; one-particle degeneracy of each
/// complete level equals N h_ell per species. ctx.M is replaced by count.
CheckReport conformal_spectrum_check(FockContext ctx, int D, int count);

/// Rows {ell, h_ell, energy, cumulative} covering the first `count` modes.
nlohmann::json spectrum_table(int D, int count);

}  // namespace bilocal
