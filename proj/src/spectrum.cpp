#include "bilocal/spectrum.hpp"

#include <map>
#include <stdexcept>

#include "bilocal/algebra.hpp"

namespace bilocal {

void require_dimension(int D) {
  if (D < 4 || D % 2 != 0) throw std::invalid_argument("D must be even and >= 4, got " + std::to_string(D));
}

Integer harmonic_count(int D, int ell) {
  require_dimension(D);
  if (ell < 0) throw std::invalid_argument("ell must be >= 0");
  const Rational h = ratio(D - 2 + 2 * ell, D - 2 + ell) *
                     Rational(binomial(static_cast<unsigned>(D - 2 + ell), static_cast<unsigned>(D - 2)));
  if (!is_integer(h)) throw std::logic_error("harmonic count is not an integer");
  return h.get_num();
}

std::vector<ModeLabel> enumerate_modes(int D, int count) {
  require_dimension(D);
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<ModeLabel> out;
  for (int ell = 0; static_cast<int>(out.size()) < count; ++ell) {
    const long h = harmonic_count(D, ell).get_si();
    for (long mu = 1; mu <= h && static_cast<int>(out.size()) < count; ++mu) {
      out.push_back({D, ell, static_cast<int>(mu)});
    }
  }
  return out;
}

int residue(const FourierLabel& label, int D) { return label.n * 2 == -D && label.ell == 0 ? 1 : 0; }

Rational oscillator_normalization(int ell, int D) {
  require_dimension(D);
  const Rational d0 = ratio(D - 2, 2);
  return (ell + d0) / d0;
}

Rational mode_ccr_coefficient(int ell, int D) {
  require_dimension(D);
  const Rational d0 = ratio(D - 2, 2);
  return d0 / (ell + d0);
}

std::vector<Rational> mode_energies(int D, int count) {
  std::vector<Rational> out;
  for (const auto& m : enumerate_modes(D, count)) out.push_back(m.energy());
  return out;
}

CheckReport conformal_spectrum_check(FockContext ctx, int D, int count) {
  CheckReport report("conformal_spectrum");
  const auto modes = enumerate_modes(D, count);
  ctx.M = count;
  ctx.validate();
  const auto energies = mode_energies(D, count);
  const HamiltonianSpec spec = HamiltonianSpec::canonical(ctx, energies);
  for (const auto& m : monomial_basis(ctx, ctx.P)) {
    Rational want = 0;
    for (SlotCode c : m.codes()) want += energies[ctx.decode(c).mode - 1];
    const FockVector v(ctx, m);
    const FockVector got = apply_hamiltonian(ctx, spec, v);
    report.record(got == want * v, {"H diagonal", describe(ctx, m), to_string(want), describe(got)});
  }

  // One-particle levels: only levels whose modes are all present are complete.
  std::map<int, long> per_level;
  for (const auto& m : modes) ++per_level[m.ell];
  nlohmann::json levels = nlohmann::json::array();
  if (ctx.N > 0 && ctx.P >= 1) {
    for (const auto& [ell, present] : per_level) {
      const Integer h = harmonic_count(D, ell);
      if (present != h.get_si()) continue;
      const Rational e = ell + ratio(D - 2, 2);
      std::map<Species, long> states;
      for (const auto& m : monomial_basis(ctx, 1)) {
        if (m.particle_count() != 1) continue;
        const ModeSlot s = ctx.decode(m.codes()[0]);
        if (energies[s.mode - 1] == e) ++states[s.species];
      }
      for (int sp = 0; sp < ctx.species_count(); ++sp) {
        const long got = states[static_cast<Species>(sp)];
        const long want = ctx.N * h.get_si();
        report.record(got == want, {"one-particle degeneracy", "ell=" + std::to_string(ell) + " species " +
                                                                   (sp == 0 ? "a" : "b"),
                                    std::to_string(want), std::to_string(got)});
      }
      levels.push_back({{"ell", ell}, {"energy", to_json(e)}, {"per_species", ctx.N * h.get_si()}});
    }
  }
  report.details["complete_levels"] = levels;
  return report;
}

nlohmann::json spectrum_table(int D, int count) {
  const auto modes = enumerate_modes(D, count);
  nlohmann::json rows = nlohmann::json::array();
  long cumulative = 0;
  std::size_t k = 0;
  while (k < modes.size()) {
    const int ell = modes[k].ell;
    long present = 0;
    while (k < modes.size() && modes[k].ell == ell) {
      ++present;
      ++k;
    }
    cumulative += present;
    rows.push_back({{"ell", ell},
                    {"h", harmonic_count(D, ell).get_si()},
                    {"energy", to_json(modes[k - 1].energy())},
                    {"modes_included", present},
                    {"cumulative", cumulative}});
  }
  return rows;
}

}  // namespace bilocal
