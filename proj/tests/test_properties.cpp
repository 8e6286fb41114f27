// Invariants checked over whole families of small contexts.
#include <doctest.h>

#include "bilocal/algebra.hpp"
#include "bilocal/casimir.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/highest_weight.hpp"
#include "bilocal/suite.hpp"

using namespace bilocal;

namespace {
std::vector<FockContext> small_contexts() {
  std::vector<FockContext> out;
  for (auto kind : {FieldKind::Complex, FieldKind::Real})
    for (int N = 1; N <= 2; ++N)
      for (int M = 1; M <= 2; ++M) out.push_back({kind, N, M, 4});
  return out;
}
}  // namespace

TEST_CASE("every generator is adjoint to its partner on every small context") {
  for (const auto& ctx : small_contexts()) {
    CAPTURE(to_string(ctx.kind));
    CAPTURE(ctx.N);
    CAPTURE(ctx.M);
    CHECK(verify_generator_adjointness(ctx, 2).passed);
  }
}

TEST_CASE("Gram matrices of monomials are positive definite") {
  for (const auto& ctx : small_contexts()) CHECK(verify_gram_positivity(ctx, 40).passed);
}

TEST_CASE("the Hamiltonian is diagonal on monomials with energy sum of modes") {
  for (const auto& ctx : small_contexts()) {
    const auto spec = HamiltonianSpec::default_spectrum(ctx);
    for (const auto& m : monomial_basis(ctx, ctx.P)) {
      Rational e = 0;
      for (auto code : m.codes()) e += spec.energies[ctx.decode(code).mode - 1];
      const FockVector v(ctx, m);
      CHECK(apply_hamiltonian(ctx, spec, v) == e * v);
    }
  }
}

TEST_CASE("every generator shifts the energy by a fixed amount") {
  for (const auto& ctx : small_contexts()) CHECK(verify_grading(ctx, 2).passed);
}

TEST_CASE("Gram matrices over ground states are positive semidefinite") {
  for (int N = 1; N <= 2; ++N) {
    const FockContext c{FieldKind::Complex, N, 2, 5};
    for (const auto& s : enumerate_sectors(FieldKind::Complex, N, 1)) {
      for (int level = 0; level <= 2; ++level) {
        const CommandResult r = run_gram(c, s, level);
        CAPTURE(s.str());
        CAPTURE(level);
        CHECK(r.passed);
        for (const auto& m : r.json["leading_minors"]) CHECK(rational_from_json(m) >= 0);
      }
    }
  }
}

TEST_CASE("ground states are annihilated by every lowering operator") {
  for (int N = 1; N <= 3; ++N) {
    const FockContext c{FieldKind::Complex, N, 3, 5};
    for (const auto& s : enumerate_sectors(FieldKind::Complex, N, 2)) {
      if (s.plus.row_count() > 3 || s.minus.row_count() > 3) continue;
      const FockVector g = build_ground_state(c, s);
      CHECK(verify_hw_conditions(c, g, weight_from_sector(s)).passed);
      CHECK(verify_gauge_highest_weight(c, g).passed);
    }
  }
}

TEST_CASE("sector energy is the Hamiltonian eigenvalue of the ground state") {
  const FockContext c{FieldKind::Complex, 2, 3, 6};
  const auto spec = HamiltonianSpec::default_spectrum(c);
  for (const auto& s : enumerate_sectors(FieldKind::Complex, 2, 3)) {
    if (s.plus.row_count() > 3 || s.minus.row_count() > 3) continue;
    const FockVector g = build_ground_state(c, s);
    CHECK(apply_hamiltonian(c, spec, g) == sector_energy(s, spec.energies) * g);
  }
}

TEST_CASE("JSON reports round-trip byte for byte") {
  const std::vector<CommandResult> results{
      run_verify(FockContext{FieldKind::Complex, 1, 2, 3}, false),
      run_classify(FockContext{FieldKind::Complex, 2, 3, 6}, 2, std::nullopt),
      run_gram(FockContext{FieldKind::Complex, 2, 2, 4}, SectorLabel::complex(YoungDiagram({1}), {}, 2), 1),
      run_map_irreps('O', 4, 3),
      run_spectrum(6, 10),
  };
  for (const auto& r : results) {
    const std::string text = r.json.dump(2);
    CHECK(nlohmann::json::parse(text).dump(2) == text);
  }
}

TEST_CASE("unitarity bound is symmetric under exchanging the two diagrams") {
  for (int N = 0; N <= 3; ++N)
    for (const auto& s : enumerate_sectors(FieldKind::Complex, N, 4))
      CHECK(unitarity_bound(SectorLabel::complex(s.minus, s.plus, N)));
}
