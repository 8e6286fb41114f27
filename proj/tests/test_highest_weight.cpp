#include <doctest.h>

#include "bilocal/algebra.hpp"
#include "bilocal/errors.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/highest_weight.hpp"
#include "oracles.hpp"

using namespace bilocal;

namespace {

SectorLabel cx(std::vector<int> p, std::vector<int> m, int N) {
  return SectorLabel::complex(YoungDiagram(p), YoungDiagram(m), N);
}

// U(N) highest weight of (Y+, Y-): Y+ rows from the top, Y- rows negated from
// the bottom.
std::vector<int> gauge_weight(const SectorLabel& s) {
  std::vector<int> w(s.N, 0);
  for (int i = 0; i < s.plus.row_count(); ++i) w[i] += s.plus.rows()[i];
  for (int i = 0; i < s.minus.row_count(); ++i) w[s.N - 1 - i] -= s.minus.rows()[i];
  return w;
}

long long factorial_ll(int n) { return n <= 1 ? 1 : n * factorial_ll(n - 1); }

}  // namespace

TEST_CASE("weights of small sectors") {
  const Weight w = weight_from_sector(cx({1}, {}, 2));
  CHECK(w.plus(1) == 2);
  CHECK(w.plus(2) == 1);
  CHECK(w.minus(1) == 1);
  CHECK(w.tail == 1);
  const Weight h = weight_from_sector(cx({2}, {}, 1));
  CHECK(h.plus(1) == ratio(5, 2));
  CHECK(h.minus(1) == ratio(1, 2));
  CHECK(h.tail == ratio(1, 2));
  const Weight r = weight_from_sector(SectorLabel::real(YoungDiagram({2, 1}), 3));
  CHECK(r.plus(1) == ratio(7, 2));
  CHECK(r.plus(2) == ratio(5, 2));
  CHECK(r.plus(3) == ratio(3, 2));
}

TEST_CASE("ground states satisfy the highest-weight conditions") {
  const FockContext c{FieldKind::Complex, 2, 3, 6};
  for (const auto& s : {cx({}, {}, 2), cx({1}, {}, 2), cx({}, {1}, 2), cx({1}, {1}, 2), cx({1, 1}, {}, 2),
                        cx({2}, {}, 2), cx({2, 1}, {}, 2)}) {
    CAPTURE(s.str());
    const FockVector g = build_ground_state(c, s);
    CHECK_FALSE(g.is_zero());
    CHECK(verify_hw_conditions(c, g, weight_from_sector(s)).passed);
    CHECK(verify_gauge_highest_weight(c, g).passed);
  }
  const FockContext r{FieldKind::Real, 3, 3, 5};
  for (const auto& y : {std::vector<int>{}, {1}, {2}, {1, 1}, {2, 1}}) {
    const SectorLabel s = SectorLabel::real(YoungDiagram(y), 3);
    CAPTURE(s.str());
    const FockVector g = build_ground_state(r, s);
    CHECK(verify_hw_conditions(r, g, weight_from_sector(s)).passed);
  }
}

TEST_CASE("out-of-bound and oversized sectors are rejected") {
  const FockContext c{FieldKind::Complex, 1, 3, 6};
  CHECK_THROWS_AS(build_ground_state(c, cx({1}, {1}, 1)), BoundViolation);
  CHECK_THROWS_AS(build_ground_state(FockContext{FieldKind::Complex, 2, 1, 6}, cx({1, 1}, {}, 2)), TruncationError);
  CHECK_THROWS_AS(build_ground_state(FockContext{FieldKind::Complex, 2, 3, 1}, cx({2}, {}, 2)), TruncationError);
  CHECK_THROWS_AS(build_ground_state(FockContext{FieldKind::Real, 2, 3, 4}, SectorLabel::real(YoungDiagram({1, 1, 1}), 2)),
                  BoundViolation);
}

TEST_CASE("norm recursions against brute force") {
  const FockContext c{FieldKind::Complex, 2, 3, 6};
  for (const auto& s : {cx({}, {}, 2), cx({1}, {}, 2), cx({1}, {1}, 2), cx({2}, {}, 2)})
    CHECK(verify_norm_recursions(c, s).passed);
  const FockContext r{FieldKind::Real, 2, 3, 6};
  for (const auto& y : {std::vector<int>{}, {1}, {2}, {1, 1}})
    CHECK(verify_norm_recursions(r, SectorLabel::real(YoungDiagram(y), 2)).passed);
}

TEST_CASE("vacuum pair norms through the recursion oracle") {
  for (int N = 1; N <= 3; ++N) {
    const Weight w = weight_from_sector(cx({}, {}, N));
    CHECK(norm_recursion_oracle(w, NormQuery{NormRecursion::RecX, 1, 2, true, 1}) == oracle::complex_pair_norm(N));
    const Weight wr = weight_from_sector(SectorLabel::real({}, N));
    CHECK(norm_recursion_oracle(wr, NormQuery{NormRecursion::RecX, 1, 1, true, 1}) ==
          oracle::real_diagonal_pair_norm(N));
    CHECK(norm_recursion_oracle(wr, NormQuery{NormRecursion::RecX, 1, 2, true, 1}) ==
          oracle::real_offdiagonal_pair_norm(N));
  }
}

TEST_CASE("lowering a one-row state past its length gives a null vector") {
  // Y+ = [2], N = 1: h+ = (5/2, 1/2, ...). Moving three quanta from mode 1
  // to mode 2 is impossible with two particles.
  const FockContext c{FieldKind::Complex, 1, 2, 4};
  const SectorLabel s = cx({2}, {}, 1);
  const FockVector g = build_ground_state(c, s);
  bool found_null = false;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      if (i >= j) continue;
      const NormQuery q{NormRecursion::RecE, i, j, true, 3};
      const Rational brute = norm_recursion_brute_force(c, g, q);
      CHECK(brute == norm_recursion_oracle(weight_from_sector(s), q));
      if (brute == 0) found_null = true;
    }
  }
  CHECK(found_null);
}

TEST_CASE("determinant norms on the vacuum follow Cauchy-Binet") {
  // ||det X*|0>||^2 = n!^2 C(N, n) for the complex field.
  for (int N = 1; N <= 3; ++N) {
    for (int n = 1; n <= 3 && 2 * n <= 6; ++n) {
      const FockContext c{FieldKind::Complex, N, n, 2 * n};
      const FockVector v = apply_expr(c, determinant_operator(n, n).adjoint(), vacuum(c));
      long long binom = 1;
      for (int k = 0; k < n; ++k) binom = binom * (N - k) / (k + 1);
      if (n > N) binom = 0;
      CAPTURE(N);
      CAPTURE(n);
      CHECK(inner_product(v, v) == Rational(static_cast<long>(factorial_ll(n) * factorial_ll(n) * binom)));
    }
  }
}

TEST_CASE("determinant recursion and p-polynomials") {
  CHECK(determinant_recursion_check(FockContext{FieldKind::Complex, 2, 3, 6}, cx({}, {}, 2), 3).passed);
  CHECK(determinant_recursion_check(FockContext{FieldKind::Complex, 2, 3, 6}, cx({1}, {}, 2), 2).passed);
  CHECK(determinant_recursion_check(FockContext{FieldKind::Real, 2, 3, 6}, SectorLabel::real({}, 2), 3).passed);
  CHECK(determinant_recursion_check(FockContext{FieldKind::Real, 2, 3, 6}, SectorLabel::real(YoungDiagram({1}), 2), 2)
            .passed);
  CHECK_THROWS_AS(determinant_recursion_check(FockContext{FieldKind::Complex, 2, 3, 3}, cx({}, {}, 2), 2),
                  TruncationError);
  for (int n = 1; n <= 3; ++n) {
    CHECK(p_polynomial_check(FieldKind::Complex, n, 0).passed);
    CHECK(p_polynomial_check(FieldKind::Real, n, 0).passed);
  }
}

TEST_CASE("classification against independent enumeration") {
  const std::vector<Rational> eps{1, 2, 3, 4};
  const auto parts = oracle::partitions_up_to(4);
  for (int N = 0; N <= 2; ++N) {
    for (int cutoff = 0; cutoff <= 2; ++cutoff) {
      const FockContext c{FieldKind::Complex, N, 3, 6};
      std::size_t expected = 0;
      for (const auto& p : parts)
        for (const auto& m : parts)
          if (p.size() + m.size() <= static_cast<std::size_t>(N) &&
              oracle::box_energy(p) + oracle::box_energy(m) <= cutoff)
            ++expected;
      const auto found = classify_spectrum(c, cutoff, eps);
      CAPTURE(N);
      CAPTURE(cutoff);
      CHECK(found.size() == expected);
      for (const auto& e : found) {
        CHECK(e.in_bound);
        CHECK(static_cast<long long>(e.multiplicity) == oracle::u_dimension(gauge_weight(e.sector), N));
        CHECK(e.energy == oracle::box_energy(e.sector.plus.rows()) + oracle::box_energy(e.sector.minus.rows()));
      }
      CHECK(classification_check(c, cutoff, eps, found, true).passed);
    }
  }
}

TEST_CASE("classification examples") {
  const std::vector<Rational> eps{1, 2, 3, 4};
  const auto n2 = classify_spectrum(FockContext{FieldKind::Complex, 2, 3, 6}, 1, eps);
  REQUIRE(n2.size() == 3);
  CHECK(n2[0].sector == cx({}, {}, 2));
  for (std::size_t k = 1; k < 3; ++k) CHECK(n2[k].multiplicity == 2);

  const auto n1 = classify_spectrum(FockContext{FieldKind::Complex, 1, 3, 6}, 2, eps);
  CHECK(n1.size() == 5);
  for (const auto& e : n1) CHECK(e.sector != cx({1}, {1}, 1));

  const auto n0 = classify_spectrum(FockContext{FieldKind::Complex, 0, 3, 6}, 2, eps);
  REQUIRE(n0.size() == 1);
  CHECK(n0[0].sector.boxes() == 0);

  const auto real = classify_spectrum(FockContext{FieldKind::Real, 2, 3, 6}, 3, eps);
  bool saw_column = false;
  for (const auto& e : real) {
    CHECK(e.sector.plus.column(1) + e.sector.plus.column(2) <= 2);
    if (e.sector.plus == YoungDiagram({1, 1})) {
      saw_column = true;
      CHECK(e.energy == 3);
    }
  }
  CHECK(saw_column);
}

TEST_CASE("classification refuses windows that cannot hold the cutoff") {
  const std::vector<Rational> eps{1, 2, 3};
  CHECK_THROWS_AS(classify_spectrum(FockContext{FieldKind::Complex, 2, 2, 4}, 9, eps), TruncationError);
  CHECK_THROWS_AS(classify_spectrum(FockContext{FieldKind::Complex, 2, 2, 1}, 2, eps), TruncationError);
}
