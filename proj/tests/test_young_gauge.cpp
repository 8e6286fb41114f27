#include <doctest.h>

#include "bilocal/errors.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/young.hpp"
#include "oracles.hpp"

using namespace bilocal;

TEST_CASE("diagram basics") {
  const YoungDiagram y({3, 1});
  CHECK(y.size() == 4);
  CHECK(y.columns() == std::vector<int>{2, 1, 1});
  CHECK(YoungDiagram::from_columns({2, 1, 1}) == y);
  CHECK(y.row(3) == 0);
  CHECK(YoungDiagram::from_json(y.to_json()) == y);
  CHECK_THROWS(YoungDiagram({1, 2}));
  CHECK_THROWS(YoungDiagram({0}));
}

TEST_CASE("diagram counts match partition numbers") {
  const int p[] = {1, 1, 2, 3, 5, 7};
  for (int n = 0; n <= 5; ++n) CHECK(diagrams_of_size(n, n).size() == static_cast<std::size_t>(p[n]));
  CHECK(diagrams_of_size(4, 2).size() == 3);
}

TEST_CASE("Pieri rules") {
  CHECK(pieri_add_box(YoungDiagram({1})).size() == 2);
  CHECK(pieri_add_box(YoungDiagram({2, 1})).size() == 3);
  const auto strip = pieri_add_two_boxes_row(YoungDiagram({1}));
  CHECK(strip == std::set<YoungDiagram>{YoungDiagram({3}), YoungDiagram({2, 1})});
}

TEST_CASE("unitarity bounds") {
  CHECK(unitarity_bound(SectorLabel::complex(YoungDiagram({1}), YoungDiagram({1}), 2)));
  CHECK_FALSE(unitarity_bound(SectorLabel::complex(YoungDiagram({1}), YoungDiagram({1}), 1)));
  CHECK(unitarity_bound(SectorLabel::real(YoungDiagram({1, 1}), 2)));
  CHECK_FALSE(unitarity_bound(SectorLabel::real(YoungDiagram({1, 1}), 1)));
  CHECK_FALSE(unitarity_bound(SectorLabel::real(YoungDiagram({2, 2}), 3)));
  CHECK_THROWS_AS(require_bound(SectorLabel::real(YoungDiagram({1, 1}), 1)), BoundViolation);
}

TEST_CASE("U(N) labels and dimensions") {
  for (int N = 1; N <= 3; ++N) {
    for (const auto& s : enumerate_sectors(FieldKind::Complex, N, 4)) {
      const GaugeIrrepU irr = sector_to_irrep_U(s);
      CHECK(irrep_U_to_sector(irr, N) == s);
      CHECK(irr.q == s.plus.size() - s.minus.size());
      const auto hw = highest_weight_U(irr, N);
      CHECK(irrep_U_from_highest_weight(hw) == irr);
      CHECK(weyl_dimension_U(irr, N) == oracle::u_dimension(hw, N));
    }
  }
  // ([], [1,1]) at N = 2 is the inverse determinant: label ([], -2).
  const auto det = sector_to_irrep_U(SectorLabel::complex({}, YoungDiagram({1, 1}), 2));
  CHECK(det.Y.empty());
  CHECK(det.q == -2);
  CHECK(conjugate_relative(YoungDiagram({1}), 3) == YoungDiagram({1, 1}));
}

TEST_CASE("bijections") {
  for (int N = 1; N <= 3; ++N) CHECK(bijection_roundtrip_check_U(N, 4).passed);
  for (int N = 2; N <= 4; ++N) CHECK(bijection_roundtrip_check_O(N, 4).passed);
}

TEST_CASE("O(N) sign labels") {
  // Even N with N/2 rows: (Y,+) and (Y,-) coincide.
  const OLabeling half = sector_to_irrep_O(YoungDiagram({1}), 2);
  CHECK(half.equivalent.has_value());
  const OLabeling two = sector_to_irrep_O(YoungDiagram({2, 1}), 4);
  CHECK(two.equivalent.has_value());
  CHECK_FALSE(sector_to_irrep_O(YoungDiagram({1}), 3).equivalent.has_value());
  // More than N/2 rows: associate of the column-complemented diagram.
  const OLabeling col = sector_to_irrep_O(YoungDiagram({1, 1}), 3);
  CHECK(col.canonical.Y == YoungDiagram({1}));
  CHECK(col.canonical.sign == OSign::Minus);
  CHECK(irrep_O_to_sector(col.canonical, 3) == YoungDiagram({1, 1}));
  CHECK(sector_to_irrep_O(YoungDiagram({1}), 3).canonical.sign == OSign::Plus);
  // The literal rule yields labels with too many rows.
  CHECK_FALSE(sector_to_irrep_O(YoungDiagram({1, 1}), 3, ORule::Printed).standard);
}

TEST_CASE("gauge generators commute with the algebra") {
  for (auto kind : {FieldKind::Complex, FieldKind::Real})
    for (int N = 1; N <= 3; ++N) CHECK(verify_gauge_commutant(FockContext{kind, N, 2, 4}, 2).passed);
}
