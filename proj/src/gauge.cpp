#include "bilocal/gauge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bilocal/algebra.hpp"
#include "bilocal/errors.hpp"

namespace bilocal {

YoungDiagram conjugate_relative(const YoungDiagram& y, int N) {
  auto cols = y.columns();
  std::vector<int> out;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    if (*it > N) throw std::invalid_argument("column of height " + std::to_string(*it) + " exceeds N=" + std::to_string(N));
    out.push_back(N - *it);
  }
  return YoungDiagram::from_columns(out);
}

GaugeIrrepU sector_to_irrep_U(const SectorLabel& s) {
  if (s.kind != FieldKind::Complex) throw std::invalid_argument("U(N) labels apply to complex sectors");
  require_bound(s);
  std::vector<int> cols;
  const auto minus_cols = s.minus.columns();
  for (auto it = minus_cols.rbegin(); it != minus_cols.rend(); ++it) cols.push_back(s.N - *it);
  for (int h : s.plus.columns()) cols.push_back(h);
  return {YoungDiagram::from_columns(cols), s.plus.size() - s.minus.size()};
}

SectorLabel irrep_U_to_sector(const GaugeIrrepU& irr, int N) {
  if (N < 0) throw InvariantViolation("N must be nonnegative");
  if (N == 0) {
    if (!irr.Y.empty() || irr.q != 0) throw InvariantViolation("U(0) has only the trivial label");
    return SectorLabel::complex({}, {}, 0);
  }
  if (irr.Y.row_count() > N) throw InvariantViolation("diagram " + irr.Y.str() + " has more than N rows");
  const int diff = irr.Y.size() - irr.q;
  if (diff % N != 0) throw InvariantViolation("q = |Y| mod N violated for " + irr.str());
  const int m = diff / N;  // first row length of Y-
  if (m < 0) throw InvariantViolation("label " + irr.str() + " needs a negative number of conjugate columns");
  auto cols = irr.Y.columns();
  if (static_cast<int>(cols.size()) < m) cols.resize(static_cast<std::size_t>(m), 0);
  std::vector<int> minus_cols;
  for (int k = m - 1; k >= 0; --k) {
    if (cols[k] > N - 1) {
      throw InvariantViolation("label " + irr.str() + " has no valid split: conjugate column of height " +
                               std::to_string(cols[k]));
    }
    minus_cols.push_back(N - cols[k]);
  }
  std::vector<int> plus_cols(cols.begin() + m, cols.end());
  auto s = SectorLabel::complex(YoungDiagram::from_columns(plus_cols), YoungDiagram::from_columns(minus_cols), N);
  require_bound(s);
  return s;
}

std::vector<int> highest_weight_U(const GaugeIrrepU& irr, int N) {
  if (N <= 0) return {};
  const int diff = irr.Y.size() - irr.q;
  if (diff % N != 0) throw InvariantViolation("q = |Y| mod N violated for " + irr.str());
  const int shift = diff / N;
  std::vector<int> lambda(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) lambda[i - 1] = irr.Y.row(i) - shift;
  return lambda;
}

GaugeIrrepU irrep_U_from_highest_weight(const std::vector<int>& lambda) {
  if (lambda.empty()) return {};
  const int shift = std::max(0, -lambda.back());
  std::vector<int> rows;
  for (int l : lambda) {
    if (l + shift > 0) rows.push_back(l + shift);
  }
  return {YoungDiagram(rows), std::accumulate(lambda.begin(), lambda.end(), 0)};
}

Integer weyl_dimension_U(const GaugeIrrepU& irr, int N) {
  const auto lambda = highest_weight_U(irr, N);
  Rational dim = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) dim *= ratio(lambda[i] - lambda[j] + j - i, j - i);
  if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not an integer");
  return dim.get_num();
}

namespace {

YoungDiagram replace_first_column(const YoungDiagram& y, int height) {
  auto cols = y.columns();
  if (cols.empty()) {
    cols.push_back(height);
  } else {
    cols[0] = height;
  }
  return YoungDiagram::from_columns(cols);
}

bool standard_O(const YoungDiagram& y, int N) { return 2 * y.row_count() <= N; }

}  // namespace

OLabeling sector_to_irrep_O(const YoungDiagram& y, int N, ORule rule) {
  auto s = SectorLabel::real(y, N);
  require_bound(s);
  const int r = y.column(1);
  const YoungDiagram swapped = replace_first_column(y, N - r);
  const GaugeIrrepO plus{y, OSign::Plus};
  const GaugeIrrepO minus{swapped, OSign::Minus};
  OLabeling out;
  const bool plus_branch = rule == ORule::Corrected ? 2 * r <= N : 2 * r >= N;
  const bool minus_branch = rule == ORule::Corrected ? 2 * r >= N : 2 * r <= N;
  if (plus_branch) {
    out.canonical = plus;
    if (minus_branch) out.equivalent = minus;
  } else {
    out.canonical = minus;
  }
  out.standard = standard_O(out.canonical.Y, N);
  return out;
}

YoungDiagram irrep_O_to_sector(const GaugeIrrepO& label, int N) {
  if (!standard_O(label.Y, N)) {
    throw InvariantViolation("O(" + std::to_string(N) + ") label " + label.str() + " has more than N/2 rows");
  }
  if (label.sign == OSign::Plus) return label.Y;
  return replace_first_column(label.Y, N - label.Y.column(1));
}

namespace {

void enumerate_dominant(int N, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int upper, int budget) {
    if (static_cast<int>(cur.size()) == N) {
      out.push_back(cur);
      return;
    }
    for (int v = upper; v >= -cap; --v) {
      if (std::abs(v) > budget) continue;
      cur.push_back(v);
      rec(v, budget - std::abs(v));
      cur.pop_back();
    }
  };
  rec(cap, cap);
}

}  // namespace

CheckReport bijection_roundtrip_check_U(int N, int cap) {
  CheckReport report("bijection_U");
  const auto sectors = enumerate_sectors(FieldKind::Complex, N, cap);
  std::set<SectorLabel> sector_set(sectors.begin(), sectors.end());
  std::size_t charge_bound_exceptions = 0;
  std::string charge_bound_example;

  for (const auto& s : sectors) {
    const GaugeIrrepU irr = sector_to_irrep_U(s);
    const bool congruent = N == 0 || ((irr.Y.size() - irr.q) % N + N) % N == 0;
    report.record(congruent, {"q = |Y| mod N", s.str(), "congruent", irr.str()});
    if (std::abs(irr.q) > irr.Y.size()) {
      ++charge_bound_exceptions;
      if (charge_bound_example.empty()) charge_bound_example = s.str() + " -> " + irr.str();
    }
    try {
      const SectorLabel back = irrep_U_to_sector(irr, N);
      report.record(back == s, {"sector->irrep->sector", s.str(), s.str(), back.str()});
    } catch (const Error& e) {
      report.fail({"sector->irrep->sector", s.str(), s.str(), e.what()});
    }
  }

  std::vector<std::vector<int>> weights;
  if (N > 0) enumerate_dominant(N, cap, weights);
  else weights.push_back({});
  std::set<SectorLabel> reached;
  for (const auto& lambda : weights) {
    const GaugeIrrepU irr = irrep_U_from_highest_weight(lambda);
    std::string lam = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) lam += (i ? "," : "") + std::to_string(lambda[i]);
    lam += ")";
    try {
      const SectorLabel s = irrep_U_to_sector(irr, N);
      reached.insert(s);
      report.record(sector_to_irrep_U(s) == irr, {"irrep->sector->irrep", irr.str(), irr.str(), sector_to_irrep_U(s).str()});
      report.record(highest_weight_U(irr, N) == lambda, {"label->highest weight", irr.str(), lam, "mismatch"});
      report.record(sector_set.count(s) == 1, {"irrep image within enumerated sectors", irr.str(), "member", s.str()});
    } catch (const Error& e) {
      report.fail({"irrep->sector", irr.str(), "valid split", e.what()});
    }
  }
  report.record(reached.size() == sector_set.size(),
                {"totality", "N=" + std::to_string(N), std::to_string(sector_set.size()) + " sectors",
                 std::to_string(reached.size()) + " reached"});
  report.record(weights.size() == sector_set.size(),
                {"cardinality", "N=" + std::to_string(N), std::to_string(sector_set.size()),
                 std::to_string(weights.size())});
  report.details["sectors"] = sectors.size();
  report.details["irreps"] = weights.size();
  report.details["labels_with_abs_q_greater_than_size"] = charge_bound_exceptions;
  if (!charge_bound_example.empty()) report.details["abs_q_example"] = charge_bound_example;
  return report;
}

CheckReport bijection_roundtrip_check_O(int N, int cap) {
  CheckReport report("bijection_O");
  const auto sectors = enumerate_sectors(FieldKind::Real, N, cap);
  std::size_t printed_nonstandard = 0;
  std::string printed_example;

  for (const auto& s : sectors) {
    const OLabeling lab = sector_to_irrep_O(s.plus, N);
    report.record(lab.standard, {"label has <= N/2 rows", s.str(), "standard", lab.canonical.str()});
    if (lab.standard) {
      const YoungDiagram back = irrep_O_to_sector(lab.canonical, N);
      report.record(back == s.plus, {"sector->label->sector", s.str(), s.plus.str(), back.str()});
    }
    if (lab.equivalent) {
      const bool expected_pair = N % 2 == 0 && 2 * s.plus.row_count() == N;
      report.record(expected_pair, {"equivalence only for N even with N/2 rows", s.str(), "no partner",
                                    lab.equivalent->str()});
      const YoungDiagram back = irrep_O_to_sector(*lab.equivalent, N);
      report.record(back == s.plus, {"equivalent label->sector", s.str(), s.plus.str(), back.str()});
    }
    const OLabeling printed = sector_to_irrep_O(s.plus, N, ORule::Printed);
    if (!printed.standard) {
      ++printed_nonstandard;
      if (printed_example.empty()) printed_example = s.str() + " -> " + printed.canonical.str();
    }
  }

  // Every standard label, both signs, |Y| <= cap.
  std::map<YoungDiagram, std::vector<GaugeIrrepO>> preimages;
  std::size_t labels = 0;
  for (int size = 0; size <= cap; ++size) {
    for (const auto& y : diagrams_of_size(size, N / 2)) {
      for (OSign sign : {OSign::Plus, OSign::Minus}) {
        const GaugeIrrepO label{y, sign};
        ++labels;
        const YoungDiagram s = irrep_O_to_sector(label, N);
        const bool in_bound = unitarity_bound(SectorLabel::real(s, N));
        report.record(in_bound, {"label->sector in bound", label.str(), "r+s<=N", s.str()});
        if (!in_bound) continue;
        const OLabeling lab = sector_to_irrep_O(s, N);
        const bool round = lab.canonical == label || (lab.equivalent && *lab.equivalent == label);
        report.record(round, {"label->sector->label", label.str(), label.str(), lab.canonical.str()});
        preimages[s].push_back(label);
      }
    }
  }
  for (const auto& [s, ls] : preimages) {
    if (ls.size() == 1) {
      const auto& l = ls.front();
      const bool should_pair = N % 2 == 0 && 2 * l.Y.row_count() == N;
      report.record(!should_pair, {"identified label missing its partner", l.str(), "both signs", "one sign"});
      continue;
    }
    const bool ok = ls.size() == 2 && ls[0].Y == ls[1].Y && ls[0].sign != ls[1].sign && N % 2 == 0 &&
                    2 * ls[0].Y.row_count() == N;
    std::string got;
    for (const auto& l : ls) got += l.str();
    report.record(ok, {"labels sharing a sector", s.str(), "(Y,+)~(Y,-) with N/2 rows, N even", got});
  }
  report.details["sectors"] = sectors.size();
  report.details["labels"] = labels;
  report.details["printed_rule_nonstandard_labels"] = printed_nonstandard;
  if (!printed_example.empty()) report.details["printed_rule_example"] = printed_example;
  return report;
}

FockVector apply_gauge_generator(const FockContext& ctx, int p, int q, const FockVector& v) {
  if (p < 1 || q < 1 || p > ctx.N || q > ctx.N) throw ContextError("gauge indices outside 1..N");
  FockVector out(ctx);
  for (int i = 1; i <= ctx.M; ++i) {
    out += apply_creation(ctx, {i, p, Species::A}, apply_annihilation(ctx, {i, q, Species::A}, v));
    if (ctx.kind == FieldKind::Complex) {
      out -= apply_creation(ctx, {i, q, Species::B}, apply_annihilation(ctx, {i, p, Species::B}, v));
    } else {
      out -= apply_creation(ctx, {i, q, Species::A}, apply_annihilation(ctx, {i, p, Species::A}, v));
    }
  }
  return out;
}

CheckReport verify_gauge_commutant(const FockContext& ctx, int margin) {
  ctx.validate();
  CheckReport report("gauge_commutant");
  const auto basis = monomial_basis(ctx, std::max(ctx.P - margin, 0));
  const auto gens = all_generators(ctx.kind, ctx.M);
  GeneratorCache cache(ctx);
  for (int p = 1; p <= ctx.N; ++p) {
    for (int q = 1; q <= ctx.N; ++q) {
      if (ctx.kind == FieldKind::Real && p >= q) continue;
      for (const auto& m : basis) {
        const FockVector mv(ctx, m);
        const FockVector gm = apply_gauge_generator(ctx, p, q, mv);
        for (const auto& g : gens) {
          const FockVector lhs = apply_gauge_generator(ctx, p, q, cache.image(g, m));
          const FockVector rhs = cache.apply(g, gm);
          report.record(lhs == rhs, {"[E^{" + std::to_string(p) + std::to_string(q) + "}," + to_string(g) + "]",
                                     describe(ctx, m), describe(rhs), describe(lhs)});
        }
      }
    }
  }
  return report;
}

CheckReport verify_gauge_highest_weight(const FockContext& ctx, const FockVector& v) {
  CheckReport report("gauge_highest_weight");
  if (ctx.kind != FieldKind::Complex) throw Unsupported("gauge highest-weight check is defined for U(N)");
  for (int p = 1; p <= ctx.N; ++p) {
    for (int q = p + 1; q <= ctx.N; ++q) {
      const FockVector out = apply_gauge_generator(ctx, p, q, v);
      report.record(out.is_zero(), {"E^{" + std::to_string(p) + std::to_string(q) + "}", describe(v), "0", describe(out)});
    }
  }
  return report;
}

}  // namespace bilocal
