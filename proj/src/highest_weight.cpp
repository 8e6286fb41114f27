#include "bilocal/highest_weight.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bilocal/errors.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/linalg.hpp"

namespace bilocal {

// ---------------------------------------------------------------------------
// Weight

Rational Weight::plus(int i) const {
  if (i < 1) throw std::invalid_argument("weight index must be >= 1");
  return i <= static_cast<int>(head_plus.size()) ? head_plus[i - 1] : tail;
}

Rational Weight::minus(int i) const {
  if (kind == FieldKind::Real) throw Unsupported("real weights have a single sequence");
  if (i < 1) throw std::invalid_argument("weight index must be >= 1");
  return i <= static_cast<int>(head_minus.size()) ? head_minus[i - 1] : tail;
}

void Weight::validate() const {
  if (tail < 0) throw std::invalid_argument("tail must be nonnegative");
  const auto check = [&](const std::vector<Rational>& head, const char* name) {
    for (std::size_t i = 0; i < head.size(); ++i) {
      const Rational d = head[i] - tail;
      if (d <= 0 || !is_integer(d)) {
        throw std::invalid_argument(std::string(name) + " entries must exceed the tail by positive integers");
      }
      if (i > 0 && head[i] > head[i - 1]) throw std::invalid_argument(std::string(name) + " must be weakly decreasing");
    }
  };
  check(head_plus, "head_plus");
  if (kind == FieldKind::Real) {
    if (!head_minus.empty()) throw std::invalid_argument("real weights carry no minus head");
    return;
  }
  check(head_minus, "head_minus");
  // Heads only raise entries above the tail, so h^+_i + h^-_j >= 2 tail >= 0.
}

std::vector<Rational> Weight::truncated(int n) const {
  std::vector<Rational> out;
  for (int i = 1; i <= n; ++i) out.push_back(plus(i));
  if (kind == FieldKind::Complex)
    for (int i = 1; i <= n; ++i) out.push_back(minus(i));
  return out;
}

nlohmann::json Weight::to_json() const {
  nlohmann::json j;
  const auto arr = [](const std::vector<Rational>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(bilocal::to_json(x));
    return a;
  };
  if (kind == FieldKind::Complex) {
    j["head_plus"] = arr(head_plus);
    j["head_minus"] = arr(head_minus);
  } else {
    j["head"] = arr(head_plus);
  }
  j["tail"] = bilocal::to_json(tail);
  return j;
}

std::string Weight::str() const {
  const auto seq = [&](const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
  };
  if (kind == FieldKind::Real) return seq(head_plus) + " tail " + to_string(tail);
  return "+" + seq(head_plus) + " -" + seq(head_minus) + " tail " + to_string(tail);
}

Weight weight_from_sector(const SectorLabel& s) {
  require_bound(s);
  Weight w;
  w.kind = s.kind;
  w.tail = ratio(s.N, 2);
  for (int m : s.plus.rows()) w.head_plus.push_back(m + w.tail);
  if (s.kind == FieldKind::Complex)
    for (int m : s.minus.rows()) w.head_minus.push_back(m + w.tail);
  return w;
}

// ---------------------------------------------------------------------------
// Ground states

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// det(c_i^{p*}) over modes 1..r and flavors first..first+r-1, applied to v.
FockVector apply_slot_determinant(const FockContext& ctx, const FockVector& v, int r, int first_flavor, Species s) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  FockVector out(ctx);
  do {
    FockVector cur = v;
    for (int i = 1; i <= r && !cur.is_zero(); ++i) cur = apply_creation(ctx, {i, first_flavor + perm[i - 1], s}, cur);
    out += Rational(permutation_sign(perm)) * cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void require_sector_context(const FockContext& ctx, const SectorLabel& s) {
  ctx.validate();
  if (s.kind != ctx.kind) throw ContextError("sector and context have different field kinds");
  if (s.N != ctx.N) throw ContextError("sector N differs from context N");
  require_bound(s);
  const int rows = std::max(s.plus.row_count(), s.minus.row_count());
  if (rows > ctx.M) {
    throw TruncationError("sector " + s.str() + " needs M >= " + std::to_string(rows) + " (has " +
                          std::to_string(ctx.M) + ")");
  }
  if (s.boxes() > ctx.P) {
    throw TruncationError("sector " + s.str() + " needs P >= " + std::to_string(s.boxes()) + " (has " +
                          std::to_string(ctx.P) + ")");
  }
}

FockVector primitive_integer(FockVector v) {
  if (v.is_zero()) return v;
  Integer den = 1;
  for (const auto& [m, c] : v.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer num = 0;
  for (const auto& [m, c] : v.terms()) {
    const Integer scaled = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (v.terms().begin()->second < 0) factor = -factor;
  v *= factor;
  return v;
}

std::vector<int> sector_occupation(const FockContext& ctx, const SectorLabel& s) {
  std::vector<int> occ(static_cast<std::size_t>(ctx.species_count() * ctx.M), 0);
  for (int i = 1; i <= ctx.M; ++i) {
    occ[i - 1] = s.plus.row(i);
    if (ctx.kind == FieldKind::Complex) occ[ctx.M + i - 1] = s.minus.row(i);
  }
  return occ;
}

}  // namespace

FockVector build_ground_state(const FockContext& ctx, const SectorLabel& s) {
  require_sector_context(ctx, s);
  FockVector v = vacuum(ctx);
  for (int r : s.plus.columns()) v = apply_slot_determinant(ctx, v, r, 1, Species::A);
  if (ctx.kind == FieldKind::Complex) {
    for (int r : s.minus.columns()) v = apply_slot_determinant(ctx, v, r, ctx.N + 1 - r, Species::B);
    return v;
  }

  // Real case: subtract the component of T inside span{X*(k,l) u} of the same
  // weight; what is left lies in the joint kernel of the X(k,l).
  const std::vector<int> occ = sector_occupation(ctx, s);
  std::vector<FockVector> raised;
  for (int k = 1; k <= ctx.M; ++k) {
    for (int l = k; l <= ctx.M; ++l) {
      std::vector<int> lower = occ;
      --lower[k - 1];
      --lower[l - 1];
      if (lower[k - 1] < 0 || lower[l - 1] < 0) continue;
      for (const auto& u : monomials_with_occupation(ctx, lower)) {
        FockVector w = apply_generator(ctx, Xstar(k, l), FockVector(ctx, u));
        if (!w.is_zero()) raised.push_back(std::move(w));
      }
    }
  }
  if (!raised.empty()) {
    const std::size_t n = raised.size();
    RationalMatrix gram(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t a = 0; a < n; ++a) {
      rhs[a] = inner_product(raised[a], v);
      for (std::size_t b = a; b < n; ++b) gram(a, b) = gram(b, a) = inner_product(raised[a], raised[b]);
    }
    const auto c = solve(gram, rhs);
    if (!c) throw std::logic_error("projection system is inconsistent");
    for (std::size_t a = 0; a < n; ++a)
      if ((*c)[a] != 0) v -= (*c)[a] * raised[a];
  }
  if (v.is_zero()) throw std::logic_error("ground state projection vanished for " + s.str());
  return primitive_integer(std::move(v));
}

CheckReport verify_hw_conditions(const FockContext& ctx, const FockVector& v, const Weight& expected) {
  CheckReport report("hw_conditions");
  if (v.is_zero()) {
    report.fail({"nonzero", "0", "nonzero vector", "0"});
    return report;
  }
  for (const auto& g : all_generators(ctx.kind, ctx.M)) {
    if (g.kind == GeneratorKind::Xstar) continue;
    const FockVector out = apply_generator(ctx, g, v);
    FockVector want(ctx);
    if (g.kind != GeneratorKind::X && g.i == g.j) {
      want = (g.kind == GeneratorKind::Eminus ? expected.minus(g.i) : expected.plus(g.i)) * v;
    } else if (g.kind != GeneratorKind::X && g.i > g.j) {
      continue;  // lowering E: no condition
    }
    report.record(out == want, {to_string(g), describe(v), describe(want), describe(out)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Norm recursions

namespace {

Rational falling(const Rational& x, int n) {
  Rational out = 1;
  for (int k = 0; k < n; ++k) out *= x - k;
  return out;
}

Rational family_value(const Weight& w, bool plus, int i) { return plus ? w.plus(i) : w.minus(i); }

GeneratorKind e_family(FieldKind kind, bool plus) {
  if (kind == FieldKind::Real) return GeneratorKind::E;
  return plus ? GeneratorKind::Eplus : GeneratorKind::Eminus;
}

}  // namespace

Rational norm_recursion_oracle(const Weight& w, const NormQuery& q) {
  if (q.kind == NormRecursion::RecX) {
    if (w.kind == FieldKind::Complex) return w.plus(q.j) + w.minus(q.i);
    return Rational(q.i == q.j ? 2 : 1) * (w.plus(q.i) + w.plus(q.j));
  }
  if (q.i >= q.j) throw std::invalid_argument("RecE needs i < j");
  if (q.n < 0) throw std::invalid_argument("RecE needs n >= 0");
  const bool plus = w.kind == FieldKind::Real || q.plus;
  const Rational d = family_value(w, plus, q.i) - family_value(w, plus, q.j);
  return Rational(factorial(static_cast<unsigned>(q.n))) * falling(d, q.n);
}

Rational norm_recursion_brute_force(const FockContext& ctx, const FockVector& ground, const NormQuery& q) {
  const Rational hh = inner_product(ground, ground);
  if (hh == 0) throw std::invalid_argument("ground state has zero norm");
  FockVector u = ground;
  if (q.kind == NormRecursion::RecX) {
    u = apply_generator(ctx, Xstar(q.i, q.j), u);
  } else {
    const GeneratorLabel lower{e_family(ctx.kind, q.plus), q.j, q.i};
    for (int k = 0; k < q.n && !u.is_zero(); ++k) u = apply_generator(ctx, lower, u);
  }
  return inner_product(u, u) / hh;
}

CheckReport verify_norm_recursions(const FockContext& ctx, const SectorLabel& s) {
  CheckReport report("norm_recursions");
  const FockVector h = build_ground_state(ctx, s);
  const Weight w = weight_from_sector(s);
  std::size_t null_vectors = 0;
  if (s.boxes() + 2 <= ctx.P) {
    for (int i = 1; i <= ctx.M; ++i) {
      for (int j = 1; j <= ctx.M; ++j) {
        const NormQuery q{NormRecursion::RecX, i, j};
        const Rational want = norm_recursion_oracle(w, q);
        const Rational got = norm_recursion_brute_force(ctx, h, q);
        report.record(want == got, {"X(" + std::to_string(i) + "," + std::to_string(j) + ")X*", s.str(),
                                    to_string(want), to_string(got)});
      }
    }
  } else {
    report.details["recX_skipped"] = "P too small for two extra particles";
  }
  const std::vector<bool> families = ctx.kind == FieldKind::Complex ? std::vector<bool>{true, false} : std::vector<bool>{true};
  for (bool plus : families) {
    for (int i = 1; i <= ctx.M; ++i) {
      for (int j = i + 1; j <= ctx.M; ++j) {
        const Rational d = family_value(w, plus, i) - family_value(w, plus, j);
        const int top = static_cast<int>(d.get_num().get_si()) + 1;
        for (int n = 1; n <= top; ++n) {
          const NormQuery q{NormRecursion::RecE, i, j, plus, n};
          const Rational want = norm_recursion_oracle(w, q);
          const Rational got = norm_recursion_brute_force(ctx, h, q);
          if (n == top) {
            ++null_vectors;
            report.record(want == 0 && got == 0, {"null vector order " + std::to_string(n), s.str(), "0", to_string(got)});
          }
          report.record(want == got, {std::string(plus ? "E+" : "E-") + "(" + std::to_string(i) + "," +
                                          std::to_string(j) + ")^" + std::to_string(n),
                                      s.str(), to_string(want), to_string(got)});
        }
      }
    }
  }
  report.details["null_vectors"] = null_vectors;
  return report;
}

// ---------------------------------------------------------------------------
// Determinants

OperatorExpr determinant_operator(int n, int M, int r) {
  if (n < 1 || r < 0 || r + n > M) {
    throw std::invalid_argument("determinant of order " + std::to_string(n) + " offset " + std::to_string(r) +
                                " needs M >= " + std::to_string(r + n));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  OperatorExpr out;
  do {
    OperatorExpr::Word w;
    for (int i = 1; i <= n; ++i) w.push_back(X(r + i, r + perm[i - 1]));
    out.add(w, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational determinant_recursion_value(const Weight& w, int n) {
  Rational out = 1;
  for (int m = 1; m <= n; ++m) {
    if (w.kind == FieldKind::Complex) {
      out *= w.plus(m) + w.minus(m) - m + 1;
    } else {
      out *= 2 * (2 * w.plus(m) - m + 1);
    }
  }
  return out;
}

CheckReport determinant_recursion_check(const FockContext& ctx, const SectorLabel& s, int n) {
  CheckReport report("determinant_recursion");
  if (n > ctx.M) throw TruncationError("determinant order exceeds M");
  if (s.boxes() + 2 * n > ctx.P) {
    throw TruncationError("determinant recursion needs P >= " + std::to_string(s.boxes() + 2 * n));
  }
  const FockVector h = build_ground_state(ctx, s);
  const Weight w = weight_from_sector(s);
  OperatorExpr::Word diag;
  for (int m = 1; m <= n; ++m) diag.push_back(X(m, m));
  const OperatorExpr op = OperatorExpr::word(diag) * determinant_operator(n, ctx.M).adjoint();
  GeneratorCache cache(ctx);
  const FockVector got = cache.apply(op, h);
  const Rational value = determinant_recursion_value(w, n);
  const FockVector want = value * h;
  report.record(got == want, {"X(1,1)..X(n,n) D_n*", s.str() + " n=" + std::to_string(n), describe(want), describe(got)});
  report.details["closed_form"] = to_json(value);
  report.details["n"] = n;
  return report;
}

CheckReport p_polynomial_check(FieldKind kind, int n, int r) {
  CheckReport report("p_polynomial");
  if (n < 1 || r < 0) throw std::invalid_argument("p_polynomial_check needs n >= 1 and r >= 0");
  std::vector<Rational> values;
  for (int N = 0; N <= n + 2; ++N) {
    const FockContext ctx{kind, N, r + n, 2 * n};
    const FockVector u = apply_expr(ctx, determinant_operator(n, ctx.M, r).adjoint(), vacuum(ctx));
    values.push_back(inner_product(u, u));
    const Rational& v = values.back();
    const std::string at = "N=" + std::to_string(N);
    if (N < n) {
      report.record(v == 0, {"vanishes below n", at, "0", to_string(v)});
    } else {
      report.record(v > 0, {"positive from n on", at, "> 0", to_string(v)});
    }
  }
  // (n+1)-th finite differences of a degree-n polynomial vanish.
  std::vector<Rational> diff = values;
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  for (const auto& d : diff) report.record(d == 0, {"finite difference of order n+1", "", "0", to_string(d)});
  // Proportional to N(N-1)...(N-n+1) with a single coefficient.
  const Rational c = values[n] / falling(Rational(n), n);
  for (int N = 0; N <= n + 2; ++N) {
    const Rational want = c * falling(Rational(N), n);
    report.record(values[N] == want, {"falling factorial", "N=" + std::to_string(N), to_string(want), to_string(values[N])});
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  report.details["norms"] = arr;
  report.details["coefficient"] = to_json(c);
  report.details["n"] = n;
  report.details["r"] = r;
  return report;
}

// ---------------------------------------------------------------------------
// Classification

Rational sector_energy(const SectorLabel& s, const std::vector<Rational>& energies) {
  const int rows = std::max(s.plus.row_count(), s.minus.row_count());
  if (rows > static_cast<int>(energies.size())) throw std::out_of_range("sector has more rows than listed energies");
  Rational e = 0;
  for (int i = 1; i <= rows; ++i) e += energies[i - 1] * (s.plus.row(i) + s.minus.row(i));
  return e;
}

namespace {

void require_classification_window(const FockContext& ctx, const Rational& cutoff, const std::vector<Rational>& energies) {
  ctx.validate();
  if (cutoff < 0) throw std::invalid_argument("energy cutoff must be nonnegative");
  if (static_cast<int>(energies.size()) < ctx.M + 1) {
    throw TruncationError("classification needs energies for modes 1..M+1");
  }
  HamiltonianSpec{energies, energies}.validate(ctx.M + 1);
  if (energies[ctx.M] <= cutoff) {
    throw TruncationError("cutoff " + to_string(cutoff) + " reaches mode M+1 (energy " + to_string(energies[ctx.M]) +
                          "); increase M");
  }
  const Rational most = cutoff / energies[0];
  const Integer floor_particles = most.get_num() / most.get_den();
  if (floor_particles > ctx.P) {
    throw TruncationError("cutoff " + to_string(cutoff) + " allows " + floor_particles.get_str() +
                          " particles but P = " + std::to_string(ctx.P));
  }
}

}  // namespace

std::vector<SectorEntry> classify_spectrum(const FockContext& ctx, const Rational& cutoff,
                                           const std::vector<Rational>& energies) {
  require_classification_window(ctx, cutoff, energies);
  const int groups = ctx.species_count() * ctx.M;

  // Lowering operators for the ground-state conditions.
  std::vector<GeneratorLabel> lowering;
  for (const auto& g : all_generators(ctx.kind, ctx.M)) {
    if (g.kind == GeneratorKind::X) lowering.push_back(g);
    if ((g.kind == GeneratorKind::Eplus || g.kind == GeneratorKind::Eminus || g.kind == GeneratorKind::E) && g.i < g.j) {
      lowering.push_back(g);
    }
  }

  std::vector<SectorEntry> out;
  std::vector<int> occ(static_cast<std::size_t>(groups), 0);
  GeneratorCache cache(ctx);

  const auto process = [&](const Rational& energy) {
    const auto basis = monomials_with_occupation(ctx, occ);
    if (basis.empty()) return;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (std::size_t g = 0; g < lowering.size(); ++g) {
        for (const auto& [m, coef] : cache.image(lowering[g], basis[c]).terms()) {
          auto [it, fresh] = row_index.emplace(std::make_pair(g, m), row_index.size());
          columns[c].emplace_back(it->second, coef);
        }
      }
    }
    RationalMatrix mat(row_index.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (const auto& [r, coef] : columns[c]) mat(r, c) = coef;
    const std::size_t nullity = basis.size() - rank(mat);
    if (nullity == 0) return;

    SectorEntry e;
    e.multiplicity = nullity;
    e.energy = energy;
    e.weight.kind = ctx.kind;
    e.weight.tail = ratio(ctx.N, 2);
    const auto head = [&](int offset) {
      std::vector<int> rows;
      for (int i = 0; i < ctx.M; ++i) rows.push_back(occ[offset + i]);
      while (!rows.empty() && rows.back() == 0) rows.pop_back();
      return rows;
    };
    const auto rows_plus = head(0);
    const auto rows_minus = ctx.kind == FieldKind::Complex ? head(ctx.M) : std::vector<int>{};
    for (int m : rows_plus) e.weight.head_plus.push_back(m + e.weight.tail);
    for (int m : rows_minus) e.weight.head_minus.push_back(m + e.weight.tail);
    const auto decreasing = [](const std::vector<int>& r) {
      return std::is_sorted(r.rbegin(), r.rend()) && std::find(r.begin(), r.end(), 0) == r.end();
    };
    e.diagram_form = decreasing(rows_plus) && decreasing(rows_minus);
    if (e.diagram_form) {
      e.sector = ctx.kind == FieldKind::Complex
                     ? SectorLabel::complex(YoungDiagram(rows_plus), YoungDiagram(rows_minus), ctx.N)
                     : SectorLabel::real(YoungDiagram(rows_plus), ctx.N);
      e.in_bound = unitarity_bound(e.sector);
    } else {
      e.sector.kind = ctx.kind;
      e.sector.N = ctx.N;
      e.in_bound = false;
    }
    out.push_back(std::move(e));
  };

  std::function<void(int, Rational, int)> rec = [&](int group, Rational energy, int particles) {
    if (group == groups) {
      process(energy);
      return;
    }
    const Rational& eps = energies[group % ctx.M];
    for (int k = 0;; ++k) {
      const Rational e = energy + eps * k;
      if (e > cutoff || particles + k > ctx.P) break;
      occ[group] = k;
      rec(group + 1, e, particles + k);
    }
    occ[group] = 0;
  };
  rec(0, Rational(0), 0);

  std::stable_sort(out.begin(), out.end(), [](const SectorEntry& a, const SectorEntry& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.sector < b.sector;
  });
  return out;
}

CheckReport classification_check(const FockContext& ctx, const Rational& cutoff, const std::vector<Rational>& energies,
                                 const std::vector<SectorEntry>& found, bool check_dimension) {
  CheckReport report("classification");
  const Rational most = cutoff / energies.at(0);
  const int cap = static_cast<int>(Integer(most.get_num() / most.get_den()).get_si());
  std::set<SectorLabel> expected;
  for (const auto& s : enumerate_sectors(ctx.kind, ctx.N, cap)) {
    if (std::max(s.plus.row_count(), s.minus.row_count()) > ctx.M) continue;
    if (sector_energy(s, energies) <= cutoff) expected.insert(s);
  }
  std::set<SectorLabel> seen;
  for (const auto& e : found) {
    report.record(e.diagram_form, {"diagram form", e.weight.str(), "decreasing heads", "not a diagram"});
    report.record(e.in_bound, {"unitarity bound", e.sector.str(), "in bound", "violated"});
    if (!e.diagram_form) continue;
    seen.insert(e.sector);
    report.record(expected.count(e.sector) == 1, {"expected sector", e.sector.str(), "listed", "unexpected"});
    report.record(e.weight == weight_from_sector(e.sector), {"weight", e.sector.str(),
                                                             weight_from_sector(e.sector).str(), e.weight.str()});
    report.record(e.energy == sector_energy(e.sector, energies),
                  {"energy", e.sector.str(), to_string(sector_energy(e.sector, energies)), to_string(e.energy)});
    if (check_dimension && ctx.kind == FieldKind::Complex) {
      const Integer dim = weyl_dimension_U(sector_to_irrep_U(e.sector), ctx.N);
      report.record(dim == e.multiplicity, {"multiplicity = U(N) dimension", e.sector.str(), dim.get_str(),
                                            std::to_string(e.multiplicity)});
    }
  }
  for (const auto& s : expected) report.record(seen.count(s) == 1, {"completeness", s.str(), "found", "missing"});
  report.details["expected_sectors"] = expected.size();
  report.details["found_sectors"] = found.size();
  return report;
}

}  // namespace bilocal
