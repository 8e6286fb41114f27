#include "bilocal/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bilocal/algebra.hpp"
#include "bilocal/casimir.hpp"
#include "bilocal/errors.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/highest_weight.hpp"
#include "bilocal/linalg.hpp"
#include "bilocal/spectrum.hpp"

namespace bilocal {

namespace {

std::vector<ModeSlot> all_slots(const FockContext& ctx) {
  std::vector<ModeSlot> out;
  for (int code = 0; code < ctx.slot_count(); ++code) out.push_back(ctx.decode(static_cast<SlotCode>(code)));
  return out;
}

std::string slot_name(const ModeSlot& s) {
  return std::string(s.species == Species::A ? "a" : "b") + "_" + std::to_string(s.mode) + "^" + std::to_string(s.flavor);
}

nlohmann::json context_json(const FockContext& ctx) {
  return {{"kind", std::string(to_string(ctx.kind))}, {"N", ctx.N}, {"M", ctx.M}, {"P", ctx.P}};
}

std::string bool_text(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

// ---------------------------------------------------------------------------
// Checks

CheckReport verify_ccr(const FockContext& ctx, int margin) {
  CheckReport report("ccr");
  const auto basis = monomial_basis(ctx, std::max(ctx.P - margin, 0));
  const auto slots = all_slots(ctx);
  for (const auto& m : basis) {
    const FockVector v(ctx, m);
    for (const auto& s : slots) {
      for (const auto& t : slots) {
        const FockVector mixed = apply_annihilation(ctx, s, apply_creation(ctx, t, v)) -
                                 apply_creation(ctx, t, apply_annihilation(ctx, s, v));
        const FockVector want = s == t ? v : FockVector(ctx);
        report.record(mixed == want, {"[" + slot_name(s) + "," + slot_name(t) + "*]", describe(ctx, m),
                                      describe(want), describe(mixed)});
        const FockVector aa = apply_annihilation(ctx, s, apply_annihilation(ctx, t, v)) -
                              apply_annihilation(ctx, t, apply_annihilation(ctx, s, v));
        report.record(aa.is_zero(), {"[" + slot_name(s) + "," + slot_name(t) + "]", describe(ctx, m), "0", describe(aa)});
        const FockVector cc = apply_creation(ctx, s, apply_creation(ctx, t, v)) -
                              apply_creation(ctx, t, apply_creation(ctx, s, v));
        report.record(cc.is_zero(), {"[" + slot_name(s) + "*," + slot_name(t) + "*]", describe(ctx, m), "0", describe(cc)});
      }
    }
  }
  report.details["basis_size"] = basis.size();
  return report;
}

CheckReport verify_creation_adjointness(const FockContext& ctx, int margin) {
  CheckReport report("creation_adjointness");
  // Only pairs (v, w) with w = v + slot can pair nontrivially; both directions
  // of every such pair are visited.
  const auto basis = monomial_basis(ctx, std::max(ctx.P - margin, 0));
  for (const auto& m : basis) {
    const FockVector v(ctx, m);
    for (const auto& s : all_slots(ctx)) {
      const FockVector cv = apply_creation(ctx, s, v);
      for (const auto& [w, c] : cv.terms()) {
        const FockVector wv(ctx, w);
        const Rational lhs = inner_product(cv, wv);
        const Rational rhs = inner_product(v, apply_annihilation(ctx, s, wv));
        report.record(lhs == rhs, {slot_name(s), describe(ctx, m) + " | " + describe(ctx, w), to_string(lhs), to_string(rhs)});
      }
      const FockVector av = apply_annihilation(ctx, s, v);
      for (const auto& [u, c] : av.terms()) {
        const FockVector uv(ctx, u);
        const Rational lhs = inner_product(apply_creation(ctx, s, uv), v);
        const Rational rhs = inner_product(uv, av);
        report.record(lhs == rhs, {slot_name(s), describe(ctx, u) + " | " + describe(ctx, m), to_string(lhs), to_string(rhs)});
      }
    }
  }
  return report;
}

CheckReport verify_gram_positivity(const FockContext& ctx, std::size_t max_size) {
  CheckReport report("gram_positivity");
  auto basis = monomial_basis(ctx, ctx.P);
  if (basis.size() > max_size) basis.resize(max_size);
  RationalMatrix g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      g(a, b) = inner_product(FockVector(ctx, basis[a]), FockVector(ctx, basis[b]));
  const auto minors = leading_principal_minors(g);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    report.record(minors[k] > 0, {"leading minor " + std::to_string(k + 1), describe(ctx, basis[k]), "> 0",
                                  to_string(minors[k])});
  }
  report.details["monomials"] = basis.size();
  return report;
}

CheckReport verify_generator_adjointness(const FockContext& ctx, int margin) {
  CheckReport report("generator_adjointness");
  const int limit = std::max(ctx.P - margin, 0);
  const auto basis = monomial_basis(ctx, limit);
  GeneratorCache cache(ctx);
  for (const auto& m : basis) {
    const FockVector v(ctx, m);
    for (const auto& g : all_generators(ctx.kind, ctx.M)) {
      const GeneratorLabel gd = adjoint(g);
      const FockVector gv = cache.image(g, m);
      for (const auto& [w, c] : gv.terms()) {
        if (static_cast<int>(w.particle_count()) > limit) continue;
        const FockVector wv(ctx, w);
        const Rational lhs = inner_product(gv, wv);
        const Rational rhs = inner_product(v, cache.image(gd, w));
        report.record(lhs == rhs, {to_string(g) + " vs " + to_string(gd), describe(ctx, m) + " | " + describe(ctx, w),
                                   to_string(lhs), to_string(rhs)});
      }
    }
  }
  return report;
}

CheckReport verify_vacuum(const FockContext& ctx) {
  CheckReport report("vacuum");
  const FockVector zero = vacuum(ctx);
  const Rational half = ratio(ctx.N, 2);
  const std::vector<GeneratorKind> kinds = ctx.kind == FieldKind::Complex
                                               ? std::vector<GeneratorKind>{GeneratorKind::Eplus, GeneratorKind::Eminus}
                                               : std::vector<GeneratorKind>{GeneratorKind::E};
  for (auto k : kinds) {
    for (int i = 1; i <= ctx.M; ++i) {
      for (int j = 1; j <= ctx.M; ++j) {
        const GeneratorLabel g{k, i, j};
        const FockVector got = apply_generator(ctx, g, zero);
        const FockVector want = (i == j ? half : Rational(0)) * zero;
        report.record(got == want, {to_string(g), "|0>", describe(want), describe(got)});
      }
    }
  }
  for (int i = 1; i <= ctx.M; ++i) {
    for (int j = 1; j <= ctx.M; ++j) {
      const FockVector got = apply_generator(ctx, X(i, j), zero);
      report.record(got.is_zero(), {to_string(X(i, j)), "|0>", "0", describe(got)});
    }
  }
  if (ctx.kind == FieldKind::Complex) {
    const FockVector q = apply_charge(ctx, zero);
    report.record(q.is_zero(), {"Q", "|0>", "0", describe(q)});
  }
  const FockVector h = apply_hamiltonian(ctx, HamiltonianSpec::default_spectrum(ctx), zero);
  report.record(h.is_zero(), {"H_c", "|0>", "0", describe(h)});
  return report;
}

CheckReport verify_grading(const FockContext& ctx, int margin) {
  CheckReport report("grading");
  const HamiltonianSpec spec = HamiltonianSpec::default_spectrum(ctx);
  const OperatorExpr h = hamiltonian_expr(ctx, spec);
  GeneratorCache cache(ctx);
  const auto basis = monomial_basis(ctx, std::max(ctx.P - margin, 0));
  for (const auto& g : all_generators(ctx.kind, ctx.M)) {
    const Rational ei = spec.energies[g.i - 1];
    const Rational ej = spec.energies[g.j - 1];
    Rational shift;
    switch (g.kind) {
      case GeneratorKind::X: shift = -(ei + ej); break;
      case GeneratorKind::Xstar: shift = ei + ej; break;
      default: shift = ei - ej; break;
    }
    for (const auto& m : basis) {
      const FockVector v(ctx, m);
      const FockVector gv = cache.image(g, m);
      const FockVector got = cache.apply(h, gv) - cache.apply(g, cache.apply(h, v));
      const FockVector want = shift * gv;
      report.record(got == want, {"[H_c," + to_string(g) + "]", describe(ctx, m), describe(want), describe(got)});
    }
  }
  return report;
}

CheckReport verify_charge_commutant(const FockContext& ctx, int margin) {
  CheckReport report("charge_commutant");
  const OperatorExpr q = charge_expr(ctx);
  GeneratorCache cache(ctx);
  for (const auto& m : monomial_basis(ctx, std::max(ctx.P - margin, 0))) {
    const FockVector v(ctx, m);
    for (const auto& g : all_generators(ctx.kind, ctx.M)) {
      const FockVector got = cache.apply(q, cache.image(g, m)) - cache.apply(g, cache.apply(q, v));
      report.record(got.is_zero(), {"[Q," + to_string(g) + "]", describe(ctx, m), "0", describe(got)});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Commands

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& r) {
    std::string text;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      text += cell;
      if (c + 1 < width.size()) text += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

CommandResult run_verify(const FockContext& ctx, bool fault) {
  ctx.validate();
  const int margin = 2;
  std::vector<CheckReport> reports;
  std::vector<std::pair<std::string, std::string>> skipped;
  const auto attempt = [&](const std::string& name, const std::function<CheckReport()>& f) {
    try {
      reports.push_back(f());
    } catch (const Unsupported& e) {
      skipped.emplace_back(name, e.what());
    } catch (const TruncationError& e) {
      skipped.emplace_back(name, e.what());
    }
  };
  Realization realization;
  realization.central_shift = !fault;
  attempt("ccr", [&] { return verify_ccr(ctx, margin); });
  attempt("creation_adjointness", [&] { return verify_creation_adjointness(ctx, 1); });
  attempt("gram_positivity", [&] { return verify_gram_positivity(ctx, 40); });
  attempt("generator_adjointness", [&] { return verify_generator_adjointness(ctx, margin); });
  attempt("structure_constants", [&] { return verify_structure_constants(ctx, margin, realization); });
  attempt("vacuum", [&] { return verify_vacuum(ctx); });
  attempt("grading", [&] { return verify_grading(ctx, margin); });
  if (ctx.kind == FieldKind::Complex) {
    attempt("charge_commutant", [&] { return verify_charge_commutant(ctx, margin); });
  } else {
    skipped.emplace_back("charge_commutant", "no charge operator in the real case");
  }
  if (ctx.N > 0) attempt("gauge_commutant", [&] { return verify_gauge_commutant(ctx, margin); });
  attempt("casimir_difference", [&] { return verify_casimir_difference(ctx, std::min(ctx.M, 2)); });
  if (ctx.P >= 2) {
    attempt("casimir_g", [&] {
      return resolve_casimir_g(ctx, ctx.kind == FieldKind::Complex ? SectorLabel::complex({}, {}, ctx.N)
                                                                     : SectorLabel::real({}, ctx.N),
                               ctx.M);
    });
  }

  CommandResult out;
  nlohmann::json checks = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    out.passed = out.passed && r.passed;
    checks.push_back(r.to_json());
    std::string first;
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      first = f.pair + " on " + f.monomial + ": expected " + f.expected + ", got " + f.got;
    }
    rows.push_back({r.name, bool_text(r.passed), std::to_string(r.cases), std::to_string(r.failure_count), first});
  }
  nlohmann::json skip = nlohmann::json::array();
  for (const auto& [name, why] : skipped) {
    skip.push_back({{"name", name}, {"reason", why}});
    rows.push_back({name, "skipped", "0", "0", why});
  }
  out.json = {{"command", "verify"}, {"context", context_json(ctx)}, {"fault", fault},
              {"checks", checks},    {"skipped", skip},              {"passed", out.passed}};
  out.table = render_table({"check", "status", "cases", "failures", "first counterexample"}, rows);
  out.table += std::string("overall: ") + (out.passed ? "pass" : "FAIL") + "\n";
  return out;
}

CommandResult run_classify(const FockContext& ctx, const Rational& cutoff, std::optional<int> D) {
  ctx.validate();
  std::vector<Rational> energies;
  if (D) {
    energies = mode_energies(*D, ctx.M + 1);
  } else {
    for (int i = 1; i <= ctx.M + 1; ++i) energies.emplace_back(i);
  }
  const auto found = classify_spectrum(ctx, cutoff, energies);
  const CheckReport check = classification_check(ctx, cutoff, energies, found, !D.has_value());

  CommandResult out;
  out.passed = check.passed;
  nlohmann::json sectors = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows;
  const bool complex = ctx.kind == FieldKind::Complex;
  for (const auto& e : found) {
    nlohmann::json j;
    if (complex) {
      j["Y_plus"] = e.sector.plus.to_json();
      j["Y_minus"] = e.sector.minus.to_json();
      j["weight_head_plus"] = e.weight.to_json()["head_plus"];
      j["weight_head_minus"] = e.weight.to_json()["head_minus"];
    } else {
      j["Y"] = e.sector.plus.to_json();
      j["weight_head"] = e.weight.to_json()["head"];
    }
    j["N"] = ctx.N;
    j["tail"] = to_json(e.weight.tail);
    j["multiplicity"] = e.multiplicity;
    j["energy"] = to_json(e.energy);
    j["bound"] = e.in_bound;
    std::string gauge = "-";
    std::string dim = "-";
    if (e.diagram_form && e.in_bound) {
      if (complex) {
        const GaugeIrrepU irr = sector_to_irrep_U(e.sector);
        j["gauge"] = irr.to_json();
        j["gauge_dimension"] = weyl_dimension_U(irr, ctx.N).get_si();
        gauge = irr.str();
        dim = std::to_string(j["gauge_dimension"].get<long>());
      } else {
        const OLabeling lab = sector_to_irrep_O(e.sector.plus, ctx.N);
        j["gauge"] = lab.canonical.to_json();
        if (lab.equivalent) j["gauge_equivalent"] = lab.equivalent->to_json();
        gauge = lab.canonical.str() + (lab.equivalent ? "~" + lab.equivalent->str() : "");
      }
    }
    sectors.push_back(j);
    std::vector<std::string> row;
    if (complex) {
      row = {e.sector.plus.str(), e.sector.minus.str()};
    } else {
      row = {e.sector.plus.str()};
    }
    row.insert(row.end(), {e.weight.str(), to_string(e.energy), std::to_string(e.multiplicity), gauge, dim,
                           e.in_bound ? "yes" : "NO"});
    if (!complex) row.erase(row.end() - 2);
    rows.push_back(row);
  }
  nlohmann::json eps = nlohmann::json::array();
  for (const auto& e : energies) eps.push_back(to_json(e));
  out.json = {{"command", "classify"}, {"context", context_json(ctx)}, {"cutoff", to_json(cutoff)},
              {"energies", eps},       {"sectors", sectors},         {"check", check.to_json()},
              {"passed", out.passed}};
  if (D) out.json["D"] = *D;
  std::vector<std::string> header = complex ? std::vector<std::string>{"Y+", "Y-"} : std::vector<std::string>{"Y"};
  header.insert(header.end(), {"weight", "energy", "mult", "gauge label", "dim", "in bound"});
  if (!complex) header.erase(header.end() - 2);
  out.table = render_table(header, rows);
  out.table += std::to_string(found.size()) + " sectors; check " + bool_text(check.passed) + "\n";
  return out;
}

CommandResult run_gram(const FockContext& ctx, const SectorLabel& s, int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  if (s.boxes() + 2 * level > ctx.P) {
    throw TruncationError("level " + std::to_string(level) + " on " + s.str() + " needs P >= " +
                          std::to_string(s.boxes() + 2 * level));
  }
  const FockVector h = build_ground_state(ctx, s);
  const Rational hh = inner_product(h, h);

  std::vector<GeneratorLabel> raising;
  for (int i = 1; i <= ctx.M; ++i)
    for (int j = ctx.kind == FieldKind::Real ? i : 1; j <= ctx.M; ++j) raising.push_back(Xstar(i, j));
  std::vector<std::vector<GeneratorLabel>> words;
  std::vector<GeneratorLabel> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == level) {
      words.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < raising.size(); ++k) {
      cur.push_back(raising[k]);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);

  GeneratorCache cache(ctx);
  std::vector<FockVector> vecs;
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& w : words) {
    vecs.push_back(cache.apply(OperatorExpr::word(w), h));
    std::string name;
    for (const auto& g : w) name += (name.empty() ? "" : " ") + to_string(g);
    labels.push_back(name.empty() ? "1" : name);
  }
  RationalMatrix g(vecs.size(), vecs.size());
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a; b < vecs.size(); ++b) g(a, b) = g(b, a) = inner_product(vecs[a], vecs[b]) / hh;
  const auto minors = leading_principal_minors(g);
  const bool psd = is_positive_semidefinite(g);

  CommandResult out;
  out.passed = psd;
  nlohmann::json matrix = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t a = 0; a < vecs.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    std::vector<std::string> text{labels[a].get<std::string>()};
    for (std::size_t b = 0; b < vecs.size(); ++b) {
      row.push_back(to_json(g(a, b)));
      text.push_back(to_string(g(a, b)));
    }
    matrix.push_back(row);
    rows.push_back(text);
  }
  nlohmann::json mj = nlohmann::json::array();
  for (const auto& m : minors) mj.push_back(to_json(m));
  nlohmann::json sector = {{"N", s.N}};
  if (s.kind == FieldKind::Complex) {
    sector["Y_plus"] = s.plus.to_json();
    sector["Y_minus"] = s.minus.to_json();
  } else {
    sector["Y"] = s.plus.to_json();
  }
  out.json = {{"command", "gram"},
              {"context", context_json(ctx)},
              {"sector", sector},
              {"level", level},
              {"vectors", labels},
              {"matrix", matrix},
              {"leading_minors", mj},
              {"rank", rank(g)},
              {"positive_semidefinite", psd},
              {"passed", psd}};
  std::vector<std::string> header{"vector"};
  for (std::size_t b = 0; b < vecs.size(); ++b) header.push_back("#" + std::to_string(b + 1));
  out.table = render_table(header, rows);
  std::string minors_text;
  for (const auto& m : minors) minors_text += (minors_text.empty() ? "" : ", ") + to_string(m);
  out.table += "leading minors: " + minors_text + "\n";
  out.table += "rank " + std::to_string(rank(g)) + "; positive semidefinite: " + (psd ? "yes" : "NO") + "\n";
  return out;
}

CommandResult run_map_irreps(char group, int N, int cap) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  CommandResult out;
  nlohmann::json entries = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows;
  if (group == 'U') {
    const CheckReport check = bijection_roundtrip_check_U(N, cap);
    for (const auto& s : enumerate_sectors(FieldKind::Complex, N, cap)) {
      const GaugeIrrepU irr = sector_to_irrep_U(s);
      nlohmann::json hw = highest_weight_U(irr, N);
      const Integer dim = weyl_dimension_U(irr, N);
      entries.push_back({{"Y_plus", s.plus.to_json()},
                         {"Y_minus", s.minus.to_json()},
                         {"irrep", irr.to_json()},
                         {"highest_weight", hw},
                         {"dimension", dim.get_si()}});
      rows.push_back({s.plus.str(), s.minus.str(), irr.str(), hw.dump(), dim.get_str()});
    }
    out.passed = check.passed;
    out.json = {{"command", "map-irreps"}, {"group", "U"}, {"N", N}, {"cap", cap},
                {"entries", entries},       {"check", check.to_json()}, {"passed", out.passed}};
    out.table = render_table({"Y+", "Y-", "(Y,q)", "highest weight", "dim"}, rows);
    out.table += std::to_string(entries.size()) + " sectors; bijection " + bool_text(check.passed) + "\n";
    return out;
  }
  if (group == 'O') {
    const CheckReport check = bijection_roundtrip_check_O(N, cap);
    for (const auto& s : enumerate_sectors(FieldKind::Real, N, cap)) {
      const OLabeling lab = sector_to_irrep_O(s.plus, N);
      nlohmann::json e = {{"Y", s.plus.to_json()}, {"irrep", lab.canonical.to_json()}};
      if (lab.equivalent) e["equivalent"] = lab.equivalent->to_json();
      entries.push_back(e);
      rows.push_back({s.plus.str(), lab.canonical.str(), lab.equivalent ? lab.equivalent->str() : "-"});
    }
    out.passed = check.passed;
    out.json = {{"command", "map-irreps"}, {"group", "O"}, {"N", N}, {"cap", cap},
                {"entries", entries},       {"check", check.to_json()}, {"passed", out.passed}};
    out.table = render_table({"Y", "(Y,sign)", "equivalent"}, rows);
    out.table += std::to_string(entries.size()) + " sectors; bijection " + bool_text(check.passed) + "\n";
    return out;
  }
  throw std::invalid_argument(std::string("unknown group '") + group + "' (expected U or O)");
}

CommandResult run_spectrum(int D, int count) {
  CommandResult out;
  const nlohmann::json rows = spectrum_table(D, count);
  std::vector<std::vector<std::string>> text;
  for (const auto& r : rows) {
    text.push_back({std::to_string(r["ell"].get<int>()), std::to_string(r["h"].get<long>()),
                    r["energy"].is_string() ? r["energy"].get<std::string>() : std::to_string(r["energy"].get<long>()),
                    std::to_string(r["modes_included"].get<long>()), std::to_string(r["cumulative"].get<long>())});
  }
  out.json = {{"command", "spectrum"}, {"D", D}, {"count", count}, {"d0", to_json(ratio(D - 2, 2))}, {"levels", rows},
              {"passed", true}};
  out.table = render_table({"ell", "h_ell", "energy", "included", "cumulative"}, text);
  return out;
}

}  // namespace bilocal
