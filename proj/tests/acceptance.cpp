// Acceptance run: one pass/fail line per criterion, exit status 0 iff all pass.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "bilocal/algebra.hpp"
#include "bilocal/casimir.hpp"
#include "bilocal/gauge.hpp"
#include "bilocal/highest_weight.hpp"
#include "bilocal/spectrum.hpp"
#include "bilocal/suite.hpp"

using namespace bilocal;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

// Sectors with at most `boxes` boxes whose ground state fits in (M, P).
std::vector<SectorLabel> buildable(FieldKind kind, int N, int boxes, int M) {
  std::vector<SectorLabel> out;
  for (const auto& s : enumerate_sectors(kind, N, boxes))
    if (s.plus.row_count() <= M && s.minus.row_count() <= M) out.push_back(s);
  return out;
}

Outcome structure_constants() {
  Outcome o;
  for (auto kind : {FieldKind::Complex, FieldKind::Real})
    for (int N = 1; N <= 3; ++N)
      for (int M = 2; M <= 3; ++M) {
        const CheckReport r = verify_structure_constants(FockContext{kind, N, M, 4}, 2);
        o.require(r.passed, std::string(to_string(kind)) + " N=" + std::to_string(N) + " M=" + std::to_string(M));
      }
  Realization broken;
  broken.central_shift = false;
  o.require(!verify_structure_constants(FockContext{FieldKind::Complex, 1, 2, 4}, 2, broken).passed,
            "corrupted realization not detected");
  return o;
}

Outcome vacuum_relations() {
  Outcome o;
  for (auto kind : {FieldKind::Complex, FieldKind::Real})
    for (int N = 0; N <= 3; ++N)
      o.require(verify_vacuum(FockContext{kind, N, 3, 2}).passed, "vacuum N=" + std::to_string(N));
  return o;
}

Outcome norm_oracles() {
  Outcome o;
  for (int N = 1; N <= 3; ++N) {
    const FockContext c{FieldKind::Complex, N, 3, 6};
    for (const auto& s : buildable(FieldKind::Complex, N, 3, 3))
      o.require(verify_norm_recursions(c, s).passed, s.str());
    const FockContext r{FieldKind::Real, N, 3, 6};
    for (const auto& s : buildable(FieldKind::Real, N, 3, 3))
      o.require(verify_norm_recursions(r, s).passed, s.str());
  }
  return o;
}

Outcome determinants() {
  Outcome o;
  for (auto kind : {FieldKind::Complex, FieldKind::Real}) {
    for (int N = 1; N <= 2; ++N) {
      for (int n : {N, N + 1}) {
        const FockContext ctx{kind, N, n, 2 * n};
        const FockVector v = apply_expr(ctx, determinant_operator(n, n).adjoint(), vacuum(ctx));
        const Rational norm = inner_product(v, v);
        o.require(n == N ? norm > 0 : norm == 0, std::string(to_string(kind)) + " det norm N=" + std::to_string(N));
      }
    }
  }
  const FockContext c{FieldKind::Complex, 2, 3, 6};
  o.require(determinant_recursion_check(c, SectorLabel::complex({}, {}, 2), 3).passed, "complex vacuum recursion");
  o.require(determinant_recursion_check(c, SectorLabel::complex(YoungDiagram({1}), {}, 2), 2).passed,
            "complex ([1],[]) recursion");
  const FockContext r{FieldKind::Real, 2, 3, 6};
  o.require(determinant_recursion_check(r, SectorLabel::real({}, 2), 3).passed, "real vacuum recursion");
  o.require(determinant_recursion_check(r, SectorLabel::real(YoungDiagram({1}), 2), 2).passed, "real [1] recursion");
  for (int n = 1; n <= 3; ++n) {
    o.require(p_polynomial_check(FieldKind::Complex, n, 0).passed, "complex p-polynomial");
    o.require(p_polynomial_check(FieldKind::Real, n, 0).passed, "real p-polynomial");
  }
  return o;
}

Outcome casimirs() {
  Outcome o;
  for (int N = 1; N <= 3; ++N) {
    for (auto kind : {FieldKind::Complex, FieldKind::Real}) {
      const FockContext ctx{kind, N, 3, 6};
      for (const auto& s : buildable(kind, N, 3, 3)) {
        for (int n = 1; n <= 3; ++n) {
          if (s.plus.row_count() > n || s.minus.row_count() > n) continue;
          o.require(verify_casimir_k(ctx, s, n).passed, "C_k " + s.str());
        }
        const int n = 3;
        if (s.plus.row_count() < n && s.minus.row_count() < n && s.plus.column(2) < n) {
          const Weight w = weight_from_sector(s);
          o.require(gamma_value(kind, w.truncated(n), canonical_lambda(s, n), n) == gamma_closed_form(s),
                    "gamma closed form " + s.str());
        }
      }
    }
  }
  for (int N = 1; N <= 2; ++N) {
    const FockContext c{FieldKind::Complex, N, 2, 4};
    for (const auto& s : {SectorLabel::complex({}, {}, N), SectorLabel::complex(YoungDiagram({1}), {}, N),
                          SectorLabel::complex({}, YoungDiagram({1}), N)})
      o.require(verify_gamma_identity(c, s, 2).passed, "gamma identity " + s.str());
    const FockContext r{FieldKind::Real, N, 2, 4};
    o.require(verify_gamma_identity(r, SectorLabel::real({}, N), 2).passed, "gamma identity real vacuum");
    o.require(verify_gamma_identity(r, SectorLabel::real(YoungDiagram({1}), N), 2).passed, "gamma identity real [1]");
  }
  o.require(resolve_casimir_g(FockContext{FieldKind::Complex, 2, 3, 6},
                              SectorLabel::complex(YoungDiagram({1}), {}, 2), 2)
                .passed,
            "C_g resolution");
  o.require(resolve_casimir_g(FockContext{FieldKind::Real, 2, 3, 6}, SectorLabel::real(YoungDiagram({1}), 2), 2).passed,
            "C_g resolution real");
  return o;
}

Outcome classification() {
  Outcome o;
  const std::vector<Rational> eps{1, 2, 3, 4};
  const FockContext c{FieldKind::Complex, 2, 3, 6};
  const auto found = classify_spectrum(c, 2, eps);
  o.require(classification_check(c, 2, eps, found, true).passed, "complex classification check");
  for (const auto& e : found) {
    o.require(e.in_bound, "out-of-bound sector " + e.sector.str());
    o.require(e.multiplicity == weyl_dimension_U(sector_to_irrep_U(e.sector), 2).get_ui(),
              "multiplicity " + e.sector.str());
    if (e.sector == SectorLabel::complex(YoungDiagram({1}), {}, 2)) o.require(e.multiplicity == 2, "([1],[]) mult");
  }
  o.require(found.size() == 6, "sector count");
  const FockContext r{FieldKind::Real, 2, 3, 6};
  const auto real = classify_spectrum(r, 2, eps);
  o.require(classification_check(r, 2, eps, real, false).passed, "real classification check");
  for (const auto& e : real) o.require(e.sector.plus.column(1) + e.sector.plus.column(2) <= 2, "real bound");
  return o;
}

Outcome dictionary() {
  Outcome o;
  for (int N = 1; N <= 3; ++N) o.require(bijection_roundtrip_check_U(N, 4).passed, "U N=" + std::to_string(N));
  for (int N = 2; N <= 4; ++N) o.require(bijection_roundtrip_check_O(N, 4).passed, "O N=" + std::to_string(N));
  for (int N = 2; N <= 4; ++N)
    for (const auto& s : enumerate_sectors(FieldKind::Real, N, 4)) {
      const bool identified = sector_to_irrep_O(s.plus, N).equivalent.has_value();
      o.require(identified == (N % 2 == 0 && 2 * s.plus.row_count() == N), "identification " + s.str());
    }
  return o;
}

Outcome commutant() {
  Outcome o;
  for (auto kind : {FieldKind::Complex, FieldKind::Real})
    for (int N = 1; N <= 3; ++N) {
      const FockContext ctx{kind, N, 2, 4};
      o.require(verify_gauge_commutant(ctx, 2).passed, "commutant N=" + std::to_string(N));
      if (kind != FieldKind::Complex) continue;
      for (const auto& s : buildable(kind, N, 2, 2))
        o.require(verify_gauge_highest_weight(ctx, build_ground_state(ctx, s)).passed, "gauge hw " + s.str());
    }
  return o;
}

Outcome sphere_modes() {
  Outcome o;
  for (int ell = 0; ell <= 10; ++ell) o.require(harmonic_count(4, ell) == (ell + 1) * (ell + 1), "h_ell");
  for (int D : {4, 6, 8})
    for (int ell = 0; ell <= 10; ++ell)
      o.require(oscillator_normalization(ell, D) * mode_ccr_coefficient(ell, D) == 1, "normalization");
  o.require(conformal_spectrum_check(FockContext{FieldKind::Complex, 2, 1, 2}, 4, 14).passed, "complex degeneracy");
  o.require(conformal_spectrum_check(FockContext{FieldKind::Real, 3, 1, 2}, 4, 14).passed, "real degeneracy");
  return o;
}

// Runs a command, returning (exit status, stdout).
std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract(const std::string& cli) {
  Outcome o;
  const std::vector<std::pair<std::string, int>> cases{
      {"verify --kind complex --N 2 --M 2 --P 4", 0},
      {"verify --kind real --N 1 --M 2 --P 4", 0},
      {"verify --kind complex --N 1 --M 2 --P 4 --fault", 1},
      {"classify --kind complex --N 2 --M 3 --P 6 --cutoff 2", 0},
      {"classify --kind real --N 2 --M 3 --P 6 --cutoff 2", 0},
      {"classify --kind complex --N 2 --M 2 --P 4 --cutoff 9", 1},
      {"gram --kind complex --N 2 --M 2 --P 4 --plus 1 --level 1", 0},
      {"gram --kind complex --N 1 --M 2 --P 4 --plus 1 --minus 1", 2},
      {"map-irreps --group U --N 2 --cap 2", 0},
      {"map-irreps --group O --N 3 --cap 2", 0},
      {"spectrum --D 4 --count 14", 0},
      {"verify --N -1", 2},
  };
  for (const auto& [args, code] : cases) {
    const auto first = run(cli + " " + args);
    const auto second = run(cli + " " + args);
    o.require(first.first == code, args + " exit " + std::to_string(first.first));
    o.require(first == second, args + " not reproducible");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "bilocal-cli";
  struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"structure constants", 120, structure_constants},
      {"vacuum relations", 0, vacuum_relations},
      {"norm recursions", 0, norm_oracles},
      {"determinant relations", 0, determinants},
      {"Casimir and gamma", 0, casimirs},
      {"classification completeness", 300, classification},
      {"gauge dictionary", 0, dictionary},
      {"gauge commutant", 0, commutant},
      {"sphere mode spectrum", 0, sphere_modes},
      {"CLI determinism and exit codes", 0, [&] { return cli_contract(cli); }},
  };
  bool all = true;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.require(false, "exceeded time limit");
    all = all && o.ok;
    std::printf("criterion %2d  %-32s %s  (%.2fs)%s%s\n", index++, c.name.c_str(), o.ok ? "PASS" : "FAIL", secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
  }
  return all ? 0 : 1;
}
