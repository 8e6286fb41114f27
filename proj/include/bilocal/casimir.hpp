#pragma once

#include <vector>

#include "bilocal/algebra.hpp"
#include "bilocal/fock.hpp"
#include "bilocal/rational.hpp"
#include "bilocal/report.hpp"
#include "bilocal/young.hpp"

namespace bilocal {

// Weight vectors below have length 2n (complex: e+_1..e+_n then e-_1..e-_n)
// or n (real), with the Euclidean pairing.

/// Compact Casimir: sum_{i,j<=n} (E+_ij E+_ji + E-_ij E-_ji), or sum E_ij E_ji.
OperatorExpr casimir_k(FieldKind kind, int n, int M);
/// Noncompact Casimir: C_k - sum (X*_ij X_ij + X_ij X*_ij), with an extra
/// factor 1/2 on the X terms in the real case.
OperatorExpr casimir_g(FieldKind kind, int n, int M);

std::vector<Rational> weyl_rho(FieldKind kind, int n);
/// Complex: rho - (n/2) sum (e+_i + e-_i), i.e. 1/2 - i. Real: -i.
std::vector<Rational> weyl_delta(FieldKind kind, int n);

Rational pairing(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// (lambda+rho, lambda+rho) - (rho, rho). Throws on a length mismatch.
Rational casimir_k_eigenvalue(FieldKind kind, const std::vector<Rational>& lambda, int n);
/// (h+delta, h+delta) - (delta, delta): the value the operator action produces.
Rational casimir_g_eigenvalue(FieldKind kind, const std::vector<Rational>& h, int n);
/// (h+delta, h+delta) - (h, h), the alternative reading kept for comparison.
Rational casimir_g_alternative(FieldKind kind, const std::vector<Rational>& h, int n);

/// (lambda+delta, lambda+delta) - (h+delta, h+delta).
Rational gamma_value(FieldKind kind, const std::vector<Rational>& h, const std::vector<Rational>& lambda, int n);

/// Complex: h + e+_{r+ +1} + e-_{r- +1}. Real: h + e_{r+1} + e_{s+1}, with r, s
/// the first two column heights. Needs n > every row count involved.
std::vector<Rational> canonical_lambda(const SectorLabel& s, int n);

/// 2(N - r+ - r-) or 2(N - r - s).
Rational gamma_closed_form(const SectorLabel& s);

/// C_k on the ground state of s equals casimir_k_eigenvalue times it.
CheckReport verify_casimir_k(const FockContext& ctx, const SectorLabel& s, int n);

/// Applies C_g to the ground state and compares the eigenvalue with both
/// candidate closed forms; passes iff casimir_g_eigenvalue matches.
CheckReport resolve_casimir_g(const FockContext& ctx, const SectorLabel& s, int n);

/// C_k - C_g = 2 sum X*X + n sum (E+_ii + E-_ii) (complex) or
/// sum X*X + (n+1) sum E_ii (real) on every monomial with <= P-2 particles.
/// Also records whether the variant without the factor n holds.
CheckReport verify_casimir_difference(const FockContext& ctx, int n);

/// Both sides of 2 sum <l|X*_ij X_ij|l> = gamma <l|l> (factor 1 in the real
/// case) for every compact highest-weight vector |l> of the canonical weight
/// inside X* applied to the compact module of the ground state. When no such
/// vector survives in the Fock module, passes iff gamma = 0.
CheckReport verify_gamma_identity(const FockContext& ctx, const SectorLabel& s, int n);

}  // namespace bilocal
