#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bilocal/algebra.hpp"
#include "bilocal/fock.hpp"
#include "bilocal/rational.hpp"
#include "bilocal/report.hpp"
#include "bilocal/young.hpp"

namespace bilocal {

/// Cartan eigenvalues of a ground state. Heads list the entries above the
/// tail; every later entry equals the tail. The real case uses head_plus only.
struct Weight {
  FieldKind kind = FieldKind::Complex;
  std::vector<Rational> head_plus;
  std::vector<Rational> head_minus;
  Rational tail;

  /// h^+_i (or h_i), 1-based, the tail past the head.
  Rational plus(int i) const;
  Rational minus(int i) const;

  /// Heads weakly decreasing, strictly above the tail by integers, and
  /// h^+_i + h^-_j >= 0.
  void validate() const;

  /// First n entries of each sequence, concatenated (plus then minus).
  std::vector<Rational> truncated(int n) const;

  nlohmann::json to_json() const;
  std::string str() const;

  bool operator==(const Weight&) const = default;
};

/// h_i = m_i + N/2 with tail N/2. Throws BoundViolation out of bound.
Weight weight_from_sector(const SectorLabel& s);

/// Ground state with integer coefficients. Complex: product of slot
/// determinants, one per column. Real: the part of the product of column
/// determinants orthogonal to the image of every X*, scaled to a primitive
/// integer vector with a positive leading coefficient.
FockVector build_ground_state(const FockContext& ctx, const SectorLabel& s);

/// X(i,j) v = 0, raising E v = 0 (i<j) and E(i,i) v = h_i v for all i, j <= M.
CheckReport verify_hw_conditions(const FockContext& ctx, const FockVector& v, const Weight& expected);

enum class NormRecursion { RecX, RecE };

struct NormQuery {
  NormRecursion kind = NormRecursion::RecX;
  int i = 1;
  int j = 1;
  /// RecE only: which E family (complex) and the power n.
  bool plus = true;
  int n = 1;
};

/// Closed forms. RecX: <h|X_ij X*_ij|h> = h^+_j + h^-_i (complex),
/// (1 + d_ij)(h_i + h_j) (real). RecE, i<j: n! prod_{k<n} (h_i - h_j - k).
Rational norm_recursion_oracle(const Weight& w, const NormQuery& q);

/// Brute force of the same quantity divided by <h|h>.
Rational norm_recursion_brute_force(const FockContext& ctx, const FockVector& ground, const NormQuery& q);

/// Every RecX pair and every RecE power up to one past the null order, on
/// the ground state of s.
CheckReport verify_norm_recursions(const FockContext& ctx, const SectorLabel& s);

/// sum_sigma sgn(sigma) X(r+1, r+sigma(1)) ... X(r+n, r+sigma(n)).
/// Throws std::invalid_argument unless 1 <= n and r + n <= M.
OperatorExpr determinant_operator(int n, int M, int r = 0);

/// X(1,1)...X(n,n) D_n^* |h> against the closed-form product times |h>.
CheckReport determinant_recursion_check(const FockContext& ctx, const SectorLabel& s, int n);

/// Closed-form product of the recursion: prod_m (h^+_m + h^-_m - m + 1)
/// (complex) or prod_m 2(2h_m - m + 1) (real).
Rational determinant_recursion_value(const Weight& w, int n);

/// ||D^{(r)}_n^* |0>||^2 for N = 0..n+2: zero below n, positive from n on,
/// vanishing (n+1)-th differences, proportional to the falling factorial.
CheckReport p_polynomial_check(FieldKind kind, int n, int r);

struct SectorEntry {
  Weight weight;
  SectorLabel sector;
  std::size_t multiplicity = 0;
  Rational energy;
  /// Weight has the diagram form (decreasing integer heads above N/2).
  bool diagram_form = true;
  bool in_bound = true;
};

/// Energy of a sector: sum_i eps_i (m^+_i + m^-_i).
Rational sector_energy(const SectorLabel& s, const std::vector<Rational>& energies);

/// Ground states (joint kernel of all X and raising E) in every weight block
/// with H_c eigenvalue <= cutoff. energies must list at least M+1 values and
/// eps_{M+1} > cutoff (no excluded mode below the cutoff), and P must cover
/// the largest particle number below the cutoff; otherwise TruncationError.
std::vector<SectorEntry> classify_spectrum(const FockContext& ctx, const Rational& cutoff,
                                           const std::vector<Rational>& energies);

/// Compares a classification with the sectors expected from the diagram
/// enumeration; multiplicities against the U(N) dimension when check_dimension.
CheckReport classification_check(const FockContext& ctx, const Rational& cutoff, const std::vector<Rational>& energies,
                                 const std::vector<SectorEntry>& found, bool check_dimension);

}  // namespace bilocal
