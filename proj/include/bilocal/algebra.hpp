#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bilocal/fock.hpp"
#include "bilocal/rational.hpp"
#include "bilocal/report.hpp"

namespace bilocal {

/// X, Xstar, Eplus, Eminus for u(inf,inf); X, Xstar, E for sp(inf,R).
enum class GeneratorKind : std::uint8_t { X, Xstar, Eplus, Eminus, E };

struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::X;
  int i = 1;
  int j = 1;

  auto operator<=>(const GeneratorLabel&) const = default;
};

inline GeneratorLabel X(int i, int j) { return {GeneratorKind::X, i, j}; }
inline GeneratorLabel Xstar(int i, int j) { return {GeneratorKind::Xstar, i, j}; }
inline GeneratorLabel Eplus(int i, int j) { return {GeneratorKind::Eplus, i, j}; }
inline GeneratorLabel Eminus(int i, int j) { return {GeneratorKind::Eminus, i, j}; }
inline GeneratorLabel E(int i, int j) { return {GeneratorKind::E, i, j}; }

std::string to_string(const GeneratorLabel& g);

/// Hermitian conjugate label: X(i,j)* = Xstar(i,j), E(i,j)* = E(j,i).
GeneratorLabel adjoint(const GeneratorLabel& g);

bool is_valid(FieldKind kind, const GeneratorLabel& g, int M);
void require_valid(const FockContext& ctx, const GeneratorLabel& g);

/// Every generator with mode indices in 1..M. In the real case X(i,j) and
/// X(j,i) are both listed; they act identically.
std::vector<GeneratorLabel> all_generators(FieldKind kind, int M);

/// Noncommutative polynomial in generators with rational coefficients. A word
/// acts right to left; the empty word is the scalar part.
class OperatorExpr {
 public:
  using Word = std::vector<GeneratorLabel>;
  using Terms = std::map<Word, Rational>;

  OperatorExpr() = default;
  static OperatorExpr scalar(const Rational& c);
  static OperatorExpr generator(const GeneratorLabel& g, const Rational& c = 1);
  static OperatorExpr word(Word w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  void add(const Word& w, const Rational& c);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Rational& c);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const Rational& c, OperatorExpr a) { return a *= c; }
  /// Concatenation product: (A*B) acts as A after B.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// Reverse every word and conjugate each letter.
  OperatorExpr adjoint() const;

  bool operator==(const OperatorExpr&) const = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// How generators are realized on Fock space. Dropping the N/2 shift of the
/// E generators is the seeded fault used as a negative control.
struct Realization {
  bool central_shift = true;
};

/// Fock realization: X(i,j) = b_i.a_j, E+(i,j) = a_i^*.a_j + (N/2)d_ij,
/// E-(i,j) = b_i^*.b_j + (N/2)d_ij; real case X(i,j) = a_i.a_j,
/// E(i,j) = a_i^*.a_j + (N/2)d_ij. Dots sum over flavors.
FockVector apply_generator(const FockContext& ctx, const GeneratorLabel& g, const FockVector& v,
                           const Realization& r = {});

FockVector apply_expr(const FockContext& ctx, const OperatorExpr& op, const FockVector& v, const Realization& r = {});

/// Right-hand side of the structure relations (degree <= 1, no scalar part).
OperatorExpr abstract_commutator(FieldKind kind, const GeneratorLabel& a, const GeneratorLabel& b);

/// Energies eps_1 <= eps_2 <= ... (positive) and vacuum subtractions g_i.
struct HamiltonianSpec {
  std::vector<Rational> energies;
  std::vector<Rational> subtractions;

  /// g_i = N (complex) or N/2 (real): the conformal Hamiltonian.
  static HamiltonianSpec canonical(const FockContext& ctx, std::vector<Rational> energies);
  /// eps_i = i.
  static HamiltonianSpec default_spectrum(const FockContext& ctx);

  void validate(int M) const;
};

/// sum_i eps_i (E+_ii + E-_ii - g_i) or sum_i eps_i (E_ii - g_i), truncated to i <= M.
OperatorExpr hamiltonian_expr(const FockContext& ctx, const HamiltonianSpec& spec);
FockVector apply_hamiltonian(const FockContext& ctx, const HamiltonianSpec& spec, const FockVector& v);

/// Q = sum_i (E+_ii - E-_ii); throws Unsupported in the real case.
OperatorExpr charge_expr(const FockContext& ctx);
FockVector apply_charge(const FockContext& ctx, const FockVector& v);

/// Realized [g1, g2] against the abstract right-hand side on every monomial
/// with at most P - margin particles, for every ordered generator pair.
CheckReport verify_structure_constants(const FockContext& ctx, int margin, const Realization& r = {});

/// Caches single-generator images of monomials. Shared by the verifiers that
/// apply many operator pairs to the same basis.
class GeneratorCache {
 public:
  GeneratorCache(FockContext ctx, Realization r = {}) : ctx_(ctx), realization_(r) {}

  const FockVector& image(const GeneratorLabel& g, const Monomial& m);
  FockVector apply(const GeneratorLabel& g, const FockVector& v);
  FockVector apply(const OperatorExpr& op, const FockVector& v);

 private:
  FockContext ctx_;
  Realization realization_;
  std::map<std::pair<GeneratorLabel, Monomial>, FockVector> cache_;
};

}  // namespace bilocal
