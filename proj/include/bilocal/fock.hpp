#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bilocal/errors.hpp"
#include "bilocal/rational.hpp"

namespace bilocal {

enum class FieldKind { Complex, Real };

std::string_view to_string(FieldKind kind);
FieldKind parse_field_kind(std::string_view text);

/// A = a-oscillator, B = b-oscillator (complex case only).
enum class Species : std::uint8_t { A = 0, B = 1 };

/// One creation/annihilation channel a_i^p or b_i^p. Mode and flavor are 1-based.
struct ModeSlot {
  int mode = 1;
  int flavor = 1;
  Species species = Species::A;

  bool operator==(const ModeSlot&) const = default;
};

using SlotCode = std::uint16_t;

/// Truncated Fock space of N complex (a and b species) or real (a only)
/// scalar multiplets on modes 1..M with at most P particles.
struct FockContext {
  FieldKind kind = FieldKind::Complex;
  int N = 1;
  int M = 1;
  int P = 0;

  bool operator==(const FockContext&) const = default;

  void validate() const;
  int species_count() const { return kind == FieldKind::Complex ? 2 : 1; }
  int slot_count() const { return species_count() * M * N; }
  bool contains(const ModeSlot& s) const;
  void require(const ModeSlot& s) const;

  /// Codes sort in (species, mode, flavor) order.
  SlotCode encode(const ModeSlot& s) const;
  ModeSlot decode(SlotCode code) const;
};

/// Occupation multiset, stored as sorted slot codes. Empty = vacuum.
/// Unnormalized: the monomial is prod(c_s^*) |0>, no 1/sqrt(n!) factors.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<SlotCode> codes);

  const std::vector<SlotCode>& codes() const { return codes_; }
  std::size_t particle_count() const { return codes_.size(); }
  std::size_t multiplicity(SlotCode code) const;

  Monomial with(SlotCode code) const;
  Monomial without_one(SlotCode code) const;

  /// <m|m> = prod over distinct slots of (multiplicity)!.
  Integer norm_squared() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<SlotCode> codes_;
};

/// Exact finite linear combination of monomials; zero coefficients are never stored.
class FockVector {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit FockVector(FockContext ctx) : ctx_(ctx) {}
  FockVector(FockContext ctx, Monomial m, Rational c = 1);

  const FockContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const Rational& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector v) { return v *= c; }
  friend FockVector operator*(FockVector v, const Rational& c) { return v *= c; }

  bool operator==(const FockVector& other) const = default;

 private:
  void require_same_context(const FockVector& other) const;

  FockContext ctx_;
  Terms terms_;
};

FockVector vacuum(const FockContext& ctx);

/// Creation beyond the particle cutoff P maps to zero.
FockVector apply_creation(const FockContext& ctx, const ModeSlot& slot, const FockVector& v);
FockVector apply_annihilation(const FockContext& ctx, const ModeSlot& slot, const FockVector& v);

/// Form induced by <0|0> = 1 and the CCR; symmetric since coefficients are real.
Rational inner_product(const FockVector& lhs, const FockVector& rhs);

/// All monomials with at most max_particles particles, in canonical order.
std::vector<Monomial> monomial_basis(const FockContext& ctx, int max_particles);

/// Per-(species, mode) occupation summed over flavors; index species*M + (mode-1).
/// This is the Cartan weight of the monomial up to the constant N/2 shift.
std::vector<int> occupation(const FockContext& ctx, const Monomial& m);

/// All monomials with the prescribed per-(species, mode) occupation.
std::vector<Monomial> monomials_with_occupation(const FockContext& ctx, const std::vector<int>& occ);

/// Incrementally built linear span of vectors, kept in reduced echelon form
/// keyed by pivot monomials.
class FockSpan {
 public:
  explicit FockSpan(FockContext ctx) : ctx_(ctx) {}

  /// Adds v; returns false when v already lies in the span.
  bool add(const FockVector& v);
  /// v minus its reduction against the basis (zero iff v is in the span).
  FockVector reduce(FockVector v) const;
  const std::vector<FockVector>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

 private:
  FockContext ctx_;
  std::vector<Monomial> pivots_;
  std::vector<FockVector> basis_;
};

std::string describe(const FockContext& ctx, const Monomial& m);
std::string describe(const FockVector& v);

}  // namespace bilocal
