#include "bilocal/fock.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace bilocal {

std::string_view to_string(FieldKind kind) { return kind == FieldKind::Complex ? "complex" : "real"; }

FieldKind parse_field_kind(std::string_view text) {
  if (text == "complex") return FieldKind::Complex;
  if (text == "real") return FieldKind::Real;
  throw ContextError("unknown field kind '" + std::string(text) + "' (expected complex or real)");
}

void FockContext::validate() const {
  if (N < 0) throw ContextError("N must be >= 0, got " + std::to_string(N));
  if (M < 1) throw ContextError("M must be >= 1, got " + std::to_string(M));
  if (P < 0) throw ContextError("P must be >= 0, got " + std::to_string(P));
  if (static_cast<long>(species_count()) * M * N > std::numeric_limits<SlotCode>::max()) {
    throw ContextError("context has too many slots");
  }
}

bool FockContext::contains(const ModeSlot& s) const {
  if (s.mode < 1 || s.mode > M) return false;
  if (s.flavor < 1 || s.flavor > N) return false;
  if (kind == FieldKind::Real && s.species != Species::A) return false;
  return true;
}

void FockContext::require(const ModeSlot& s) const {
  if (contains(s)) return;
  std::string what = std::string(s.species == Species::A ? "a" : "b") + "_" + std::to_string(s.mode) + "^" +
                     std::to_string(s.flavor);
  if (kind == FieldKind::Real && s.species == Species::B) {
    throw ContextError("slot " + what + ": species B does not exist in the real case");
  }
  throw ContextError("slot " + what + " outside context (N=" + std::to_string(N) + ", M=" + std::to_string(M) + ")");
}

SlotCode FockContext::encode(const ModeSlot& s) const {
  const int sp = static_cast<int>(s.species);
  return static_cast<SlotCode>((sp * M + (s.mode - 1)) * N + (s.flavor - 1));
}

ModeSlot FockContext::decode(SlotCode code) const {
  ModeSlot s;
  s.flavor = code % N + 1;
  const int rest = code / N;
  s.mode = rest % M + 1;
  s.species = static_cast<Species>(rest / M);
  return s;
}

Monomial::Monomial(std::vector<SlotCode> codes) : codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
}

std::size_t Monomial::multiplicity(SlotCode code) const {
  auto [lo, hi] = std::equal_range(codes_.begin(), codes_.end(), code);
  return static_cast<std::size_t>(hi - lo);
}

Monomial Monomial::with(SlotCode code) const {
  Monomial out;
  out.codes_.reserve(codes_.size() + 1);
  auto pos = std::upper_bound(codes_.begin(), codes_.end(), code);
  out.codes_.insert(out.codes_.end(), codes_.begin(), pos);
  out.codes_.push_back(code);
  out.codes_.insert(out.codes_.end(), pos, codes_.end());
  return out;
}

Monomial Monomial::without_one(SlotCode code) const {
  Monomial out(*this);
  auto pos = std::lower_bound(out.codes_.begin(), out.codes_.end(), code);
  if (pos != out.codes_.end() && *pos == code) out.codes_.erase(pos);
  return out;
}

Integer Monomial::norm_squared() const {
  Integer out = 1;
  std::size_t i = 0;
  while (i < codes_.size()) {
    std::size_t j = i;
    while (j < codes_.size() && codes_[j] == codes_[i]) ++j;
    out *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

FockVector::FockVector(FockContext ctx, Monomial m, Rational c) : ctx_(ctx) { add(m, c); }

Rational FockVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void FockVector::require_same_context(const FockVector& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextError("vectors belong to different Fock contexts");
}

FockVector& FockVector::operator+=(const FockVector& other) {
  require_same_context(other);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  require_same_context(other);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

FockVector vacuum(const FockContext& ctx) {
  ctx.validate();
  return FockVector(ctx, Monomial{}, 1);
}

namespace {

void require_context(const FockContext& ctx, const FockVector& v) {
  if (!(v.context() == ctx)) throw ContextError("vector does not belong to the given Fock context");
}

}  // namespace

FockVector apply_creation(const FockContext& ctx, const ModeSlot& slot, const FockVector& v) {
  ctx.require(slot);
  require_context(ctx, v);
  const SlotCode code = ctx.encode(slot);
  FockVector out(ctx);
  for (const auto& [m, c] : v.terms()) {
    if (static_cast<int>(m.particle_count()) >= ctx.P) continue;
    out.add(m.with(code), c);
  }
  return out;
}

FockVector apply_annihilation(const FockContext& ctx, const ModeSlot& slot, const FockVector& v) {
  ctx.require(slot);
  require_context(ctx, v);
  const SlotCode code = ctx.encode(slot);
  FockVector out(ctx);
  for (const auto& [m, c] : v.terms()) {
    const std::size_t k = m.multiplicity(code);
    if (k == 0) continue;
    out.add(m.without_one(code), c * static_cast<long>(k));
  }
  return out;
}

Rational inner_product(const FockVector& lhs, const FockVector& rhs) {
  if (!(lhs.context() == rhs.context())) throw ContextError("inner product across different Fock contexts");
  // Distinct monomials are orthogonal; iterate the smaller side.
  const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
  Rational out = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    out += c * it->second * Rational(m.norm_squared());
  }
  return out;
}

std::vector<Monomial> monomial_basis(const FockContext& ctx, int max_particles) {
  ctx.validate();
  const int slots = ctx.slot_count();
  std::vector<Monomial> out;
  std::vector<SlotCode> current;
  std::function<void(int)> rec = [&](int first) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) >= max_particles) return;
    for (int s = first; s < slots; ++s) {
      current.push_back(static_cast<SlotCode>(s));
      rec(s);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> occupation(const FockContext& ctx, const Monomial& m) {
  std::vector<int> occ(static_cast<std::size_t>(ctx.species_count() * ctx.M), 0);
  for (SlotCode c : m.codes()) ++occ[c / ctx.N];
  return occ;
}

std::vector<Monomial> monomials_with_occupation(const FockContext& ctx, const std::vector<int>& occ) {
  ctx.validate();
  if (occ.size() != static_cast<std::size_t>(ctx.species_count() * ctx.M)) {
    throw ContextError("occupation vector has wrong length");
  }
  int total = 0;
  for (int k : occ) {
    if (k < 0) throw ContextError("negative occupation");
    total += k;
  }
  if (total > 0 && ctx.N == 0) return {};
  std::vector<Monomial> out;
  std::vector<SlotCode> current;
  // Distribute each (species, mode) count over flavors as a multiset.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t group, int remaining, int min_flavor) {
    if (group == occ.size()) {
      out.emplace_back(current);
      return;
    }
    if (remaining == 0) {
      if (group + 1 < occ.size()) {
        rec(group + 1, occ[group + 1], 0);
      } else {
        out.emplace_back(current);
      }
      return;
    }
    for (int f = min_flavor; f < ctx.N; ++f) {
      current.push_back(static_cast<SlotCode>(group * ctx.N + f));
      rec(group, remaining - 1, f);
      current.pop_back();
    }
  };
  if (occ.empty()) return {Monomial{}};
  rec(0, occ[0], 0);
  std::sort(out.begin(), out.end());
  return out;
}

FockVector FockSpan::reduce(FockVector v) const {
  for (std::size_t k = 0; k < basis_.size() && !v.is_zero(); ++k) {
    const Rational c = v.coefficient(pivots_[k]);
    if (c != 0) v -= c * basis_[k];
  }
  return v;
}

bool FockSpan::add(const FockVector& v) {
  if (!(v.context() == ctx_)) throw ContextError("span and vector belong to different contexts");
  FockVector r = reduce(v);
  if (r.is_zero()) return false;
  const auto& [pivot, c] = *r.terms().begin();
  const Monomial p = pivot;
  r *= 1 / Rational(c);
  // Keep earlier basis vectors free of the new pivot.
  for (auto& b : basis_) {
    const Rational bc = b.coefficient(p);
    if (bc != 0) b -= bc * r;
  }
  pivots_.push_back(p);
  basis_.push_back(std::move(r));
  return true;
}

std::string describe(const FockContext& ctx, const Monomial& m) {
  if (m.codes().empty()) return "|0>";
  std::string out = "{";
  bool first = true;
  for (SlotCode c : m.codes()) {
    const ModeSlot s = ctx.decode(c);
    if (!first) out += ",";
    first = false;
    out += s.species == Species::A ? "a_" : "b_";
    out += std::to_string(s.mode) + "^" + std::to_string(s.flavor);
  }
  return out + "}";
}

std::string describe(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + "*" + describe(v.context(), m);
  }
  return out;
}

}  // namespace bilocal
