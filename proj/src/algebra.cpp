#include "bilocal/algebra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace bilocal {

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::X: return "X";
    case GeneratorKind::Xstar: return "X*";
    case GeneratorKind::Eplus: return "E+";
    case GeneratorKind::Eminus: return "E-";
    case GeneratorKind::E: return "E";
  }
  return "?";
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

std::string to_string(const GeneratorLabel& g) {
  return std::string(kind_name(g.kind)) + "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

GeneratorLabel adjoint(const GeneratorLabel& g) {
  switch (g.kind) {
    case GeneratorKind::X: return Xstar(g.i, g.j);
    case GeneratorKind::Xstar: return X(g.i, g.j);
    default: return {g.kind, g.j, g.i};
  }
}

bool is_valid(FieldKind kind, const GeneratorLabel& g, int M) {
  if (g.i < 1 || g.j < 1 || g.i > M || g.j > M) return false;
  const bool complex_only = g.kind == GeneratorKind::Eplus || g.kind == GeneratorKind::Eminus;
  if (kind == FieldKind::Complex) return g.kind != GeneratorKind::E;
  return !complex_only;
}

void require_valid(const FockContext& ctx, const GeneratorLabel& g) {
  if (!is_valid(ctx.kind, g, ctx.M)) {
    throw ContextError("generator " + to_string(g) + " not valid in " + std::string(to_string(ctx.kind)) +
                       " context with M=" + std::to_string(ctx.M));
  }
}

std::vector<GeneratorLabel> all_generators(FieldKind kind, int M) {
  std::vector<GeneratorLabel> out;
  const std::vector<GeneratorKind> kinds =
      kind == FieldKind::Complex
          ? std::vector<GeneratorKind>{GeneratorKind::X, GeneratorKind::Xstar, GeneratorKind::Eplus, GeneratorKind::Eminus}
          : std::vector<GeneratorKind>{GeneratorKind::X, GeneratorKind::Xstar, GeneratorKind::E};
  for (auto k : kinds)
    for (int i = 1; i <= M; ++i)
      for (int j = 1; j <= M; ++j) out.push_back({k, i, j});
  return out;
}

// ---------------------------------------------------------------------------
// OperatorExpr

OperatorExpr OperatorExpr::scalar(const Rational& c) {
  OperatorExpr e;
  e.add({}, c);
  return e;
}

OperatorExpr OperatorExpr::generator(const GeneratorLabel& g, const Rational& c) {
  OperatorExpr e;
  e.add({g}, c);
  return e;
}

OperatorExpr OperatorExpr::word(Word w, const Rational& c) {
  OperatorExpr e;
  e.add(w, c);
  return e;
}

std::size_t OperatorExpr::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void OperatorExpr::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      OperatorExpr::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

OperatorExpr OperatorExpr::adjoint() const {
  OperatorExpr out;
  for (const auto& [w, c] : terms_) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(bilocal::adjoint(*it));
    out.add(r, c);
  }
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c);
    for (const auto& g : w) out += "*" + to_string(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fock realization

namespace {

// Adds coef * g|m> into out.
void accumulate(const FockContext& ctx, const GeneratorLabel& g, const Monomial& m, const Rational& coef,
                FockVector& out, const Realization& r) {
  const auto code = [&](int mode, int flavor, Species s) { return ctx.encode({mode, flavor, s}); };
  const bool complex = ctx.kind == FieldKind::Complex;
  const int count = static_cast<int>(m.particle_count());

  switch (g.kind) {
    case GeneratorKind::X: {
      // b_i a_j (complex) or a_i a_j (real), summed over flavors.
      const Species first = complex ? Species::B : Species::A;
      for (int p = 1; p <= ctx.N; ++p) {
        const SlotCode cj = code(g.j, p, Species::A);
        const std::size_t kj = m.multiplicity(cj);
        if (kj == 0) continue;
        const Monomial m1 = m.without_one(cj);
        const SlotCode ci = code(g.i, p, first);
        const std::size_t ki = m1.multiplicity(ci);
        if (ki == 0) continue;
        out.add(m1.without_one(ci), coef * static_cast<long>(kj * ki));
      }
      break;
    }
    case GeneratorKind::Xstar: {
      if (count + 2 > ctx.P) break;
      const Species first = complex ? Species::B : Species::A;
      for (int p = 1; p <= ctx.N; ++p) {
        out.add(m.with(code(g.i, p, first)).with(code(g.j, p, Species::A)), coef);
      }
      break;
    }
    case GeneratorKind::Eplus:
    case GeneratorKind::Eminus:
    case GeneratorKind::E: {
      const Species s = g.kind == GeneratorKind::Eminus ? Species::B : Species::A;
      for (int p = 1; p <= ctx.N; ++p) {
        const SlotCode cj = code(g.j, p, s);
        const std::size_t k = m.multiplicity(cj);
        if (k == 0) continue;
        out.add(m.without_one(cj).with(code(g.i, p, s)), coef * static_cast<long>(k));
      }
      if (r.central_shift && g.i == g.j && ctx.N != 0) out.add(m, coef * ratio(ctx.N, 2));
      break;
    }
  }
}

}  // namespace

FockVector apply_generator(const FockContext& ctx, const GeneratorLabel& g, const FockVector& v,
                           const Realization& r) {
  require_valid(ctx, g);
  if (!(v.context() == ctx)) throw ContextError("vector does not belong to the given Fock context");
  FockVector out(ctx);
  for (const auto& [m, c] : v.terms()) accumulate(ctx, g, m, c, out, r);
  return out;
}

FockVector apply_expr(const FockContext& ctx, const OperatorExpr& op, const FockVector& v, const Realization& r) {
  FockVector out(ctx);
  for (const auto& [w, c] : op.terms()) {
    FockVector cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply_generator(ctx, *it, cur, r);
    out += c * cur;
  }
  return out;
}

const FockVector& GeneratorCache::image(const GeneratorLabel& g, const Monomial& m) {
  auto key = std::make_pair(g, m);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  require_valid(ctx_, g);
  FockVector out(ctx_);
  accumulate(ctx_, g, m, 1, out, realization_);
  return cache_.emplace(std::move(key), std::move(out)).first->second;
}

FockVector GeneratorCache::apply(const GeneratorLabel& g, const FockVector& v) {
  FockVector out(ctx_);
  for (const auto& [m, c] : v.terms()) {
    for (const auto& [m2, c2] : image(g, m).terms()) out.add(m2, c * c2);
  }
  return out;
}

FockVector GeneratorCache::apply(const OperatorExpr& op, const FockVector& v) {
  FockVector out(ctx_);
  for (const auto& [w, c] : op.terms()) {
    FockVector cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply(*it, cur);
    out += c * cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

OperatorExpr gen(GeneratorKind k, int i, int j, const Rational& c) { return OperatorExpr::generator({k, i, j}, c); }

// Relations listed with the first argument's kind; nullopt means "use antisymmetry".
std::optional<OperatorExpr> listed_complex(const GeneratorLabel& a, const GeneratorLabel& b) {
  using K = GeneratorKind;
  const int i = a.i, j = a.j, k = b.i, l = b.j;
  OperatorExpr out;
  if ((a.kind == K::Eplus || a.kind == K::Eminus) && b.kind == a.kind) {
    out += gen(a.kind, i, l, delta(j, k));
    out -= gen(a.kind, k, j, delta(i, l));
    return out;
  }
  if ((a.kind == K::Eplus && b.kind == K::Eminus) || (a.kind == K::Eminus && b.kind == K::Eplus)) return out;
  if (a.kind == K::Eplus && b.kind == K::Xstar) return gen(K::Xstar, k, i, delta(j, l));
  if (a.kind == K::Eplus && b.kind == K::X) return gen(K::X, k, j, -delta(i, l));
  if (a.kind == K::Eminus && b.kind == K::Xstar) return gen(K::Xstar, i, l, delta(j, k));
  if (a.kind == K::Eminus && b.kind == K::X) return gen(K::X, j, l, -delta(i, k));
  if (a.kind == K::X && b.kind == K::Xstar) {
    out += gen(K::Eplus, l, j, delta(i, k));
    out += gen(K::Eminus, k, i, delta(j, l));
    return out;
  }
  if (a.kind == b.kind && (a.kind == K::X || a.kind == K::Xstar)) return out;
  return std::nullopt;
}

std::optional<OperatorExpr> listed_real(const GeneratorLabel& a, const GeneratorLabel& b) {
  using K = GeneratorKind;
  const int i = a.i, j = a.j, k = b.i, l = b.j;
  OperatorExpr out;
  if (a.kind == K::E && b.kind == K::E) {
    out += gen(K::E, i, l, delta(j, k));
    out -= gen(K::E, k, j, delta(i, l));
    return out;
  }
  if (a.kind == K::E && b.kind == K::Xstar) {
    out += gen(K::Xstar, i, l, delta(j, k));
    out += gen(K::Xstar, k, i, delta(j, l));
    return out;
  }
  if (a.kind == K::E && b.kind == K::X) {
    out -= gen(K::X, j, l, delta(i, k));
    out -= gen(K::X, k, j, delta(i, l));
    return out;
  }
  if (a.kind == K::X && b.kind == K::Xstar) {
    out += gen(K::E, l, i, delta(j, k));
    out += gen(K::E, k, i, delta(j, l));
    out += gen(K::E, l, j, delta(i, k));
    out += gen(K::E, k, j, delta(i, l));
    return out;
  }
  if (a.kind == b.kind && (a.kind == K::X || a.kind == K::Xstar)) return out;
  return std::nullopt;
}

}  // namespace

OperatorExpr abstract_commutator(FieldKind kind, const GeneratorLabel& a, const GeneratorLabel& b) {
  if (!is_valid(kind, a, std::max({a.i, a.j, b.i, b.j})) || !is_valid(kind, b, std::max({a.i, a.j, b.i, b.j}))) {
    throw ContextError("generators " + to_string(a) + ", " + to_string(b) + " do not belong to the " +
                       std::string(to_string(kind)) + " algebra");
  }
  const auto listed = kind == FieldKind::Complex ? listed_complex : listed_real;
  if (auto direct = listed(a, b)) return *direct;
  auto reversed = listed(b, a);
  if (!reversed) throw std::logic_error("structure table incomplete for " + to_string(a) + ", " + to_string(b));
  return Rational(-1) * *reversed;
}

CheckReport verify_structure_constants(const FockContext& ctx, int margin, const Realization& r) {
  ctx.validate();
  if (margin < 2) throw ContextError("margin must be >= 2 so one commutator never truncates");
  CheckReport report("structure_constants");
  const auto basis = monomial_basis(ctx, std::max(ctx.P - margin, 0));
  const auto gens = all_generators(ctx.kind, ctx.M);
  GeneratorCache cache(ctx, r);
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const OperatorExpr rhs = abstract_commutator(ctx.kind, a, b);
      for (const auto& m : basis) {
        const FockVector mv(ctx, m);
        FockVector lhs = cache.apply(a, cache.image(b, m));
        lhs -= cache.apply(b, cache.image(a, m));
        const FockVector expected = cache.apply(rhs, mv);
        const bool ok = lhs == expected;
        if (ok) {
          report.record(true, {});
        } else {
          report.fail({"[" + to_string(a) + "," + to_string(b) + "]", describe(ctx, m), describe(expected),
                       describe(lhs)});
        }
      }
    }
  }
  report.details["basis_size"] = basis.size();
  report.details["generator_count"] = gens.size();
  return report;
}

// ---------------------------------------------------------------------------
// Hamiltonian and charge

HamiltonianSpec HamiltonianSpec::canonical(const FockContext& ctx, std::vector<Rational> energies) {
  HamiltonianSpec spec;
  const Rational g = ctx.kind == FieldKind::Complex ? Rational(ctx.N) : ratio(ctx.N, 2);
  spec.subtractions.assign(energies.size(), g);
  spec.energies = std::move(energies);
  return spec;
}

HamiltonianSpec HamiltonianSpec::default_spectrum(const FockContext& ctx) {
  std::vector<Rational> eps;
  for (int i = 1; i <= ctx.M + 1; ++i) eps.emplace_back(i);
  return canonical(ctx, std::move(eps));
}

void HamiltonianSpec::validate(int M) const {
  if (static_cast<int>(energies.size()) < M) throw ContextError("Hamiltonian needs at least M energies");
  if (static_cast<int>(subtractions.size()) < M) throw ContextError("Hamiltonian needs at least M subtractions");
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (energies[i] <= 0) throw ContextError("energies must be positive");
    if (i > 0 && energies[i] < energies[i - 1]) throw ContextError("energies must be weakly increasing");
  }
}

OperatorExpr hamiltonian_expr(const FockContext& ctx, const HamiltonianSpec& spec) {
  spec.validate(ctx.M);
  OperatorExpr h;
  for (int i = 1; i <= ctx.M; ++i) {
    const Rational& eps = spec.energies[i - 1];
    if (ctx.kind == FieldKind::Complex) {
      h += OperatorExpr::generator(Eplus(i, i), eps);
      h += OperatorExpr::generator(Eminus(i, i), eps);
    } else {
      h += OperatorExpr::generator(E(i, i), eps);
    }
    h -= OperatorExpr::scalar(eps * spec.subtractions[i - 1]);
  }
  return h;
}

FockVector apply_hamiltonian(const FockContext& ctx, const HamiltonianSpec& spec, const FockVector& v) {
  return apply_expr(ctx, hamiltonian_expr(ctx, spec), v);
}

OperatorExpr charge_expr(const FockContext& ctx) {
  if (ctx.kind != FieldKind::Complex) throw Unsupported("there is no charge operator in the real case");
  OperatorExpr q;
  for (int i = 1; i <= ctx.M; ++i) {
    q += OperatorExpr::generator(Eplus(i, i));
    q -= OperatorExpr::generator(Eminus(i, i));
  }
  return q;
}

FockVector apply_charge(const FockContext& ctx, const FockVector& v) { return apply_expr(ctx, charge_expr(ctx), v); }

}  // namespace bilocal
