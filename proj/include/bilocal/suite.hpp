#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bilocal/fock.hpp"
#include "bilocal/rational.hpp"
#include "bilocal/report.hpp"
#include "bilocal/young.hpp"

namespace bilocal {

/// Output of one command: machine-readable JSON, an aligned text rendering,
/// and the overall verdict.
struct CommandResult {
  bool passed = true;
  nlohmann::json json;
  std::string table;
};

// Individual checks used by the verify suite.
CheckReport verify_ccr(const FockContext& ctx, int margin);
CheckReport verify_creation_adjointness(const FockContext& ctx, int margin);
CheckReport verify_gram_positivity(const FockContext& ctx, std::size_t max_size);
CheckReport verify_generator_adjointness(const FockContext& ctx, int margin);
CheckReport verify_vacuum(const FockContext& ctx);
CheckReport verify_grading(const FockContext& ctx, int margin);
CheckReport verify_charge_commutant(const FockContext& ctx, int margin);

/// Every invariant for one context. `fault` drops the central shift from the
/// realization used by the structure-constant check (negative control).
CommandResult run_verify(const FockContext& ctx, bool fault);

/// Ground-state classification below `cutoff`. Energies are eps_i = i, or the
/// sphere spectrum of dimension D when given. Throws TruncationError when the
/// window cannot hold every state below the cutoff.
CommandResult run_classify(const FockContext& ctx, const Rational& cutoff, std::optional<int> D);

/// Gram matrix of the X*-words of length `level` on the ground state of s,
/// divided by <h|h>.
CommandResult run_gram(const FockContext& ctx, const SectorLabel& s, int level);

/// Sector/label dictionary for U(N) ('U') or O(N) ('O') with |Y| <= cap.
CommandResult run_map_irreps(char group, int N, int cap);

/// Mode table for the first `count` modes in D dimensions.
CommandResult run_spectrum(int D, int count);

/// Column-aligned text table.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace bilocal
