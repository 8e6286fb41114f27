// Command-line front end. Talks to the engine only through bilocal.h.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "bilocal/bilocal.h"

namespace {

struct Options {
  std::string kind = "complex";
  int N = 1;
  int M = 2;
  int P = 4;
  int D = 0;
  std::string cutoff = "2";
  std::string format = "json";
  bool unsafe_large = false;
  bool fault = false;
  std::string plus;
  std::string minus;
  int level = 1;
  std::string group = "U";
  int cap = 2;
  int count = 14;
};

int report(bl_status status, bl_result* result, const std::string& format) {
  if (result) {
    std::fputs(format == "table" ? bl_result_table(result) : bl_result_json(result), stdout);
    bl_result_destroy(result);
  }
  switch (status) {
    case BL_OK:
      return 0;
    case BL_CHECK_FAILED:
      return 1;
    case BL_INFEASIBLE:
      std::cerr << "infeasible: " << bl_last_error() << "\n";
      return 1;
    case BL_INVALID_ARGUMENT:
    case BL_UNSUPPORTED:
      std::cerr << "error: " << bl_last_error() << "\n";
      return 2;
    default:
      std::cerr << "internal error: " << bl_last_error() << "\n";
      return 3;
  }
}

bl_status make_context(const Options& o, bl_context** ctx) {
  const bl_kind kind = o.kind == "real" ? BL_REAL : BL_COMPLEX;
  return bl_context_create(kind, o.N, o.M, o.P, o.unsafe_large ? 1 : 0, ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for bilocal field algebras on truncated Fock spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bl_version()));
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--seed-free", "Accepted for compatibility; every computation is deterministic");
  };
  const auto add_context = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Field kind")->check(CLI::IsMember({"complex", "real"}));
    sub->add_option("--N", o.N, "Number of flavors");
    sub->add_option("--M", o.M, "Mode truncation");
    sub->add_option("--P", o.P, "Particle-number truncation");
    sub->add_flag("--unsafe-large", o.unsafe_large, "Allow contexts beyond N<=4, M<=4, P<=6");
    add_format(sub);
  };

  auto* verify = app.add_subcommand("verify", "Run the invariant suite for one context");
  add_context(verify);
  verify->add_flag("--fault", o.fault, "Drop the central shift from the realization (negative control)");

  auto* classify = app.add_subcommand("classify", "Classify ground states below an energy cutoff");
  add_context(classify);
  classify->add_option("--cutoff", o.cutoff, "Energy cutoff (rational)");
  classify->add_option("--D", o.D, "Use sphere mode energies in D dimensions");

  auto* gram = app.add_subcommand("gram", "Gram matrix of raised vectors over a ground state");
  add_context(gram);
  gram->add_option("--plus,--Y", o.plus, "Rows of Y+ (or Y), comma separated");
  gram->add_option("--minus", o.minus, "Rows of Y-, comma separated");
  gram->add_option("--level", o.level, "Number of raising operators");

  auto* map = app.add_subcommand("map-irreps", "Sector to gauge-irrep dictionary");
  map->add_option("--group", o.group, "Gauge group")->check(CLI::IsMember({"U", "O"}));
  map->add_option("--N", o.N, "Rank");
  map->add_option("--cap", o.cap, "Maximum number of boxes");
  add_format(map);

  auto* spectrum = app.add_subcommand("spectrum", "Sphere mode table");
  spectrum->add_option("--D", o.D, "Spacetime dimension")->required();
  spectrum->add_option("--count", o.count, "Number of modes");
  add_format(spectrum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bl_result* result = nullptr;
  if (*map) {
    const bl_status status = bl_map_irreps(o.group[0], o.N, o.cap, &result);
    return report(status, result, o.format);
  }
  if (*spectrum) {
    const bl_status status = bl_spectrum(o.D, o.count, &result);
    return report(status, result, o.format);
  }

  bl_context* ctx = nullptr;
  const bl_status made = make_context(o, &ctx);
  if (made != BL_OK) return report(made, nullptr, o.format);
  bl_status status = BL_INTERNAL;
  if (*verify) status = bl_verify(ctx, o.fault ? 1 : 0, &result);
  if (*classify) status = bl_classify(ctx, o.cutoff.c_str(), o.D, &result);
  if (*gram) status = bl_gram(ctx, o.plus.c_str(), o.minus.c_str(), o.level, &result);
  bl_context_destroy(ctx);
  return report(status, result, o.format);
}
