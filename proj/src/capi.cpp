#include "bilocal/bilocal.h"

#include <cstdlib>
#include <sstream>
#include <string>

#include "bilocal/errors.hpp"
#include "bilocal/suite.hpp"

struct bl_context {
  bilocal::FockContext ctx;
};

struct bl_result {
  std::string json;
  std::string table;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

bl_status fail(bl_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Maps engine exceptions onto status codes.
template <typename F>
bl_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const bilocal::TruncationError& e) {
    return fail(BL_INFEASIBLE, e.what());
  } catch (const bilocal::Unsupported& e) {
    return fail(BL_UNSUPPORTED, e.what());
  } catch (const bilocal::Error& e) {
    return fail(BL_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BL_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(BL_INTERNAL, e.what());
  } catch (...) {
    return fail(BL_INTERNAL, "unknown error");
  }
}

bl_status deliver(const bilocal::CommandResult& r, bl_result** out) {
  auto* res = new bl_result;
  res->json = r.json.dump(2) + "\n";
  res->table = r.table;
  res->passed = r.passed;
  *out = res;
  return r.passed ? BL_OK : BL_CHECK_FAILED;
}

bilocal::YoungDiagram parse_rows(const char* text) {
  std::vector<int> rows;
  std::stringstream in(text ? text : "");
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad row length '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad row length '" + item + "'");
    rows.push_back(v);
  }
  return bilocal::YoungDiagram(rows);
}

}  // namespace

extern "C" {

bl_status bl_context_create(bl_kind kind, int N, int M, int P, int unsafe_large, bl_context** out) {
  if (!out) return fail(BL_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (kind != BL_COMPLEX && kind != BL_REAL) return fail(BL_INVALID_ARGUMENT, "unknown field kind");
    bilocal::FockContext ctx;
    ctx.kind = kind == BL_COMPLEX ? bilocal::FieldKind::Complex : bilocal::FieldKind::Real;
    ctx.N = N;
    ctx.M = M;
    ctx.P = P;
    ctx.validate();
    if (!unsafe_large && (N > 4 || M > 4 || P > 6)) {
      return fail(BL_INVALID_ARGUMENT, "context exceeds N<=4, M<=4, P<=6; pass unsafe_large to override");
    }
    *out = new bl_context{ctx};
    return BL_OK;
  });
}

void bl_context_destroy(bl_context* ctx) { delete ctx; }

bl_status bl_verify(const bl_context* ctx, int fault, bl_result** out) {
  if (!ctx || !out) return fail(BL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return deliver(bilocal::run_verify(ctx->ctx, fault != 0), out); });
}

bl_status bl_classify(const bl_context* ctx, const char* cutoff, int D, bl_result** out) {
  if (!ctx || !cutoff || !out) return fail(BL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const bilocal::Rational c = bilocal::parse_rational(cutoff);
    std::optional<int> dim;
    if (D > 0) dim = D;
    return deliver(bilocal::run_classify(ctx->ctx, c, dim), out);
  });
}

bl_status bl_gram(const bl_context* ctx, const char* plus, const char* minus, int level, bl_result** out) {
  if (!ctx || !out) return fail(BL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& c = ctx->ctx;
    const bilocal::SectorLabel s = c.kind == bilocal::FieldKind::Complex
                                       ? bilocal::SectorLabel::complex(parse_rows(plus), parse_rows(minus), c.N)
                                       : bilocal::SectorLabel::real(parse_rows(plus), c.N);
    bilocal::require_bound(s);
    return deliver(bilocal::run_gram(c, s, level), out);
  });
}

bl_status bl_map_irreps(char group, int N, int cap, bl_result** out) {
  if (!out) return fail(BL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return deliver(bilocal::run_map_irreps(group, N, cap), out); });
}

bl_status bl_spectrum(int D, int count, bl_result** out) {
  if (!out) return fail(BL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    return deliver(bilocal::run_spectrum(D, count), out);
  });
}

const char* bl_result_json(const bl_result* r) { return r ? r->json.c_str() : ""; }
const char* bl_result_table(const bl_result* r) { return r ? r->table.c_str() : ""; }
int bl_result_passed(const bl_result* r) { return r && r->passed ? 1 : 0; }
void bl_result_destroy(bl_result* r) { delete r; }

const char* bl_last_error(void) { return last_error.c_str(); }
const char* bl_version(void) { return "0.1.0"; }

}  // extern "C"
