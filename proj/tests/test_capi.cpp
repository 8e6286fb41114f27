#include <doctest.h>

#include <json.hpp>
#include <string>

#include "bilocal/bilocal.h"

TEST_CASE("context creation validates arguments") {
  bl_context* ctx = nullptr;
  CHECK(bl_context_create(BL_COMPLEX, -1, 2, 4, 0, &ctx) == BL_INVALID_ARGUMENT);
  CHECK(ctx == nullptr);
  CHECK(std::string(bl_last_error()).size() > 0);
  CHECK(bl_context_create(BL_COMPLEX, 5, 2, 4, 0, &ctx) == BL_INVALID_ARGUMENT);
  CHECK(bl_context_create(BL_COMPLEX, 2, 2, 7, 0, &ctx) == BL_INVALID_ARGUMENT);
  CHECK(bl_context_create(BL_COMPLEX, 5, 1, 1, 1, &ctx) == BL_OK);
  bl_context_destroy(ctx);
  CHECK(bl_context_create(static_cast<bl_kind>(7), 1, 1, 1, 0, &ctx) == BL_INVALID_ARGUMENT);
}

TEST_CASE("verify returns a report and honors the fault switch") {
  bl_context* ctx = nullptr;
  REQUIRE(bl_context_create(BL_COMPLEX, 1, 2, 3, 0, &ctx) == BL_OK);
  bl_result* r = nullptr;
  CHECK(bl_verify(ctx, 0, &r) == BL_OK);
  REQUIRE(r != nullptr);
  CHECK(bl_result_passed(r) == 1);
  CHECK(nlohmann::json::parse(bl_result_json(r))["passed"] == true);
  bl_result_destroy(r);

  CHECK(bl_verify(ctx, 1, &r) == BL_CHECK_FAILED);
  REQUIRE(r != nullptr);
  CHECK(bl_result_passed(r) == 0);
  CHECK(std::string(bl_result_table(r)).find("FAIL") != std::string::npos);
  bl_result_destroy(r);
  bl_context_destroy(ctx);
}

TEST_CASE("classify and gram through the C interface") {
  bl_context* ctx = nullptr;
  REQUIRE(bl_context_create(BL_COMPLEX, 2, 3, 6, 0, &ctx) == BL_OK);
  bl_result* r = nullptr;
  REQUIRE(bl_classify(ctx, "1", 0, &r) == BL_OK);
  const auto j = nlohmann::json::parse(bl_result_json(r));
  CHECK(j["sectors"].size() == 3);
  bl_result_destroy(r);

  CHECK(bl_classify(ctx, "bogus", 0, &r) == BL_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(bl_classify(ctx, "40", 0, &r) == BL_INFEASIBLE);

  REQUIRE(bl_gram(ctx, "", "", 1, &r) == BL_OK);
  CHECK(nlohmann::json::parse(bl_result_json(r))["matrix"][0][0] == 2);
  bl_result_destroy(r);
  CHECK(bl_gram(ctx, "1", "1,1", 1, &r) == BL_INVALID_ARGUMENT);
  CHECK(std::string(bl_last_error()).find("<=") != std::string::npos);
  CHECK(bl_gram(ctx, "x", "", 1, &r) == BL_INVALID_ARGUMENT);
  bl_context_destroy(ctx);

  REQUIRE(bl_context_create(BL_COMPLEX, 1, 1, 2, 0, &ctx) == BL_OK);
  REQUIRE(bl_gram(ctx, "", "", 1, &r) == BL_OK);
  CHECK(nlohmann::json::parse(bl_result_json(r))["matrix"] == nlohmann::json::parse("[[1]]"));
  bl_result_destroy(r);
  bl_context_destroy(ctx);
}

TEST_CASE("dictionary and spectrum") {
  bl_result* r = nullptr;
  REQUIRE(bl_map_irreps('U', 2, 2, &r) == BL_OK);
  CHECK(nlohmann::json::parse(bl_result_json(r))["entries"].size() == 8);
  bl_result_destroy(r);
  CHECK(bl_map_irreps('Q', 2, 2, &r) == BL_INVALID_ARGUMENT);
  REQUIRE(bl_spectrum(4, 14, &r) == BL_OK);
  CHECK(nlohmann::json::parse(bl_result_json(r))["levels"].size() == 3);
  bl_result_destroy(r);
  CHECK(bl_spectrum(2, 3, &r) == BL_INVALID_ARGUMENT);
  CHECK(std::string(bl_version()) == "0.1.0");
}
