#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lieindex.h"

namespace {

struct AlgebraHandle {
  lx_algebra* ptr = nullptr;
  ~AlgebraHandle() { lx_algebra_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { lx_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("config defaults") {
  lx_config cfg;
  lx_config_init(&cfg);
  CHECK(cfg.seed == 1);
  CHECK(cfg.trials == 3);
  CHECK(cfg.coeff_bound == 1000000);
  CHECK(cfg.symbolic_threshold == 10);
  CHECK(cfg.force_symbolic == 0);
  CHECK(std::string(lx_version()) == "1.0.0");
}

TEST_CASE("spec construction and index through the C surface") {
  lx_config cfg;
  lx_config_init(&cfg);
  cfg.seed = 9;

  AlgebraHandle m;
  REQUIRE(lx_algebra_from_spec("mautner", &m.ptr) == LX_OK);
  CHECK(lx_algebra_dim(m.ptr) == 4);

  StringHandle report;
  REQUIRE(lx_algebra_index(m.ptr, &cfg, &report.ptr) == LX_OK);
  const auto j = nlohmann::json::parse(report.str());
  CHECK(j["value"] == 2);
  CHECK(j["seed"] == 9);

  AlgebraHandle so5;
  REQUIRE(lx_algebra_from_spec("so(5)", &so5.ptr) == LX_OK);
  StringHandle r5;
  REQUIRE(lx_algebra_index(so5.ptr, &cfg, &r5.ptr) == LX_OK);
  CHECK(nlohmann::json::parse(r5.str())["value"] == 2);

  AlgebraHandle tk;
  REQUIRE(lx_algebra_from_spec("takiff(sl(2),2)", &tk.ptr) == LX_OK);
  StringHandle rt;
  REQUIRE(lx_algebra_index(tk.ptr, &cfg, &rt.ptr) == LX_OK);
  CHECK(nlohmann::json::parse(rt.str())["value"] == 2);

  AlgebraHandle iw;
  REQUIRE(lx_algebra_from_spec("iw(sl(3),borel)", &iw.ptr) == LX_OK);
  CHECK(lx_algebra_dim(iw.ptr) == 8);
}

TEST_CASE("error classification") {
  lx_algebra* out = nullptr;
  CHECK(lx_algebra_from_spec("frobnicate(3)", &out) == LX_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::strlen(lx_last_error()) > 0);

  CHECK(lx_algebra_from_spec("gl(0)", &out) == LX_ERR_MATH);
  CHECK(lx_algebra_from_spec("iw(sl(2),frob)", &out) == LX_ERR_PARSE);
  CHECK(lx_algebra_from_spec(nullptr, &out) == LX_ERR_INVALID);

  CHECK(lx_algebra_from_json("{\"dim\": 2", &out) == LX_ERR_PARSE);
  CHECK(lx_algebra_from_json("{\"dim\": 2}", &out) == LX_ERR_PARSE);

  // sl(2)-like constants with one sign flipped violate Jacobi.
  const char* bad =
      "{\"dim\":3,\"labels\":[\"E\",\"F\",\"H\"],\"brackets\":["
      "[0,1,[[2,\"1/1\"]]],[0,2,[[0,\"2/1\"]]],[1,2,[[1,\"2/1\"]]]]}";
  CHECK(lx_algebra_from_json(bad, &out) == LX_ERR_MATH);
  CHECK(std::string(lx_last_error()).find("Jacobi") != std::string::npos);
}

TEST_CASE("serialization round trip is canonical") {
  AlgebraHandle m;
  REQUIRE(lx_algebra_from_spec("mautner", &m.ptr) == LX_OK);
  StringHandle first;
  REQUIRE(lx_algebra_to_json(m.ptr, &first.ptr) == LX_OK);

  AlgebraHandle reloaded;
  REQUIRE(lx_algebra_from_json(first.ptr, &reloaded.ptr) == LX_OK);
  StringHandle second;
  REQUIRE(lx_algebra_to_json(reloaded.ptr, &second.ptr) == LX_OK);
  CHECK(first.str() == second.str());

  const auto j = nlohmann::json::parse(first.str());
  CHECK(j["dim"] == 4);
  CHECK(j["labels"][0] == "P");
}

TEST_CASE("suite over the C surface") {
  lx_config cfg;
  lx_config_init(&cfg);
  cfg.seed = 5;
  StringHandle text;
  int32_t ok = 0;
  REQUIRE(lx_suite_run(&cfg, "P1.2-mautner", &text.ptr, &ok) == LX_OK);
  CHECK(ok == 1);
  const auto j = nlohmann::json::parse(text.str());
  CHECK(j["claims"].size() == 1);
  CHECK(j["claims"][0]["claim_id"] == "P1.2-mautner");
  CHECK(j["claims"][0]["verdict"] == "equality");
  CHECK(j["all_expected"] == true);
}
