#include <doctest.h>

#include <lnz/lnz.h>

#include <string>

#include <json.hpp>

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { lnz_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

lnz_algebra* build(int type, const char* family, size_t n, std::initializer_list<const char*> params, int eps = 0) {
  std::vector<const char*> v(params);
  lnz_algebra* a = nullptr;
  REQUIRE(lnz_catalog_build(type, family, n, v.data(), v.size(), eps, nullptr, &a) == LNZ_OK);
  return a;
}

}  // namespace

TEST_CASE("status names line up with the enum") {
  CHECK(std::string(lnz_status_name(LNZ_OK)) == "ok");
  CHECK(std::string(lnz_status_name(LNZ_E_SYNTAX)) == "SyntaxError");
  CHECK(std::string(lnz_status_name(LNZ_E_NOT_IN_CATALOG_FORM)) == "NotInCatalogForm");
  CHECK(std::string(lnz_status_name(LNZ_E_INTERNAL)) == "Internal");
}

TEST_CASE("parse, serialize and check through handles") {
  lnz_algebra* a = build(2, "0.1", 9, {"0", "0", "0", "0"});
  Str text;
  REQUIRE(lnz_algebra_serialize(a, &text.p) == LNZ_OK);
  lnz_algebra* b = nullptr;
  REQUIRE(lnz_algebra_parse(text.p, &b) == LNZ_OK);
  Str again;
  REQUIRE(lnz_algebra_serialize(b, &again.p) == LNZ_OK);
  CHECK(text.s() == again.s());
  size_t dim = 0, bad = 99;
  CHECK(lnz_algebra_dim(b, &dim) == LNZ_OK);
  CHECK(dim == 9);
  Str listing;
  CHECK(lnz_check(b, &bad, &listing.p) == LNZ_OK);
  CHECK(bad == 0);
  CHECK(listing.s().empty());
  lnz_algebra_free(a);
  lnz_algebra_free(b);
}

TEST_CASE("violations are listed one triple per line") {
  lnz_algebra* a = nullptr;
  REQUIRE(lnz_algebra_parse(R"({"dim": 2, "table": [{"i": 1, "j": 1, "terms": [[1, "1"], [2, "1"]]}]})", &a) == LNZ_OK);
  size_t bad = 0;
  Str listing;
  CHECK(lnz_check(a, &bad, &listing.p) == LNZ_OK);
  CHECK(bad > 0);
  CHECK(listing.s().rfind("(1,1,1) [", 0) == 0);
  lnz_algebra_free(a);
}

TEST_CASE("parse errors set status, message and position") {
  lnz_algebra* a = nullptr;
  CHECK(lnz_algebra_parse("{\n \"dim\": }", &a) == LNZ_E_SYNTAX);
  CHECK(a == nullptr);
  int line = 0, col = 0;
  lnz_last_error_position(&line, &col);
  CHECK(line == 2);
  CHECK(std::string(lnz_last_error()).size() > 0);
  CHECK(lnz_algebra_parse(R"({"dim": 2, "table": [{"i": 5, "j": 1, "terms": []}]})", &a) == LNZ_E_INDEX);
  CHECK(lnz_algebra_parse(nullptr, &a) == LNZ_E_INVALID_ARGUMENT);
}

TEST_CASE("analyze reports the invariants as JSON") {
  lnz_algebra* a = build(2, "0.1", 9, {"0", "0", "0", "0"});
  Str json;
  REQUIRE(lnz_analyze(a, 50, 7, &json.p) == LNZ_OK);
  const auto doc = nlohmann::json::parse(json.s());
  CHECK(doc["nilindex"] == 7);
  CHECK(doc["central_series_dims"] == nlohmann::json({9, 7, 5, 3, 2, 1, 0}));
  CHECK(doc["gradation_dims"] == nlohmann::json({2, 2, 2, 1, 1, 1}));
  CHECK(doc["char_sequence_estimate"]["value"] == nlohmann::json({6, 3}));
  CHECK(doc["char_sequence_estimate"]["lower_bound"] == true);
  CHECK(doc["right_annihilator"].size() == 8);
  lnz_algebra_free(a);
}

TEST_CASE("catalog build errors map to statuses") {
  lnz_algebra* a = nullptr;
  const char* p4[] = {"0", "0", "0", "1"};
  CHECK(lnz_catalog_build(2, "1.2", 9, p4, 4, 1, nullptr, &a) == LNZ_E_PARITY);
  CHECK(lnz_catalog_build(2, "0.2", 8, p4, 4, 0, nullptr, &a) == LNZ_E_DIMENSION_TOO_SMALL);
  const char* bad[] = {"5", "0", "0", "0"};
  CHECK(lnz_catalog_build(2, "0.2", 9, bad, 4, 0, nullptr, &a) == LNZ_E_INADMISSIBLE_PARAMS);
  const char* p3[] = {"1", "5", "0"};
  CHECK(lnz_catalog_build(1, "36", 9, p3, 3, 0, nullptr, &a) == LNZ_E_INADMISSIBLE_PARAMS);
  CHECK(lnz_catalog_build(1, "x", 9, p3, 3, 0, nullptr, &a) == LNZ_E_UNKNOWN_FAMILY);
  const char* junk[] = {"1.5", "0", "0", "0"};
  CHECK(lnz_catalog_build(2, "0.2", 9, junk, 4, 0, nullptr, &a) == LNZ_E_SYNTAX);
  CHECK(a == nullptr);
  Str idx;
  CHECK(lnz_catalog_index(&idx.p) == LNZ_OK);
  CHECK(nlohmann::json::parse(idx.s())["rows"].size() == 52);
}

TEST_CASE("transform through a change document") {
  lnz_algebra* a = build(2, "0.3", 9, {"1", "0", "0", "1"});
  std::string doc = "{\"dim\": 9, \"matrix\": [";
  for (int r = 0; r < 9; ++r) {
    doc += r ? ",[" : "[";
    for (int c = 0; c < 9; ++c) doc += std::string(c ? "," : "") + (r == c ? "\"1\"" : "\"0\"");
    doc += "]";
  }
  doc += "]}";
  lnz_change* c = nullptr;
  REQUIRE(lnz_change_parse(doc.c_str(), &c) == LNZ_OK);
  lnz_algebra* b = nullptr;
  REQUIRE(lnz_transform(a, c, &b) == LNZ_OK);
  Str s1, s2;
  lnz_algebra_serialize(a, &s1.p);
  lnz_algebra_serialize(b, &s2.p);
  CHECK(s1.s() == s2.s());
  lnz_change_free(c);
  lnz_algebra_free(a);
  lnz_algebra_free(b);
}

TEST_CASE("equivalence through the C API") {
  const char* p[] = {"1", "0", "0", "1"};
  const char* q[] = {"2", "0", "0", "4"};
  lnz_verdict v = LNZ_UNKNOWN;
  Str detail;
  REQUIRE(lnz_equiv(0, 9, p, 4, q, 4, 4, &v, &detail.p) == LNZ_OK);
  CHECK(v == LNZ_EQUIVALENT);
  CHECK(detail.s().find("(1,0,2)") != std::string::npos);

  const char* r[] = {"1", "0", "1/4", "0"};
  const char* s[] = {"0", "0", "1", "0"};
  Str d2;
  REQUIRE(lnz_equiv(0, 9, r, 4, s, 4, 4, &v, &d2.p) == LNZ_OK);
  CHECK(v == LNZ_DISTINCT);
  CHECK(lnz_equiv(0, 9, p, 3, q, 4, 4, &v, nullptr) == LNZ_E_INVALID_ARGUMENT);
}

TEST_CASE("verify_all rejects dimensions below 9") {
  const size_t dims[] = {8};
  int all = 1;
  CHECK(lnz_verify_all(dims, 1, nullptr, 0, 10, 1, &all, nullptr, nullptr) == LNZ_E_INVALID_ARGUMENT);
}
