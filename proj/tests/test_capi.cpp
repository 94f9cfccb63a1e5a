#include <doctest.h>

#include <string>

#include "holobrace/holobrace.h"

TEST_CASE("session lifecycle and status codes") {
  hb_session* s = nullptr;
  CHECK(hb_session_create(4, 0, &s) == HB_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(hb_last_error()).find("odd prime") != std::string::npos);
  CHECK(hb_session_create(7, 0, &s) == HB_TOO_LARGE);
  CHECK(hb_session_create(3, 0, nullptr) == HB_NULL_POINTER);
  REQUIRE(hb_session_create(3, 0, &s) == HB_OK);
  CHECK(std::string(hb_last_error()).empty());
  hb_session_destroy(s);
  hb_session_destroy(nullptr);
}

TEST_CASE("counts through the C interface") {
  hb_session* s = nullptr;
  REQUIRE(hb_session_create(3, 0, &s) == HB_OK);
  uint64_t n = 0;
  REQUIRE(hb_aut_order(s, HB_CPCPC2, &n) == HB_OK);
  CHECK(n == 432);
  REQUIRE(hb_regular_count(s, HB_CPXD2P, HB_CPCPC2, &n) == HB_OK);
  CHECK(n == 1080);
  REQUIRE(hb_regular_count(s, HB_CYCLIC, HB_DIHEDRAL, &n) == HB_OK);
  CHECK(n == 54);
  REQUIRE(hb_brace_class_count(s, HB_CPXD2P, HB_CPCPC2, &n) == HB_OK);
  CHECK(n == 13);
  CHECK(hb_aut_order(s, 5, &n) == HB_INVALID_ARGUMENT);
  CHECK(hb_aut_order(s, 0, nullptr) == HB_NULL_POINTER);
  CHECK(hb_aut_order(nullptr, 0, &n) == HB_NULL_POINTER);
  hb_session_destroy(s);
}

TEST_CASE("rendering through the C interface") {
  hb_session* s = nullptr;
  REQUIRE(hb_session_create(3, 0, &s) == HB_OK);
  char* out = nullptr;
  int match = -1;
  REQUIRE(hb_render(s, "groups", "tsv", nullptr, &out, &match) == HB_OK);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).rfind("group\torder\taut\taut_closed_form\tstatus\n", 0) == 0);
  CHECK(match == 1);
  hb_free_string(out);
  REQUIRE(hb_render(s, "hgs-table", "json", nullptr, &out, nullptr) == HB_OK);
  CHECK(std::string(out).find("\"closed_form_match\": true") != std::string::npos);
  hb_free_string(out);
  CHECK(hb_render(s, "groups", "xml", nullptr, &out, nullptr) == HB_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(hb_render(s, "bogus", "tsv", nullptr, &out, nullptr) == HB_INVALID_ARGUMENT);
  CHECK(hb_render(s, "braces", "tsv", "S3", &out, nullptr) == HB_INVALID_ARGUMENT);
  CHECK(hb_render(s, nullptr, "tsv", nullptr, &out, nullptr) == HB_NULL_POINTER);
  hb_session_destroy(s);
  CHECK(std::string(hb_version()) == "1.0.0");
}
