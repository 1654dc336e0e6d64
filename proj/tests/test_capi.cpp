#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "uxc.h"

namespace {

using njson = nlohmann::json;

struct Doc {
  uxc_doc* h = nullptr;
  ~Doc() { uxc_doc_free(h); }
};

struct Str {
  char* s = nullptr;
  ~Str() { uxc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("version and error surface") {
  CHECK(std::string(uxc_version()) == "1.0.0");
  Doc d;
  CHECK(uxc_doc_parse("{broken", &d.h) == UXC_ERR_INVALID);
  CHECK(std::string(uxc_last_error()).find("JSON") != std::string::npos);
  CHECK(uxc_doc_parse(nullptr, &d.h) == UXC_ERR_INVALID);
}

TEST_CASE("generate, serialize, reparse") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"b3"})", &d.h) == UXC_OK);
  Str s;
  REQUIRE(uxc_doc_to_json(d.h, &s.s) == UXC_OK);
  auto j = njson::parse(s.str());
  CHECK(j["points"].size() == 9);
  Doc back;
  CHECK(uxc_doc_parse(s.s, &back.h) == UXC_OK);
}

TEST_CASE("full certification through the C API") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"b3"})", &d.h) == UXC_OK);
  Str rep;
  REQUIRE(uxc_certify(d.h, R"({"seed": 11, "samples": 3})", &rep.s) == UXC_OK);
  auto j = njson::parse(rep.str());
  CHECK(j["admits"] == true);
  CHECK(j["splitting"][0] == 3);
  CHECK(j["splitting"][1] == 5);
  CHECK(j["degree-interval"]["high-inclusive"] == 4);
  CHECK(j["curve"]["degree"] == 4);
}

TEST_CASE("analyze and splitting through the C API") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"complete-polygonal","N":6,"seed":2})", &d.h) == UXC_OK);
  Str rep;
  REQUIRE(uxc_analyze(d.h, "", &rep.s) == UXC_OK);
  auto j = njson::parse(rep.str());
  CHECK(j["line-count"] == 13);
  CHECK(j["supersolvable"]["value"] == true);
  CHECK(j["splitting"]["type"][0] == 5);
  CHECK(j["splitting"]["type"][1] == 7);

  Str rep2;
  REQUIRE(uxc_splitting(d.h, R"({"method":"empirical","seed":5})", &rep2.s) == UXC_OK);
  auto j2 = njson::parse(rep2.str());
  CHECK(j2["type"][0] == 5);
  CHECK(j2["type"][1] == 7);
}

TEST_CASE("dualize, sing, dual arrangement handles") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"complete-polygonal","N":4,"field":"rational"})", &d.h) == UXC_OK);
  Doc z;
  REQUIRE(uxc_doc_dualize(d.h, &z.h) == UXC_OK);
  Str zs;
  REQUIRE(uxc_doc_to_json(z.h, &zs.s) == UXC_OK);
  CHECK(njson::parse(zs.str())["points"].size() == 9);

  Doc s3;
  REQUIRE(uxc_doc_sing(d.h, 3, &s3.h) == UXC_OK);
  Str s3s;
  REQUIRE(uxc_doc_to_json(s3.h, &s3s.s) == UXC_OK);
  CHECK(njson::parse(s3s.str())["points"].size() == 7);

  Doc ad;
  REQUIRE(uxc_doc_dual_arrangement(d.h, &ad.h) == UXC_OK);
  Str ads;
  REQUIRE(uxc_doc_to_json(ad.h, &ads.s) == UXC_OK);
  CHECK(njson::parse(ads.str())["lines"].size() == 13);
}

TEST_CASE("dimension and render through the C API") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"b3"})", &d.h) == UXC_OK);
  Str rep;
  REQUIRE(uxc_dimension(d.h, R"({"degree":4,"fat":["3@generic"],"seed":7})", &rep.s) == UXC_OK);
  auto j = njson::parse(rep.str());
  CHECK(j["dimension"] == 1);
  CHECK(j["expected"] == 0);

  Doc arr;
  REQUIRE(uxc_doc_dualize(d.h, &arr.h) == UXC_OK);
  Str svg;
  REQUIRE(uxc_render_svg(arr.h, R"({"size":400,"radius":2.0})", &svg.s) == UXC_OK);
  CHECK(svg.str().rfind("<svg", 0) == 0);

  // missing degree is an invalid-input error
  Str bad;
  CHECK(uxc_dimension(d.h, "{}", &bad.s) == UXC_ERR_INVALID);
}

TEST_CASE("status codes distinguish invalid input") {
  Doc d;
  REQUIRE(uxc_generate(R"({"family":"pencil","N":4})", &d.h) == UXC_OK);
  Str rep;
  // a pencil is supersolvable; asking for the nearly-supersolvable formula fails
  CHECK(uxc_splitting(d.h, R"({"method":"nearly"})", &rep.s) == UXC_ERR_INVALID);
  CHECK(uxc_generate(R"({"family":"nonsense"})", &d.h) == UXC_ERR_INVALID);
}
