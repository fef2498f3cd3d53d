#include "doctest.h"

#include <cstdlib>
#include <string>

#include "cocenter.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  cc_string_free(s);
  return j;
}

struct Handle {
  cc_group* g = nullptr;
  ~Handle() { cc_group_free(g); }
};

}  // namespace

TEST_CASE("self test and version") {
  CHECK(cc_self_test() == CC_OK);
  CHECK(std::string(cc_version()).size() > 0);
}

TEST_CASE("GL5 element through the C interface") {
  Handle h;
  REQUIRE(cc_group_create("GL5", "sc", &h.g) == CC_OK);
  char* out = nullptr;
  REQUIRE(cc_element_info(h.g, "t[1,1,0,1,0]*s2*s1*s4", &out) == CC_OK);
  Json j = take(out);
  CHECK(j["newton"] == Json::array({"2/3", "2/3", "2/3", "1/2", "1/2"}));
  CHECK(j["length"] == 3);
  CHECK(j["straight"] == false);
}

TEST_CASE("reduction path on SL2") {
  Handle h;
  REQUIRE(cc_group_create("A1", "sc", &h.g) == CC_OK);
  char* out = nullptr;
  REQUIRE(cc_reduce(h.g, "S1*S0*S1", &out) == CC_OK);
  Json j = take(out);
  CHECK(j["end_word"] == "S0");
  CHECK(j["replay_ok"] == true);
}

TEST_CASE("cocenter of a commutator is zero") {
  Handle h;
  REQUIRE(cc_group_create("A2", "sc", &h.g) == CC_OK);
  char* out = nullptr;
  // T_x T_y - T_y T_x with x = S1, y = S0*S2, written out by hand:
  // T_{S1} T_{S0 S2} = T_{S1 S0 S2}, T_{S0 S2} T_{S1} = T_{S0 S2 S1}
  REQUIRE(cc_cocenter_reduce(h.g, "T[S1*S0*S2] - T[S0*S2*S1]", &out) == CC_OK);
  CHECK(take(out).empty());
}

TEST_CASE("error codes and messages") {
  cc_group* g = nullptr;
  CHECK(cc_group_create("Q7", "sc", &g) == CC_ERR_CONFIG);
  CHECK(g == nullptr);
  CHECK(std::string(cc_last_error()).size() > 0);

  Handle h;
  REQUIRE(cc_group_create("A1", "sc", &h.g) == CC_OK);
  char* out = nullptr;
  CHECK(cc_element_info(h.g, "t[1,", &out) == CC_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::string(cc_last_error_production()) == "elem");
  CHECK(cc_element_info(h.g, "t[1,2]", &out) == CC_ERR_INPUT);
  CHECK(cc_positivity(h.g, "t[-1]", "(1)", &out) == CC_ERR_INPUT);
  CHECK(cc_element_info(nullptr, "t[1]", &out) != CC_OK);
  // a success clears the previous error
  REQUIRE(cc_element_info(h.g, "t[1]", &out) == CC_OK);
  cc_string_free(out);
  CHECK(std::string(cc_last_error()).empty());
}

TEST_CASE("group from config text") {
  Handle h;
  REQUIRE(cc_group_from_config("type = A\nrank = 2\nlattice = adjoint\n", &h.g) == CC_OK);
  char* out = nullptr;
  REQUIRE(cc_describe(h.g, &out) == CC_OK);
  Json j = take(out);
  CHECK(j["lattice"] == "adjoint");
  cc_group* bad = nullptr;
  CHECK(cc_group_from_config("type = A\nrank = x\n", &bad) != CC_OK);
}

TEST_CASE("verify through the C interface") {
  cc_verify_options o{};
  o.group = "A1";
  o.lattice = "sc";
  o.length = 4;
  o.jobs = 2;
  o.format = CC_FORMAT_JSON;
  char* out = nullptr;
  char* timings = nullptr;
  int passed = 0;
  REQUIRE(cc_verify("newton", &o, &out, &timings, &passed) == CC_OK);
  CHECK(passed == 1);
  Json j = Json::parse(std::string(out).substr(0, std::string(out).find('\n')));
  CHECK(j["suite"] == "newton");
  cc_string_free(out);
  cc_string_free(timings);
  CHECK(cc_verify("nope", &o, &out, nullptr, &passed) == CC_ERR_INPUT);
}
