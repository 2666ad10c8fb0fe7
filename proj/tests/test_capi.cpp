#include <doctest.h>

#include <string>

#include "dieudonne/dieudonne.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("module lifecycle through the C interface") {
  dd_module* m = nullptr;
  REQUIRE(dd_module_i11(2, &m) == DD_OK);
  char* json = nullptr;
  REQUIRE(dd_module_to_json(m, &json) == DD_OK);
  const std::string text = take(json);
  CHECK(text == R"({"p":2,"dim":2,"F":[[0,0],[1,0]],"V":[[0,0],[1,0]],"form":[[0,1],[1,0]]})");
  dd_module* back = nullptr;
  REQUIRE(dd_module_from_json(text.c_str(), &back) == DD_OK);
  size_t dim = 0;
  CHECK(dd_module_dim(back, &dim) == DD_OK);
  CHECK(dim == 2);
  dd_invariants inv{};
  CHECK(dd_module_invariants(back, &inv) == DD_OK);
  CHECK(inv.g == 1);
  CHECK(inv.a == 1);
  CHECK(inv.u == 1);
  CHECK(inv.has_s == 1);
  CHECK(inv.s == 1);
  dd_module* sum = nullptr;
  CHECK(dd_module_direct_sum(m, back, &sum) == DD_OK);
  CHECK(dd_module_invariants(sum, &inv) == DD_OK);
  CHECK(inv.s == 2);
  dd_module_free(sum);
  dd_module_free(back);
  dd_module_free(m);
}

TEST_CASE("status codes") {
  dd_module* m = nullptr;
  CHECK(dd_module_supersingular(4, 3, 2, &m) == DD_INFEASIBLE);
  CHECK(std::string(dd_last_error()).find("g - 1") != std::string::npos);
  CHECK(m == nullptr);
  CHECK(dd_module_profile(4, 1, 3, 2, 2, &m) == DD_INFEASIBLE);
  CHECK(dd_module_from_eo("0,2", 2, &m) == DD_USAGE);
  CHECK(dd_module_from_word("FXV", 2, &m) == DD_USAGE);
  CHECK(dd_module_jrs(2, 2, 4, &m) == DD_USAGE);
  CHECK(dd_module_from_json("{", &m) == DD_USAGE);
  CHECK(dd_module_i11(2, nullptr) == DD_USAGE);
  CHECK(dd_module_to_json(nullptr, nullptr) == DD_USAGE);

  REQUIRE(dd_module_from_json(R"({"p":2,"dim":2,"F":[[0,0],[0,0]],"V":[[0,0],[0,0]],"form":null})", &m) == DD_OK);
  char* out = nullptr;
  CHECK(dd_check_json(m, &out) == DD_VALIDATION);
  CHECK(take(out).find(R"("valid":false)") != std::string::npos);
  dd_invariants inv{};
  CHECK(dd_module_invariants(m, &inv) == DD_VALIDATION);
  dd_module_free(m);

  REQUIRE(dd_module_from_word("FFVFVV", 2, &m) == DD_OK);
  dd_module* pol = nullptr;
  CHECK(dd_module_polarize(m, &pol) == DD_VALIDATION);
  CHECK(dd_module_invariants(m, &inv) == DD_OK);
  CHECK(inv.has_s == 1);
  CHECK(inv.s == 0);
  dd_module_free(m);
  CHECK(dd_last_error() != nullptr);
}

TEST_CASE("tables and curves through the C interface") {
  char* out = nullptr;
  CHECK(dd_eo_list(3, "f=0", "csv", &out) == DD_OK);
  CHECK(take(out) == "nu,f,a,s\n0;0;0,0,3,3\n0;0;1,0,2,1\n0;1;1,0,2,0\n0;1;2,0,1,0\n");
  CHECK(dd_eo_list(3, nullptr, "xml", &out) == DD_USAGE);
  unsigned long long count = 0;
  CHECK(dd_eo_count(10, &count) == DD_OK);
  CHECK(count == 1024);
  CHECK(dd_atlas_csv(1, 2, &out) == DD_OK);
  CHECK(take(out) == "g,nu,f,a,s,words\n1,0,0,1,1,FV\n1,1,1,0,0,F;V\n");
  CHECK(dd_hermitian_json(3, 1, &out) == DD_OK);
  CHECK(take(out).find(R"("superspecial":true)") != std::string::npos);
  CHECK(dd_hyp2_json("3,8", 0, &out) == DD_USAGE);
  CHECK(dd_hyp2_json("15", 1, &out) == DD_OK);
  CHECK(take(out).find(R"("s":1)") != std::string::npos);
  CHECK(dd_feasibility_json(2, &out) == DD_OK);
  take(out);
  dd_module* m = nullptr;
  REQUIRE(dd_module_from_eo("0,1,1,2", 3, &m) == DD_OK);
  CHECK(dd_eo_type_json(m, &out) == DD_OK);
  CHECK(take(out) == "[0,1,1,2]");
  CHECK(dd_decompose_json(m, &out) == DD_OK);
  CHECK(take(out) == R"({"g":4,"f":0,"a":2,"s":1,"words":{"FFFVVV":1,"FV":1}})");
  dd_module_free(m);
}
