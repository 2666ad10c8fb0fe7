#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dieudonne/constructions.hpp"
#include "dieudonne/serialize.hpp"

using namespace dieudonne;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("module JSON golden form") {
  CHECK(module_to_json(i11(2)) == R"({"p":2,"dim":2,"F":[[0,0],[1,0]],"V":[[0,0],[1,0]],"form":[[0,1],[1,0]]})");
  CHECK(module_to_json(j_rs(1, 1, 3)) == R"({"p":3,"dim":2,"F":[[0,0],[1,0]],"V":[[0,0],[2,0]],"form":null})");
}

TEST_CASE("module JSON round trip (property)") {
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t g = 0; g <= 4; ++g)
      for (const auto& t : enumerate(g)) {
        const auto m = canonical_module(t, p);
        const auto text = module_to_json(m);
        CHECK(module_from_json(text) == m);
        CHECK(module_to_json(module_from_json(text)) == text);
      }
  const auto bare = j_rs(2, 3, 5);
  CHECK(module_from_json(module_to_json(bare)) == bare);
}

TEST_CASE("module JSON rejects malformed input") {
  CHECK_THROWS_AS(module_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json(R"({"p":2,"dim":1,"F":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json(R"({"p":4,"dim":1,"F":[[0]],"V":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json(R"({"p":2,"dim":1,"F":[[2]],"V":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json(R"({"p":2,"dim":2,"F":[[0,0]],"V":[[0,0],[0,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(module_from_json(R"({"p":2,"dim":1,"F":[["a"]],"V":[[0]]})"), std::invalid_argument);
  CHECK_NOTHROW(module_from_json(R"({"p":2,"dim":1,"F":[[1]],"V":[[0]]})"));
}

TEST_CASE("census and report JSON") {
  CHECK(census_to_json(decompose(canonical_module(EOType{{0, 0, 1}}))) == R"({"FFVV":1,"FV":1})");
  CHECK(decompose_json(i11(2)) == R"({"g":1,"f":0,"a":1,"s":1,"words":{"FV":1}})");
  CHECK(invariants_json(i11(2)) == R"({"g":1,"f":0,"a":1,"u":1,"s":1,"nu":[0]})");
  CHECK(invariants_json(word_module(symmetric_word(3, 2))) == R"({"g":3,"f":0,"a":2,"u":1,"s":0,"nu":null})");
  bool valid = true;
  const auto bad = check_json(DieudonneModule(Matrix(PrimeField(2), 2, 2), Matrix(PrimeField(2), 2, 2)), &valid);
  CHECK_FALSE(valid);
  CHECK(bad.find("ker F != im V") != std::string::npos);
  CHECK(check_json(i11(2), &valid) == R"({"valid":true,"violations":[]})");
  CHECK(valid);
}

TEST_CASE("eo list") {
  CHECK(lines(eo_list(5, {}, ListFormat::Csv)).size() == 33);
  CHECK(eo_list(1, {}, ListFormat::Json) == R"([{"nu":[0],"f":0,"a":1,"s":1},{"nu":[1],"f":1,"a":0,"s":0}])");
  CHECK(eo_list(3, parse_eo_filter("a=2,s=0"), ListFormat::Csv) == "nu,f,a,s\n0;1;1,0,2,0\n");
  CHECK_THROWS_AS(parse_eo_filter("x=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eo_filter("f"), std::invalid_argument);
}

TEST_CASE("atlas") {
  CHECK(atlas_csv(1) == "g,nu,f,a,s,words\n1,0,0,1,1,FV\n1,1,1,0,0,F;V\n");
  CHECK(lines(atlas_csv(3)).size() == 1 + 14);
  const auto base = atlas_csv(7, 1);
  CHECK(atlas_csv(7, 1) == base);
  CHECK(atlas_csv(7, 3) == base);
  CHECK(atlas_csv(7, 8) == base);
  for (std::size_t g = 2; g <= 7; ++g) {
    std::string nu;
    for (std::size_t i = 0; i < g; ++i) nu += (i ? ";" : "") + std::to_string(i);
    const std::string prefix = std::to_string(g) + "," + nu + ",";
    const auto rows = lines(base);
    auto it = std::find_if(rows.begin(), rows.end(), [&](const std::string& r) { return r.rfind(prefix, 0) == 0; });
    REQUIRE(it != rows.end());
    CHECK(it->substr(prefix.size(), 6) == "0,1,0,");
  }
  CHECK_THROWS_AS(atlas_csv(13), std::invalid_argument);
}

TEST_CASE("feasibility and curve reports") {
  const auto t = feasibility_json(3);
  CHECK(t.find(R"({"f":0,"a":2,"s":1,"feasible":true,"attained":true})") != std::string::npos);
  CHECK(t.find(R"({"f":0,"a":3,"s":2,"feasible":false,"attained":false})") != std::string::npos);
  CHECK(t.find(R"("feasible":true,"attained":false)") == std::string::npos);
  CHECK(t.find(R"("feasible":false,"attained":true)") == std::string::npos);
  CHECK(hermitian_json(2, 2).find(R"("g":6,"a":3,"s":0)") != std::string::npos);
  const auto h = hyp2_json(parse_poles("3,9"), true);
  CHECK(h.find(R"("s":2,"s_bound":2)") != std::string::npos);
  CHECK(h.find(R"("agrees":true)") != std::string::npos);
}
