#include <doctest.h>

#include "listcover/constructions.hpp"
#include "listcover/io.hpp"
#include "listcover/pipeline.hpp"
#include "support.hpp"

using namespace listcover;
using nlohmann::json;
using listcover::testing::Rng;

TEST_SUITE("io") {

TEST_CASE("family loading relabels by first appearance") {
  const json j = json::parse(R"({"lists": [[10, 7, "x"], [7, 3, 11], ["x", 3, 10]]})");
  const io::LabeledFamily lf = io::family_from_json(j);
  CHECK(lf.labels == std::vector<std::string>{"10", "7", "x", "3", "11"});
  CHECK(lf.family.lists() == std::vector<Edge>{Edge{0, 1, 2}, Edge{1, 3, 4}, Edge{0, 2, 3}});
  CHECK(io::dump(io::to_json(lf.family)) == "{\"lists\":[[0,1,2],[1,3,4],[0,2,3]]}\n");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"list": []})")), InputError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"lists": []})")), InputError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"lists": [[1, 1]]})")), InputError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"lists": [[1.5]]})")), InputError);
  CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"edges": [[0]]})")), InputError);
  CHECK_THROWS_AS(io::cover_from_json(json::parse(R"({"edges": [[-1, 2]]})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("canonical round trip is byte-identical") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const ListFamily f = testing::random_family(rng, testing::uniform(rng, 1, 6), testing::uniform(rng, 1, 4), 30);
    // Shuffle labels into arbitrary integers.
    json raw{{"lists", json::array()}};
    for (const Edge& l : f.lists()) {
      json list = json::array();
      l.for_each([&](Color c) { list.push_back(1000 - 7 * static_cast<int>(c)); });
      raw["lists"].push_back(list);
    }
    const std::string once = io::dump(io::to_json(io::family_from_json(raw).family));
    const std::string twice = io::dump(io::to_json(io::family_from_json(json::parse(once)).family));
    CHECK(once == twice);
  }
}

TEST_CASE("hypergraph and cover round trip") {
  const Hypergraph h = enumerate_minimal_transversals(furedi_family());
  CHECK(io::hypergraph_from_json(io::to_json(h)) == h);
  const Cover c(2, {Edge{0, 3}, Edge{1, 2}});
  CHECK(io::cover_from_json(io::to_json(c)) == c);
  CHECK(io::cover_from_json(json::parse(R"({"lists": [[1, 2], [0, 3]]})")) == c);
}

TEST_CASE("reports carry big values as strings") {
  const RunReport r = run_bound_pipeline(furedi_family(), SolveMethod::kExact);
  const json j = run_report_json(r, json{{"cmd", "pipeline"}}, io::to_json(furedi_family()));
  CHECK(j["value"] == "13");
  CHECK(j["bound"] == "n_5 <= 13");
  CHECK(j["solve"]["value"] == "13");
  CHECK(j["solve"]["method"] == "exact");
  CHECK(j["verified"] == true);
  CHECK(j["input_digest"].get<std::string>().size() == 16);
  CHECK(j["quotient"]["weights"]["6"] == 3);
}

}  // TEST_SUITE
