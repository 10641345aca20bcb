#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "balcx/cli.hpp"
#include "balcx/errors.hpp"
#include "balcx/fixtures.hpp"
#include "balcx/report.hpp"
#include "support/generators.hpp"

using namespace balcx;
using namespace balcx::testing;

namespace {

struct Run {
  int code;
  Json json;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  Json parsed = out.str().empty() || code == 2 || out.str().front() != '{' ? Json() : Json::parse(out.str());
  return {code, std::move(parsed), err.str()};
}

/// A scratch file removed on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& text)
      : path_(std::filesystem::temp_directory_path() /
              ("balcx-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json")) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("every fixture round-trips through its parser") {
  CHECK(fixture_names().size() >= 30);
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const Json doc = fixture(name);
    CHECK(doc["version"] == kFixtureVersion);
    const auto kind = doc["kind"].get<std::string>();
    if (kind == "weighted-complex") {
      const auto wc = weighted_complex_from_json(doc);
      CHECK(weighted_complex_from_json(to_json(wc)) == wc);
      CHECK(is_balanced(wc));
    } else if (kind == "complex") {
      const auto c = complex_from_json(doc);
      CHECK(complex_from_json(to_json(c)) == c);
    } else if (kind == "divisor-class") {
      const auto d = divisor_class_from_json(doc);
      CHECK(divisor_class_from_json(to_json(d)) == d);
    } else if (kind == "curve-class") {
      const auto c = curve_class_from_json(doc);
      CHECK(curve_class_from_json(to_json(c)) == c);
    } else if (kind == "hypertree") {
      const auto h = hypertree_from_json(doc);
      CHECK(hypertree_from_json(to_json(h)) == h);
    } else {
      FAIL("unexpected fixture kind " << kind);
    }
  }
  CHECK_THROWS_AS(fixture("nonexistent"), DomainError);
}

TEST_CASE("computed values round-trip") {
  Rng rng(107);
  for (int i = 0; i < 50; ++i) {
    const FieldSpec field(coin(rng) ? 0 : 5);
    const auto complex = random_complex(rng, uniform(rng, 5, 8), static_cast<std::size_t>(uniform(rng, 1, 3)),
                                        static_cast<std::size_t>(uniform(rng, 1, 6)), coin(rng));
    const auto wc = WeightedComplex(complex, random_weights(rng, complex.size(), field), field);
    const auto g = clear_denominators(laurent_of(wc));
    CHECK(cox_element_from_json(to_json(g)) == g);
    const auto verdict = decide_balanceable(complex, field);
    const auto back = verdict_from_json(to_json(verdict));
    CHECK(back.balanceable == verdict.balanceable);
    CHECK(back.witness == verdict.witness);
    CHECK(back.nullspace_dimension == verdict.nullspace_dimension);
    CHECK(back.nullspace_basis == verdict.nullspace_basis);
    const auto shape = classify_graph(structured_graph(rng, 6), field);
    CHECK(graph_shape_from_json(to_json(shape)) == shape);
  }
  CHECK(scalar_from_json(Json("-3/4"), FieldSpec{}) == Scalar::parse("-3/4", FieldSpec{}));
  CHECK(to_json(Scalar::parse("-3/4", FieldSpec{})) == "-3/4");
}

TEST_CASE("malformed documents raise domain errors") {
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"simplices": [[1,2]]})")), DomainError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n": 5, "simplices": [[1,"2"]]})")), DomainError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n": 5, "simplices": [[1,2],[1,2,3]]})")), DomainError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n": 5, "simplices": [[0,2]]})")), DomainError);
  CHECK_THROWS_AS(complex_from_json(Json::parse("[1,2]")), DomainError);
  CHECK_THROWS_AS(weighted_complex_from_json(Json::parse(R"({"n": 5, "simplices": [[1,2]], "weights": []})")),
                  DomainError);
  CHECK_THROWS_AS(weighted_complex_from_json(Json::parse(R"({"n": 5, "simplices": [[1,2]], "weights": [0.5]})")),
                  DomainError);
  CHECK_THROWS_AS(divisor_class_from_json(Json::parse(R"({"n": 6, "H": 1, "E": {"2,1": -1}})")), DomainError);
  CHECK_THROWS_AS(hypertree_from_json(Json::parse(R"({"n": 6, "parts": [[1,2,9]]})")), DomainError);
  CHECK_THROWS_AS(graph_shape_from_json(Json::parse(R"({"tag": "Square"})")), DomainError);
  CHECK_THROWS_AS(load_document("/nonexistent/balcx.json"), DomainError);
  TempFile junk("{not json");
  CHECK_THROWS_AS(load_document(junk.path()), DomainError);
}

TEST_CASE("command line examples") {
  auto r = run({"balance", "--char", "2", "fixtures://two-triangles-disjoint"});
  CHECK(r.code == 0);
  CHECK(r.json["balanceable"] == true);
  CHECK(r.json["witness"] == Json(std::vector<std::string>(6, "1")));
  CHECK(r.json["dim"] == 1);

  r = run({"balance", "--char", "0", "fixtures://two-triangles-disjoint"});
  CHECK(r.json["balanceable"] == false);
  CHECK(r.json["witness"].is_null());

  r = run({"minimal", "fixtures://octagon"});
  CHECK(r.json["minimal"] == true);
  CHECK(r.json["witness"] == Json({"1", "-1", "-1", "1", "-1", "1", "-1", "1"}));

  CHECK(run({"pair", "fixtures://F9", "fixtures://class-oct"}).json["value"] == -1);
  CHECK(run({"pair", "fixtures://F7", "fixtures://class-tri"}).json["value"] == -1);
  CHECK(run({"pair", "fixtures://F9", "fixtures://octagon"}).json["value"] == -1);

  r = run({"class", "fixtures://square", "--n", "5"});
  CHECK(r.json == Json::parse(R"({"n":5,"H":2,"E":{"1":-1,"2":-1,"3":-1,"4":-1}})"));

  r = run({"classify", "--char", "2", "fixtures://two-triangles-disjoint"});
  CHECK(r.json["tag"] == "TwoOddCyclesDisjoint");
  CHECK(r.json["m1"] == 3);

  r = run({"invariance", "fixtures://octagon"});
  CHECK(r.json["invariant"] == true);
  CHECK(r.json["balanced"] == true);

  r = run({"clear", "--pretty", "fixtures://octagon"});
  CHECK(r.json["invariant"] == true);
  CHECK(r.json["class"] == to_json(divisor_class_of(alternating_cycle(8, 9).complex())));
  CHECK(r.json.contains("pretty"));

  r = run({"hypertree", "check", "fixtures://hypertree-6"});
  CHECK(r.json["passes"] == true);
  r = run({"hypertree", "degree", "fixtures://hypertree-7", "--vertex", "1"});
  CHECK(r.json["degree"] == 2);
  r = run({"hypertree", "degree", "fixtures://hypertree-6"});
  CHECK(r.json["degree"] == 3);
  r = run({"--jobs", "2", "enumerate-hypertrees", "--n", "6"});
  CHECK(r.json["count"] == 1);
  r = run({"hypertree", "enumerate", "--n", "5"});
  CHECK(r.json["count"] == 0);

  r = run({"enumerate-minimal", "--vertices", "4", "--char", "0"});
  CHECK(r.json["count"] == 6);

  r = run({"fixtures"});
  CHECK(r.json["version"] == kFixtureVersion);
  CHECK(run({"fixtures", "F9"}).json["kind"] == "curve-class");
}

TEST_CASE("file sources and the document characteristic") {
  TempFile file(fixture("two-triangles-disjoint").dump());
  // The document says char 2; --char overrides it.
  CHECK(run({"balance", file.path()}).json["balanceable"] == true);
  CHECK(run({"balance", "--char", "3", file.path()}).json["balanceable"] == false);
  TempFile plain(R"({"n": 7, "simplices": [[1,2],[2,3],[1,3],[4,5],[5,6],[4,6]]})");
  CHECK(run({"balance", plain.path()}).json["char"] == 0);
}

TEST_CASE("exit codes and error objects") {
  auto r = run({"balance", "fixtures://nope"});
  CHECK(r.code == 1);
  CHECK(r.json["error"]["type"] == "domain");

  TempFile junk("{\"n\": 5,");
  r = run({"balance", junk.path()});
  CHECK(r.code == 1);
  CHECK(r.json["error"]["type"] == "domain");

  r = run({"hypertree", "degree", "fixtures://hypertree-6", "--vertex", "9"});
  CHECK(r.code == 1);

  CHECK(run({"balance", "--bogus", "fixtures://octagon"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"balance"}).code == 2);
  CHECK(run({"--jobs", "0", "fixtures"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  setenv("BC_ENUM_BUDGET", "5", 1);
  r = run({"enumerate-hypertrees", "--n", "7"});
  unsetenv("BC_ENUM_BUDGET");
  CHECK(r.code == 1);
  CHECK(r.json["error"]["type"] == "budget");
}

TEST_CASE("reports") {
  const auto disjoint = complex_from_json(fixture("two-triangles-disjoint"));
  auto sweep = char_sweep_report(disjoint, {0, 2, 3, 5});
  CHECK(sweep["balanceable_at"] == Json::array({2}));
  CHECK(sweep["results"][1]["minimal"] == true);

  sweep = char_sweep_report(alternating_cycle(8, 9).complex(), {0, 2, 3, 5});
  CHECK(sweep["balanceable_at"] == Json::array({0, 2, 3, 5}));

  const auto catalogue = catalogue_report(5, FieldSpec{});
  CHECK(catalogue["mismatch_count"] == 0);
  CHECK(catalogue["count"] == catalogue["graphs"].size());

  auto r = run({"report", "char-sweep", "fixtures://two-triangles-disjoint", "--chars", "0,2"});
  CHECK(r.json["balanceable_at"] == Json::array({2}));
  r = run({"report", "catalogue", "--vertices", "4", "--char", "2"});
  CHECK(r.json["mismatch_count"] == 0);
}
