#include "dk/checks.hpp"
#include "dk/errors.hpp"
#include "dk/objects.hpp"
#include "dk/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace dk;

TEST_CASE("object descriptors") {
  auto d = parse_object("delta:2", 3);
  REQUIRE(d.module);
  CHECK(d.module->rank(1) == 6);
  CHECK_FALSE(d.ring.has_value());

  auto n = parse_object(" nerve:z2 ", 3);
  CHECK(n.descriptor == "nerve:z2");
  REQUIRE(n.ring.has_value());
  CHECK(n.module == n.ring->module);
  CHECK(n.module->rank(3) == 8);

  CHECK(parse_object("const:Z", 2).module->ranks == std::vector<Index>{1, 1, 1});

  auto c = parse_object("complex:[1,1;2]", 3);
  REQUIRE(c.complex);
  CHECK(c.complex->ranks == std::vector<Index>{1, 1, 0, 0});
  CHECK(to_dense(c.complex->d(1))(0, 0) == 2);
  auto cut = parse_object("complex:[1,2,1;1,-1;1,1]", 1);
  CHECK(cut.complex->ranks == std::vector<Index>{1, 2});
}

TEST_CASE("malformed descriptors are parse errors") {
  for (const char* bad : {"delta", "delta:x", "delta:9", "nerve:q2", "nerve:z5", "const:Q", "torus:1",
                          "complex:1,1", "complex:[1,1;1,2]", "complex:[1,1,1;1;1]", "complex:[1;;1]"})
    CHECK_THROWS_AS(parse_object(bad, 3), ParseError);
  CHECK_THROWS_AS(parse_object("delta:1", -1), ParseError);
}

TEST_CASE("object lists split at the top level only") {
  CHECK(split_objects("delta:1, complex:[1,1;2],nerve:z2") ==
        std::vector<std::string>{"delta:1", "complex:[1,1;2]", "nerve:z2"});
  CHECK_THROWS_AS(split_objects("delta:1,,delta:2"), ParseError);
  CHECK_THROWS_AS(split_objects("complex:[1,1;2"), ParseError);
  CHECK_THROWS_AS(split_objects("delta:1]"), ParseError);
}

TEST_CASE("object views") {
  ChainWorkspace ws;
  auto c = parse_object("complex:[0,1]", 3);
  CHECK(as_module(c, 3)->rank(2) == 2);
  auto d = parse_object("delta:1", 3);
  CHECK(as_complex(d, ws)->rank(1) == 1);
  CHECK_THROWS_AS(as_ring(d), ParseError);
  CHECK(as_ring(parse_object("nerve:z3", 2)).module->rank(2) == 9);
}

TEST_CASE("witnesses are capped but counted") {
  auto r = make_report("cap");
  SparseMatrix a = sparse_identity(40), b = sparse_zero(40, 40);
  compare_matrices(r, 0, a, b);
  CHECK(r.failed());
  CHECK(r.witnesses.size() == VerificationReport::kMaxWitnesses);
  CHECK(r.mismatch_count == 40);
  auto same = make_report("same");
  compare_matrices(same, 0, a, a);
  CHECK(same.passed());
  CHECK(same.witnesses.empty());
}

TEST_CASE("json reports have a fixed key order") {
  auto r = make_report("cap", {"delta:1"}, 2);
  compare_matrices(r, 1, sparse_identity(2), sparse_zero(2, 2));
  auto j = nlohmann::ordered_json::parse(to_json({r}));
  REQUIRE(j.is_array());
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_name", "objects", "max_level", "status", "mismatch_count",
                                         "witnesses", "artifacts", "notes"});
  CHECK(j[0]["status"] == "fail");
  CHECK(j[0]["witnesses"][0]["level"] == 1);
  CHECK(to_json({r}) == to_json({r}));
  auto timed = nlohmann::ordered_json::parse(to_json({r}, true));
  CHECK(timed[0].contains("seconds"));
}

TEST_CASE("the check catalog") {
  auto catalog = check_catalog();
  std::set<std::string> names;
  for (const auto& info : catalog) {
    CHECK(names.insert(info.name).second);
    CHECK(std::find(suite_names().begin(), suite_names().end(), info.suite) != suite_names().end());
    CHECK(info.arity >= 0);
    if (info.arity == 0) CHECK(info.default_objects.size() <= 1);
    for (const auto& objs : info.default_objects) CHECK(static_cast<int>(objs.size()) == info.arity);
  }
  CHECK(names.count("simplicial-identities") == 1);
  CHECK(names.count("transfer-bialgebra") == 1);
}

TEST_CASE("running checks by name") {
  CheckConfig config;
  config.objects = std::vector<std::string>{"delta:1", "nerve:z2"};
  config.max_level = 2;
  auto reports = run_checks("axioms", std::string("aw-chain-map"), config);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) CHECK(r.passed());

  config.normalized = false;
  auto un = run_checks("axioms", std::string("aw-nabla-identity"), config);
  REQUIRE(un.size() == 1);
  CHECK(un[0].failed());

  CHECK_THROWS_AS(run_checks("nope", std::nullopt, {}), ParseError);
  CHECK_THROWS_AS(run_checks("axioms", std::string("nope"), {}), ParseError);
  CheckConfig three;
  three.objects = std::vector<std::string>{"delta:1", "delta:1", "delta:1"};
  CHECK_THROWS_AS(run_checks("axioms", std::string("aw-chain-map"), three), ParseError);
}

TEST_CASE("reports are deterministic") {
  CheckConfig config;
  config.max_level = 2;
  auto a = to_json(run_checks("axioms", std::nullopt, config));
  auto b = to_json(run_checks("axioms", std::nullopt, config));
  CHECK(a == b);
}
