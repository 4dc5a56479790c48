#include <doctest.h>

#include <json.hpp>

#include "popstack/emit.hpp"

using namespace popstack;

TEST_CASE("histogram csv") {
  const auto h = pass_histogram(3, Machine::popstack, 1);
  CHECK(emit(h, Format::csv) == "n,passes,count\n3,0,1\n3,1,3\n3,2,2\n");
  const auto j = nlohmann::json::parse(emit(h, Format::json));
  CHECK(j.size() == 3);
  CHECK(j[2]["passes"] == 2);
  CHECK(j[2]["count"] == 2);
  CHECK(j[2]["machine"] == "popstack");
}

TEST_CASE("verification report") {
  VerificationReport r{"theorem", "n = 3"};
  r.checked = 7;
  const auto text = emit(r, Format::text);
  CHECK(text.find("status: pass\n") != std::string::npos);
  const auto json = emit(r, Format::json);
  CHECK(json.find("\"failures\": []") != std::string::npos);
  const auto j = nlohmann::ordered_json::parse(json);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim", "scope", "checked", "failure_count",
                                         "failures", "status"});
  CHECK_THROWS_AS(emit(r, Format::csv), UnsupportedFormat);

  r.record_failure("pi=2 3 1");
  CHECK(emit(r, Format::text).find("counterexample: pi=2 3 1") != std::string::npos);
  CHECK(nlohmann::json::parse(emit(r, Format::json))["status"] == "fail");
}

TEST_CASE("reach sets print sorted, one per line") {
  const auto t = tumble_set(parse_binary_word("110010"));
  CHECK(emit(t, Format::text) == "001101\n011001\n100101\n101001\n");
  const auto s = stack_outputs({2, 3, 1});
  CHECK(emit(s, Format::text, TextStyle::compact) == "132\n213\n231\n312\n321\n");
  CHECK(emit(s, Format::text) == "1 3 2\n2 1 3\n2 3 1\n3 1 2\n3 2 1\n");
  const auto j = nlohmann::json::parse(emit(s, Format::json));
  CHECK(j["count"] == 5);
  CHECK(j["elements"][0] == nlohmann::json::array({1, 3, 2}));
}

TEST_CASE("traces") {
  const auto t = trace_to_sorted(Machine::popstack, Permutation{2, 3, 1});
  CHECK(emit(t, Format::text, TextStyle::compact) == "0: 231\n1: 213\n2: 123\n");
  CHECK(emit(t, Format::csv) == "pass,state\n0,2 3 1\n1,2 1 3\n2,1 2 3\n");
  const auto j = nlohmann::json::parse(emit(t, Format::json));
  CHECK(j["passes"] == 2);
  CHECK(j["sorted"] == true);
  const auto w = trace_to_sorted(Machine::flip, parse_binary_word("1100"));
  CHECK(emit(w, Format::text) == "0: 1100\n1: 1010\n2: 0101\n3: 0011\n");
}

TEST_CASE("count table") {
  CountTable table{{{4, 1, Machine::stack, 14}, {4, 2, Machine::stack, 22}}};
  CHECK(emit(table, Format::csv) == "n,t,machine,count\n4,1,stack,14\n4,2,stack,22\n");
  const auto j = nlohmann::json::parse(emit(table, Format::json));
  CHECK(j[1]["count"] == 22);
  CHECK(j[0]["machine"] == "stack");
}

TEST_CASE("parse_format") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
