#include <doctest.h>

#include "rahman/errors.hpp"
#include "rahman/serialize.hpp"
#include "support.hpp"

using rahman::Rational;

TEST_CASE("parameter lists and files") {
  CHECK(rahman::parse_parameter_list("1,2,3,5") == testing::P1235());
  CHECK(rahman::parse_parameter_list("1/2,-3,4,5").p1 == Rational(1, 2));
  CHECK_THROWS_AS(rahman::parse_parameter_list("1,2,3"), rahman::ParseError);
  CHECK_THROWS_AS(rahman::parse_parameter_list("1,2,x,5"), rahman::ParseError);

  const auto pf = rahman::parse_parameter_file(R"({"p": ["1", 2, "3/1", 5], "N": 4})");
  CHECK(pf.params == testing::P1235());
  CHECK(pf.N == 4);
  CHECK_FALSE(rahman::parse_parameter_file(R"({"p": [1,2,3,5]})").N.has_value());
  CHECK_THROWS_AS(rahman::parse_parameter_file("{"), rahman::ParseError);
  CHECK_THROWS_AS(rahman::parse_parameter_file(R"({"p": [1,2,3]})"), rahman::ParseError);
  CHECK_THROWS_AS(rahman::parse_parameter_file(R"({"p": [1,2,3,5], "N": -1})"), rahman::ParseError);
  CHECK_THROWS_AS(rahman::parse_parameter_file(R"({"p": [1,2,3,5.5]})"), rahman::ParseError);
}

TEST_CASE("table exports") {
  const rahman::RahmanTable table(rahman::derive(testing::P1235()), 1);
  const auto j = rahman::table_to_json(table);
  CHECK(j["values"][0][0] == "1");
  CHECK(j["values"][1][1] == "-1/11");
  const std::string csv = rahman::table_to_csv(table);
  CHECK(csv.substr(0, 6) == "1,1,1\n");
  CHECK(csv == rahman::table_to_csv(table));
}

TEST_CASE("report json") {
  rahman::Report ok("a");
  ok.check(true);
  rahman::Report bad("b");
  bad.check(false, "first");
  bad.check(false, "second");
  const auto j = rahman::to_json(std::vector<rahman::Report>{ok, bad});
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["first_failure"].is_null());
  CHECK(j[1]["first_failure"] == "first");
  CHECK(j[1]["checked"] == 2);
}
