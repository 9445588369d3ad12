#include <doctest.h>

#include "braces/constructions.hpp"
#include "braces/io.hpp"

using namespace braces;

TEST_CASE("table files round-trip byte-identically") {
  const std::string text = "brace v1\ngroup 4\ntable\n0 0 0 0\n0 2 0 2\n0 0 0 0\n0 2 0 2\n";
  const auto b = parse_brace(text);
  CHECK(b.order() == 4);
  CHECK(b.mul(1, 1) == 2);
  CHECK(serialize_brace(b) == text);
  CHECK(check_axioms(b).all_pass());
}

TEST_CASE("rule files round-trip") {
  for (const std::string text :
       {"brace v1\ngroup 9\nrule Bp2 3\n", "brace v1\ngroup 3 3\nrule Bpp 3\n",
        "brace v1\ngroup 2 2\nrule trivial\n", "brace v1\ngroup 3 3 7\nrule Tppq 3 7 2 1\n",
        "brace v1\ngroup 9 7\nrule Tp2q 3 7 2\n", "brace v1\ngroup 2 2 5\nrule Bppq 2 5 2\n",
        "brace v1\ngroup 4 5\nrule Bp2q 2 5 4 1\n", "brace v1\ngroup 3 3 7\nrule Bppq 3 7 1 2\n",
        "brace v1\ngroup 9 19\nrule Bp2q 3 19 4\n"}) {
    CAPTURE(text);
    const auto b = parse_brace(text);
    CHECK(serialize_brace(b) == text);
    CHECK(check_axioms(b).all_pass());
    CHECK(parse_brace(serialize_brace(b, true)).same_multiplication(b));
    CHECK(serialize_brace(parse_brace(serialize_brace(b, true))) == serialize_brace(b, true));
  }
}

TEST_CASE("classification entries serialize as rules") {
  for (const auto& e : classify(3, 7)) {
    const auto text = serialize_brace(e.brace);
    CHECK(text.find("rule " + family_name(e.family)) != std::string::npos);
    CHECK(parse_brace(text).same_multiplication(e.brace));
  }
}

TEST_CASE("malformed files") {
  const char* bad[] = {
      "",
      "brace v2\ngroup 4\ntable\n",
      "brace v1\ngroop 4\n",
      "brace v1\ngroup 1\nrule trivial\n",
      "brace v1\ngroup 4\ntable\n0 0 0 0\n0 2 0 2\n",
      "brace v1\ngroup 4\ntable\n0 0 0 0\n0 2 0 2\n0 0 0 0\n0 2 0 4\n",
      "brace v1\ngroup 4\ntable\n0 0 0 0\n0 2 0 x\n0 0 0 0\n0 2 0 2\n",
      "brace v1\ngroup 4\ntable\n0 0 0 0\n0 2 0\n0 0 0 0\n0 2 0 2\n",
      "brace v1\ngroup 4\nrule Bpp 2\n",
      "brace v1\ngroup 9\nrule Bp2 3 extra\n",
      "brace v1\ngroup 3 3 5\nrule Tppq 3 5 2 1\n",
      "brace v1\ngroup 4\nrule nosuch 1\n",
      "brace v1\ngroup 4\nrule trivial\ntable\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_brace(std::string(text)), ParseError);
  }
  CHECK_THROWS_AS(read_brace_file("/nonexistent/file.brace"), ParseError);
}
