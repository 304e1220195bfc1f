#include "bruhat/genfun.hpp"
#include "bruhat/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bruhat;

TEST_CASE("level text carries the header") {
    CHECK(level_text(enumerate_level(4, 0)) == "n=4 ell=0 count=1\n1234\n");
    CHECK(level_text(enumerate_level(4, 3)) ==
          "n=4 ell=3 count=6\n1432\n2341\n2413\n3142\n3214\n4123\n");
}

TEST_CASE("set system text is one set per line") {
    CHECK(set_system_text(SetSystem::of(6, {{1, 2}, {1, 3}, {2, 3}})) ==
          "1,2\n1,3\n2,3\n");
    CHECK(set_system_text(SetSystem::of(6, {{1, 3, 5}})) == "1,3,5\n");
    CHECK(set_system_text(SetSystem{6, {}}).empty());
}

TEST_CASE("set system JSON mirror") {
    const json j = json_of(SetSystem::of(5, {{1, 3}, {2, 4}}));
    CHECK(j["ground_size"] == 5);
    CHECK(j["sets"] == json::parse("[[1,3],[2,4]]"));
}

TEST_CASE("csv is RFC-4180 with a header row") {
    const std::string csv = to_csv({"a", "b"}, {{"1", "two"}, {"3,3", "q\"q"}});
    CHECK(csv == "a,b\r\n1,two\r\n\"3,3\",\"q\"\"q\"\r\n");
}

TEST_CASE("aligned table pads columns") {
    const std::string t = aligned_table({"x", "name"}, {{"1", "a"}, {"22", "bb"}});
    CHECK(t == "x   name\n1   a\n22  bb\n");
}

TEST_CASE("polynomial JSON uses integers while they fit") {
    const json small = json_of(q_factorial(4));
    CHECK(small == json::parse("[1,3,5,6,5,3,1]"));
    // beyond 64 bits coefficients fall back to decimal strings
    const BigInt big = rank_r_threshold(8);
    CHECK(big > BigInt("18446744073709551615"));
    CHECK(json_of(big).is_string());
    CHECK(BigInt(json_of(big).get<std::string>()) == big);
    CHECK(json_of(BigInt(42)) == json(42));
}

TEST_CASE("permutation and family JSON") {
    CHECK(json_of(parse_permutation("3214")) == json("3214"));
    PermFamily fam{4, {parse_permutation("2134"), parse_permutation("1234")}};
    fam.canonicalize();
    const json j = json_of(fam);
    CHECK(j["size"] == 2);
    CHECK(j["members"] == json::parse(R"(["1234","2134"])"));
}

TEST_CASE("pretty polynomial strings") {
    CHECK(to_pretty_string(IntPolynomial{}) == "0");
    CHECK(to_pretty_string(IntPolynomial{5}) == "5");
    CHECK(to_pretty_string(IntPolynomial{1, 1, 1}) == "1 + x + x^2");
    CHECK(to_pretty_string(IntPolynomial{0, -2, 3}) == "-2x + 3x^2");
}
