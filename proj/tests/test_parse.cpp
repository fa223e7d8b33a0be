#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "sharpchar/cyclotomic.hpp"
#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"

#include "random_values.hpp"

using namespace sharpchar;
using sharpchar_test::random_cyclotomic;

TEST_CASE("single value grammar") {
    CHECK(parse_value("0") == Cyclotomic(0));
    CHECK(parse_value("7/2") == Cyclotomic(Rational(7, 2)));
    CHECK(parse_value("2^10") == Cyclotomic(1024));
    CHECK(parse_value("-2^2") == Cyclotomic(4)); // unary minus binds inside the atom
    CHECK(parse_value("z(4)") == root_of_unity(4, 1));
    CHECK(parse_value("z(6)") == Cyclotomic(1) + root_of_unity(3, 1));
    CHECK(parse_value("(1+z(3))*(1+z(3)^2)") == Cyclotomic(1));
    CHECK(parse_value("2*z(8)^-1") == Cyclotomic(2) * root_of_unity(8, 7));
    CHECK(parse_value("1 + 2*3") == Cyclotomic(7));
    CHECK(parse_value(" z ( 8 ) - z ( 8 ) ^ 3 ") ==
          root_of_unity(8, 1) + root_of_unity(8, 7));
    CHECK(parse_value("-(1-1)") == Cyclotomic(0));
}

TEST_CASE("syntax and precondition failures") {
    CHECK_THROWS_AS(parse_value("1/0"), parse_error);
    CHECK_THROWS_AS(parse_value("z(0)"), parse_error);
    CHECK_THROWS_AS(parse_value("chi"), parse_error);
    CHECK_THROWS_AS(parse_value(""), parse_error);
    CHECK_THROWS_AS(parse_value("1+"), parse_error);
    CHECK_THROWS_AS(parse_value("(1"), parse_error);
    CHECK_THROWS_AS(parse_value("2^1000001"), parse_error);
    CHECK_THROWS_AS(parse_value("1/2/3"), parse_error); // '/' only inside an atom
    CHECK_THROWS_AS(parse_value("0^-1"), precondition_error);

    try {
        parse_value("1/2/3");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("trailing") != std::string::npos);
    }
}

TEST_CASE("value sets") {
    CHECK(parse_value_set("{}").empty());
    CHECK(parse_value_set("{ }").empty());

    const std::vector<Cyclotomic> pair = parse_value_set("{3, -1}");
    REQUIRE(pair.size() == 2); // written order, not sorted
    CHECK(pair[0] == Cyclotomic(3));
    CHECK(pair[1] == Cyclotomic(-1));

    CHECK(parse_value_set("{1, 1, 2}").size() == 3); // duplicates kept

    const std::vector<Cyclotomic> quad = parse_value_set("{-1, 0, 2, z(8)-z(8)^3}");
    REQUIRE(quad.size() == 4);
    CHECK(quad[3] == root_of_unity(8, 1) + root_of_unity(8, 7));

    CHECK_THROWS_AS(parse_value_set("1, 2"), parse_error);
    CHECK_THROWS_AS(parse_value_set("{1, }"), parse_error);
    CHECK_THROWS_AS(parse_value_set("{1} extra"), parse_error);
}

TEST_CASE("expression strings round-trip through the parser") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
        const Cyclotomic x = random_cyclotomic(rng);
        CHECK(parse_value(to_expression_string(x)) == x);
    }
}
