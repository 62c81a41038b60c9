#include "sbk/expr.hpp"
#include "sbk/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sbk;

TEST_CASE("rational parse and format round trip") {
    CHECK(to_string(*parse_rational("3/6")) == "1/2");
    CHECK(to_string(*parse_rational("-4/2")) == "-2");
    CHECK(to_string(*parse_rational("7")) == "7");
    CHECK(to_string(*parse_rational("+5/10")) == "1/2");
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("a/2"));
    CHECK(!parse_rational("1.5"));
    CHECK(!parse_rational(""));
}

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational q = make_rational(1, 3) + make_rational(1, 6);
    CHECK(q == make_rational(1, 2));
    CHECK(numerator(q) == 1);
    CHECK(denominator(q) == 2);
    // denominators stay positive
    Rational r = make_rational(1, -4);
    CHECK(denominator(r) > 0);
    CHECK(r == make_rational(-1, 4));
}

TEST_CASE("rational_sqrt recognizes exact squares only") {
    CHECK(*rational_sqrt(make_rational(9, 4)) == make_rational(3, 2));
    CHECK(*rational_sqrt(Rational(0)) == 0);
    CHECK(!rational_sqrt(Rational(2)));
    CHECK(!rational_sqrt(Rational(-4)));
}

TEST_CASE("expression evaluation") {
    ParamMap p{{"K", make_rational(3)}, {"L", make_rational(-1, 2)},
               {"Y", make_rational(2)}};
    CHECK(eval_expr("-(2*K+L)/Y", p) == make_rational(-11, 4));
    CHECK(eval_expr("K^2 - L^2", p) == make_rational(35, 4));
    CHECK(eval_expr("1/2", {}) == make_rational(1, 2));
    CHECK(eval_expr("-L/2", p) == make_rational(1, 4));
    CHECK(eval_expr("K^2*(-K+L)/(2*L^2)", p) == make_rational(-63));
    CHECK_THROWS_AS(eval_expr("1/K", {{"K", Rational(0)}}), ExcludedPoint);
    CHECK_THROWS_AS(eval_expr("K+", ParamMap{}), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr("Q", ParamMap{}), std::invalid_argument);
}
