#include "sbk/catalog.hpp"
#include "sbk/cybe.hpp"
#include "sbk/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sbk;

TEST_CASE("algebra JSON round trip") {
    const auto& alg = catalog().algebra("osp22");
    json j = algebra_to_json(alg);
    SuperAlgebra back = algebra_from_json(j);
    CHECK(back.dim() == alg.dim());
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) CHECK(back.c(i, a, b) == alg.c(i, a, b));
    CHECK(verify_lie_superalgebra(back).pass());
}

TEST_CASE("omitted brackets default to zero") {
    json j = {{"name", "ab"},
              {"generators", json::array({{{"name", "a"}, {"parity", 0}},
                                          {{"name", "b"}, {"parity", 0}}})}};
    SuperAlgebra alg = algebra_from_json(j);
    CHECK(verify_lie_superalgebra(alg).pass());
    CHECK(alg.c(0, 1, 0) == 0);
}

TEST_CASE("loader rejects parity violations naming the triple") {
    json j = {{"name", "bad"},
              {"generators", json::array({{{"name", "a"}, {"parity", 0}},
                                          {{"name", "f"}, {"parity", 1}}})},
              {"brackets", json::array({{{"left", "a"},
                                         {"right", "a"},
                                         {"result", {{"f", "1"}}}}})}};
    try {
        algebra_from_json(j);
        FAIL("expected rejection");
    } catch (const LoadError& e) {
        std::string msg = e.what();
        CHECK(msg.find("parity closure") != std::string::npos);
        CHECK(msg.find("(a, a, f)") != std::string::npos);
    }
}

TEST_CASE("loader rejects graded antisymmetry violations naming the triple") {
    // [a,b] = c together with [b,a] = c violates antisymmetry (should be -c)
    json j = {{"name", "bad2"},
              {"generators", json::array({{{"name", "a"}, {"parity", 0}},
                                          {{"name", "b"}, {"parity", 0}},
                                          {{"name", "c"}, {"parity", 0}}})},
              {"brackets",
               json::array({{{"left", "a"}, {"right", "b"}, {"result", {{"c", "1"}}}},
                            {{"left", "b"}, {"right", "a"}, {"result", {{"c", "1"}}}}})}};
    try {
        algebra_from_json(j);
        FAIL("expected rejection");
    } catch (const LoadError& e) {
        std::string msg = e.what();
        CHECK(msg.find("antisymmetry") != std::string::npos);
        CHECK(msg.find("(b, a, c)") != std::string::npos);
    }
    // an even generator bracketed with itself must vanish
    json j2 = {{"name", "bad3"},
               {"generators", json::array({{{"name", "a"}, {"parity", 0}},
                                           {{"name", "c"}, {"parity", 0}}})},
               {"brackets",
                json::array({{{"left", "a"}, {"right", "a"}, {"result", {{"c", "1"}}}}})}};
    CHECK_THROWS_AS(algebra_from_json(j2), LoadError);
}

TEST_CASE("r-matrix loader applies projection and antisymmetrization") {
    const auto& alg = catalog().algebra("osp22");
    // already-valid input is untouched
    json ok = {{"algebra", "osp22"},
               {"entries", json::array({{{"row", "H"}, {"col", "X+"}, {"value", "1/2"}},
                                        {{"row", "X+"}, {"col", "H"}, {"value", "-1/2"}}})}};
    auto loaded = rmatrix_from_json(alg, ok);
    CHECK_FALSE(loaded.adjusted);
    CHECK(loaded.r.at(alg.index_of("H"), alg.index_of("X+")) == make_rational(1, 2));

    // raw input gets hat-antisymmetrized and even-projected, with a warning flag
    json raw = {{"algebra", "osp22"},
                {"entries", json::array({{{"row", "H"}, {"col", "X+"}, {"value", "1"}},
                                         {{"row", "H"}, {"col", "V+"}, {"value", "3"}}})}};
    auto adjusted = rmatrix_from_json(alg, raw);
    CHECK(adjusted.adjusted);
    CHECK(adjusted.r.at(alg.index_of("H"), alg.index_of("X+")) == make_rational(1, 2));
    CHECK(adjusted.r.at(alg.index_of("H"), alg.index_of("V+")) == 0);
    CHECK(adjusted.r.is_even(alg));
    CHECK(adjusted.r.is_graded_antisymmetric(alg));

    // unknown generators are errors
    json bad = {{"algebra", "osp22"},
                {"entries", json::array({{{"row", "Q"}, {"col", "H"}, {"value", "1"}}})}};
    CHECK_THROWS_AS(rmatrix_from_json(alg, bad), std::invalid_argument);
}

TEST_CASE("r-matrix and tensor exports") {
    const auto& alg = catalog().algebra("osp22");
    auto r = catalog().r_template("h1").evaluate(alg, {{"x", Rational(1)},
                                                       {"y", Rational(2)}});
    json j = rmatrix_to_json(alg, r);
    auto back = rmatrix_from_json(alg, j);
    CHECK_FALSE(back.adjusted);
    CHECK(back.r == r);

    auto square = schouten_square(alg, r);
    json t = tensor3_to_json(alg, square);
    CHECK(t.size() == square.entries().size());

    auto space = cocycle_space(catalog().algebra("osp12_u1"));
    json cs = cocycle_space_to_json(catalog().algebra("osp12_u1"), space);
    CHECK(cs["dimension"] == 9);
    CHECK(cs["basis"].size() == 9);
}
