#include "sbk/autos.hpp"
#include "sbk/catalog.hpp"
#include "sbk/cybe.hpp"
#include "sbk/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sbk;

namespace {

const SuperAlgebra& osp22() { return catalog().algebra("osp22"); }

AutoParams random_params(RationalSampler& sampler) {
    for (;;) {
        AutoParams p{sampler.next(), sampler.next(), sampler.next(), sampler.next(),
                     sampler.next_int(0, 1)};
        if (p.det() != 0) return p;
    }
}

RMatrix random_even_wedge(const SuperAlgebra& alg, RationalSampler& sampler) {
    RMatrix r(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            if (alg.parity(i) != alg.parity(j)) continue;
            if (i == j && !alg.parity(i).odd()) continue;
            r.add_wedge(alg, i, j, sampler.next());
        }
    return r;
}

}  // namespace

TEST_CASE("identity parameters give the identity basis change") {
    auto A = build_automorphism({1, 0, 0, 1, 0});
    CHECK(A.matrix == RationalMatrix::identity(8));
}

TEST_CASE("the swap S exchanges V and W and flips B") {
    const auto& alg = osp22();
    auto S = build_automorphism({1, 0, 0, 1, 1});
    const std::size_t B = alg.index_of("B");
    for (std::size_t i = 0; i < 3; ++i) CHECK(S.matrix(i, i) == 1);
    CHECK(S.matrix(B, B) == -1);
    CHECK(S.matrix(alg.index_of("V+"), alg.index_of("W+")) == 1);
    CHECK(S.matrix(alg.index_of("W-"), alg.index_of("V-")) == 1);
    CHECK(is_automorphism(alg, S));
    // S is an involution
    CHECK(S.matrix * S.matrix == RationalMatrix::identity(8));
}

TEST_CASE("diagonal scaling example") {
    // (2,0,0,1,0): k = 2, X~+ = 2 X+, X~- = X-/2, H~ = H, B~ = B
    const auto& alg = osp22();
    auto A = build_automorphism({2, 0, 0, 1, 0});
    CHECK(A.matrix(alg.index_of("H"), alg.index_of("H")) == 1);
    CHECK(A.matrix(alg.index_of("X+"), alg.index_of("X+")) == 2);
    CHECK(A.matrix(alg.index_of("X-"), alg.index_of("X-")) == make_rational(1, 2));
    CHECK(A.matrix(alg.index_of("B"), alg.index_of("B")) == 1);
    CHECK(is_automorphism(alg, A));
}

TEST_CASE("singular parameters are rejected") {
    CHECK_THROWS_AS(build_automorphism({1, 2, 2, 4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_automorphism(osp22(), RationalMatrix(8, 8)),
                    std::invalid_argument);
}

TEST_CASE("random parameters build automorphisms; the published H-row fails") {
    const auto& alg = osp22();
    RationalSampler sampler(17);
    for (int t = 0; t < 25; ++t) {
        AutoParams p = random_params(sampler);
        CHECK(is_automorphism(alg, build_automorphism(p)));
        CHECK_FALSE(is_automorphism(alg, build_automorphism_published_hrow(p)));
    }
    // scaling a single fermion is not an automorphism: breaks {V+, W-} = H - B
    RationalMatrix bad = RationalMatrix::identity(8);
    bad(alg.index_of("V+"), alg.index_of("V+")) = 2;
    CHECK_FALSE(is_automorphism(alg, bad));
    // the non-diagonal example (2,1,1,1;0)
    CHECK(is_automorphism(alg, build_automorphism({2, 1, 1, 1, 0})));
}

TEST_CASE("action on r-matrices") {
    const auto& alg = osp22();
    RMatrix vv(8);
    vv.at(alg.index_of("V+"), alg.index_of("V+")) = 1;

    CHECK(act_on_r(BasisChange::identity(), vv) == vv);

    // (t,0,0,t,0) with t = 2 sends V+ (x) V+ to (1/4) V+ (x) V+
    auto A = build_automorphism({2, 0, 0, 2, 0});
    RMatrix image = act_on_r(A, vv);
    CHECK(image.at(alg.index_of("V+"), alg.index_of("V+")) == make_rational(1, 4));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (i != alg.index_of("V+") || j != alg.index_of("V+"))
                CHECK(image.at(i, j) == 0);
}

TEST_CASE("action preserves the r-matrix invariants") {
    const auto& alg = osp22();
    RationalSampler sampler(19);
    for (int t = 0; t < 10; ++t) {
        auto A = build_automorphism(random_params(sampler));
        RMatrix r = random_even_wedge(alg, sampler);
        RMatrix image = act_on_r(A, r);
        CHECK(image.is_even(alg));
        CHECK(image.is_graded_antisymmetric(alg));
    }
}

TEST_CASE("group law and composition") {
    const auto& alg = osp22();
    RationalSampler sampler(23);
    for (int t = 0; t < 10; ++t) {
        auto A = build_automorphism(random_params(sampler));
        auto B = build_automorphism(random_params(sampler));
        RMatrix r = random_even_wedge(alg, sampler);
        BasisChange AB{A.matrix * B.matrix};
        CHECK(act_on_r(A, act_on_r(B, r)) == act_on_r(AB, r));
    }
}

TEST_CASE("the cobracket transforms covariantly") {
    const auto& alg = osp22();
    RationalSampler sampler(29);
    for (int t = 0; t < 6; ++t) {
        auto A = build_automorphism(random_params(sampler));
        RMatrix r = random_even_wedge(alg, sampler);
        CHECK(coboundary_delta(alg, act_on_r(A, r)) ==
              pushforward(A, coboundary_delta(alg, r)));
    }
}

TEST_CASE("CYBE status is an orbit invariant") {
    const auto& alg = osp22();
    RationalSampler sampler(31);
    // a CYBE representative and an obstructed one, pushed around the orbit
    RMatrix cybe_r = catalog().r_template("b2").evaluate(alg, {});
    RMatrix obstructed =
        catalog().r_template("h1").evaluate(alg, {{"x", Rational(1)}, {"y", Rational(0)}});
    for (int t = 0; t < 6; ++t) {
        auto A = build_automorphism(random_params(sampler));
        CHECK(is_cybe(alg, act_on_r(A, cybe_r)));
        CHECK_FALSE(is_cybe(alg, act_on_r(A, obstructed)));
    }
}

TEST_CASE("fermionic normalization steps") {
    const auto& alg = osp22();
    const std::size_t Wp = alg.index_of("W+"), Vp = alg.index_of("V+");

    SECTION("zero input stays put") {
        auto res = fermionic_normal_step(alg, RMatrix(8));
        CHECK(res.r.is_zero());
        CHECK(res.change.matrix == RationalMatrix::identity(8));
        CHECK_FALSE(res.swapped);
        CHECK(res.exact);
    }

    SECTION("rank ordering swap") {
        RMatrix r(8);
        r.at(Wp, Wp) = 1;  // r_VV = 0, r_WW rank 1
        auto res = fermionic_normal_step(alg, r);
        CHECK(res.swapped);
        auto blocks = block_split(alg, res.r);
        RationalMatrix vv(2, 2), ww(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                vv(i, j) = blocks.fermionic(i, j);
                ww(i, j) = blocks.fermionic(i + 2, j + 2);
            }
        CHECK(rank(vv) == 1);
        CHECK(rank(ww) == 0);
        CHECK(is_automorphism(alg, res.change));
    }

    SECTION("square diagonal entries normalize to one") {
        RMatrix r(8);
        r.at(Wp, Wp) = 4;
        r.at(Vp, Vp) = 1;  // keeps rank(r_VV) >= rank(r_WW), no swap
        auto res = fermionic_normal_step(alg, r);
        CHECK_FALSE(res.swapped);
        CHECK(res.exact);
        auto blocks = block_split(alg, res.r);
        CHECK(blocks.fermionic(2, 2) == 1);
        CHECK(blocks.fermionic(2, 3) == 0);
        CHECK(blocks.fermionic(3, 3) == 0);
        CHECK(is_automorphism(alg, res.change));
        // the composite change reproduces the result from the input
        CHECK(act_on_r(res.change, r) == res.r);
    }

    SECTION("non-square entries are flagged") {
        RMatrix r(8);
        r.at(Wp, Wp) = 2;
        r.at(Vp, Vp) = 1;
        auto res = fermionic_normal_step(alg, r);
        CHECK_FALSE(res.exact);
        CHECK(res.note == "normalizable up to square factor");
        auto blocks = block_split(alg, res.r);
        CHECK(blocks.fermionic(2, 3) == 0);  // still diagonalized
    }
}
