#include "sbk/equiv.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace sbk;

TEST_CASE("witness registry covers the published equivalences") {
    std::set<std::string> ids;
    for (const auto& w : catalog().witness_list()) ids.insert(w.id);
    for (const char* required :
         {"13->1", "8->22", "18->12", "15->14", "20->2", "3->b1", "3->b2", "4->c1",
          "6->d1", "10->f0", "10->f1", "10->f2", "2->h1", "14->i1", "14->i2", "17->j1",
          "17->j2", "19->a1 (F!=0)", "19->a1 (F=0)", "19->a2 (1,1)", "19->a2 (1,0)",
          "19->a2 (0,1)", "21->k1 (Z=0)", "21->k1 (Z!=0)", "21->k2", "5->19", "7->19",
          "16->19", "12->g1", "12->g1.5", "12->g2"})
        CHECK(ids.count(required));
    CHECK_THROWS_AS(catalog().witness("nope"), std::invalid_argument);
}

TEST_CASE("the identity self-witness passes") {
    auto rep = verify_equivalence(catalog().witness("self (case1)"), 5, 7);
    CHECK(rep.verdict == EquivVerdict::pass);
    CHECK(rep.samples_checked == 5);
}

TEST_CASE("every verifiable witness passes on exact samples") {
    for (const auto& w : catalog().witness_list()) {
        auto rep = verify_equivalence(w, 5, 42);
        INFO(w.id << ": " << rep.detail);
        if (w.status == WitnessStatus::unverifiable) {
            CHECK(rep.verdict == EquivVerdict::skipped);
        } else {
            CHECK(rep.verdict == EquivVerdict::pass);
        }
    }
}

TEST_CASE("witness verification is seed-stable") {
    auto a = verify_equivalence(catalog().witness("19->a1 (F!=0)"), 5, 99);
    auto b = verify_equivalence(catalog().witness("19->a1 (F!=0)"), 5, 99);
    CHECK(a.verdict == b.verdict);
    CHECK(a.detail == b.detail);
}

TEST_CASE("flagged witnesses report their reason") {
    auto rep = verify_equivalence(catalog().witness("12->g2 (published)"), 5, 42);
    CHECK(rep.verdict == EquivVerdict::skipped);
    CHECK(rep.detail.find("unverifiable") != std::string::npos);
    auto rep2 = verify_equivalence(catalog().witness("22->e (rank-1 subcase)"), 5, 42);
    CHECK(rep2.verdict == EquivVerdict::skipped);
    CHECK(rep2.detail.find("c9'") != std::string::npos);
}

TEST_CASE("a corrupted witness fails rather than passing silently") {
    EquivalenceWitness bad = catalog().witness("2->h1");
    bad.target_params["x"] = "L/2";  // wrong sign
    auto rep = verify_equivalence(bad, 5, 42);
    CHECK(rep.verdict == EquivVerdict::fail);
    CHECK(rep.detail.find("mismatch") != std::string::npos);
}

TEST_CASE("witnesses whose sampled domain is empty are reported as such") {
    EquivalenceWitness w = catalog().witness("2->h1");
    w.guards.push_back("K-K");  // identically zero guard empties the domain
    auto rep = verify_equivalence(w, 5, 42);
    CHECK(rep.verdict == EquivVerdict::skipped);
    CHECK(rep.detail.find("domain empty") != std::string::npos);
}
