#include <doctest.h>

#include <set>

#include "cubekit/descent.hpp"
#include "cubekit/sieve.hpp"

using namespace cubekit;

namespace {

// The survivor the coset elimination pins down for the 3l family, in
// both conjugate labelings: (3ζ²π², 9ζπ) and its relabel (3ζπ², 9ζ²π).
const SUnitPair kThreeEllSurvivorA = SUnitPair::from_first({1, 2, 2, 0});
const SUnitPair kThreeEllSurvivorB = SUnitPair::from_first({0, 2, 2, 0});

// Observed survivors for the 3l2 family: (9ζ²π², 3ζπ) or its relabel
// (9ζπ², 3ζ²π); a different coset than the 3l case.
const SUnitPair kThreeEllSqSurvivorA = SUnitPair::from_first({0, 1, 2, 0});
const SUnitPair kThreeEllSqSurvivorB = SUnitPair::from_first({2, 1, 2, 0});

}  // namespace

TEST_SUITE("descent") {

TEST_CASE("family helpers") {
    CHECK(family_from_name("3l") == Family::ThreeEll);
    CHECK(family_from_name("2l2") == Family::TwoEllSquared);
    CHECK_FALSE(family_from_name("5l").has_value());
    CHECK(family_name(Family::EllSquared) == std::string("l2"));
    CHECK(family_class_mod9(Family::ThreeEll) == 7);
    CHECK(family_class_mod9(Family::ThreeEllSquared) == 4);
    CHECK(family_n(Family::ThreeEllSquared, Int(13)) == 507);
    CHECK(family_h3_field(Family::TwoEllSquared, Int(19)) == Int(38));
    CHECK_FALSE(family_h3_field(Family::Ell, Int(19)).has_value());
}

TEST_CASE("s-unit group generators") {
    auto gens = s_unit_group(Family::ThreeEll, Int(43));
    REQUIRE(gens.size() == 4);
    CHECK(gens[0] == EisensteinInt::zeta());
    CHECK(gens[1] == EisensteinInt::p3());
    CHECK(gens[2].norm() == 43);
    CHECK(gens[3].norm() == 43);
    CHECK(s_unit_group(Family::ThreeEll, Int(61)).size() == 4);
    CHECK_THROWS_WITH(s_unit_group(Family::ThreeEll, Int(41)),
                      doctest::Contains("WrongResidueClass"));
    CHECK_THROWS_WITH(s_unit_group(Family::TwoEll, Int(19)),
                      doctest::Contains("UnsupportedFamily"));
    CHECK_THROWS_WITH(s_unit_group(Family::ThreeEll, Int(49)), doctest::Contains("NotPrime"));
}

TEST_CASE("the 13 candidate cosets") {
    auto cands = candidate_cosets(Family::ThreeEll, Int(43));
    REQUIRE(cands.size() == 13);
    std::set<std::array<uint8_t, 4>> seen;
    for (const SUnitPair& c : cands) {
        // Norm-kernel condition.
        for (int i = 0; i < 4; ++i) CHECK((c.first[i] + c.second[i]) % 3 == 0);
        CHECK_FALSE(c.is_identity());
        // Distinct as order-3 subgroups: no candidate equals another or
        // its square.
        CHECK(seen.insert(c.first).second);
        CHECK(seen.insert(c.pow(2).first).second);
    }
}

TEST_CASE("elimination at l = 43 reproduces the single surviving coset") {
    SelmerEliminationReport rep = eliminate(Family::ThreeEll, Int(43));
    CHECK(rep.conclusive);
    CHECK(rep.s_set.size() == 3);
    CHECK(rep.known_element == SUnitPair::from_first({1, 1, 2, 2}));
    REQUIRE(rep.survivors.size() == 1);
    CHECK((rep.survivors[0] == kThreeEllSurvivorA || rep.survivors[0] == kThreeEllSurvivorB));
    CHECK(rep.dim_upper_bound == 2);
    CHECK(rep.eliminations.size() == 12);

    // The swapped labeling yields the mirror coset, same bound.
    SelmerEliminationReport swapped = eliminate(Family::ThreeEll, Int(43), true);
    REQUIRE(swapped.survivors.size() == 1);
    CHECK(swapped.survivors[0] != rep.survivors[0]);
    CHECK((swapped.survivors[0] == kThreeEllSurvivorA || swapped.survivors[0] == kThreeEllSurvivorB));
    CHECK(swapped.dim_upper_bound == 2);
}

TEST_CASE("elimination at l = 79") {
    // Oracle first: 3 is not a cube mod 79, so the bound is conclusive.
    REQUIRE_FALSE(cubic_character_mod_ell(3, 79));
    SelmerEliminationReport rep = eliminate(Family::ThreeEll, Int(79));
    CHECK(rep.conclusive);
    CHECK(rep.dim_upper_bound == 2);
}

TEST_CASE("the known element survives every run") {
    for (long ell : {43L, 61L, 79L, 151L, 547L}) {
        SelmerEliminationReport rep = eliminate(Family::ThreeEll, Int(ell));
        CHECK(rep.dim_upper_bound >= 1);
        if (!rep.conclusive) {
            // Trivial symbol: (9,3) and friends survive, weaker bound.
            CHECK(rep.dim_upper_bound > 2);
        }
    }
}

TEST_CASE("3l sweep: conclusive eliminations always pin the same coset") {
    for_each_prime(2000, [](uint32_t ell) {
        if (ell % 9 != 7) return;
        if (cubic_character_mod_ell(3, ell)) return;
        SelmerEliminationReport rep = eliminate(Family::ThreeEll, Int(static_cast<unsigned long>(ell)));
        CHECK(rep.dim_upper_bound <= 2);
        REQUIRE(rep.survivors.size() <= 1);
        for (const SUnitPair& s : rep.survivors)
            CHECK((s == kThreeEllSurvivorA || s == kThreeEllSurvivorB));
    });
}

TEST_CASE("3l2 sweep surfaces its own survivor coset") {
    for_each_prime(2000, [](uint32_t ell) {
        if (ell % 9 != 4) return;
        if (cubic_character_mod_ell(3, ell)) return;
        SelmerEliminationReport rep =
            eliminate(Family::ThreeEllSquared, Int(static_cast<unsigned long>(ell)));
        CHECK(rep.known_element == SUnitPair::from_first({1, 1, 1, 1}));
        CHECK(rep.dim_upper_bound <= 2);
        REQUIRE(rep.survivors.size() <= 1);
        for (const SUnitPair& s : rep.survivors)
            CHECK((s == kThreeEllSqSurvivorA || s == kThreeEllSqSurvivorB));
    });
}

TEST_CASE("classify: table rank-0 rows") {
    CHECK(classify(Int(129)).outcome == Outcome::ProvablyNonCubeSum);
    CHECK(classify(Int(3 * 79)).outcome == Outcome::ProvablyNonCubeSum);
    CHECK(classify(Int(507)).outcome == Outcome::ProvablyNonCubeSum);   // 3*13^2
    CHECK(classify(Int(38)).outcome == Outcome::ProvablyNonCubeSum);    // 2*19
    CHECK(classify(Int(2738)).outcome == Outcome::ProvablyNonCubeSum);  // 2*37^2
}

TEST_CASE("classify(129) carries the full proof trace") {
    Verdict v = classify(Int(129));
    CHECK(v.family == Family::ThreeEll);
    CHECK(v.ell == Int(43));
    CHECK(v.root_number_w == 1);
    REQUIRE(v.necessary_condition.has_value());
    CHECK(v.necessary_condition->field_n == 516);
    CHECK(v.necessary_condition->h3_value == 1);
    CHECK_FALSE(v.necessary_condition->passes);
    CHECK(v.necessary_condition->str() == "h3(516)=1: fail");
    REQUIRE(v.elimination.has_value());
    CHECK(v.elimination->dim_upper_bound == 2);
    CHECK(v.trace.size() >= 4);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("classify(13) certifies the cube sum") {
    Verdict v = classify(Int(13));
    CHECK(v.outcome == Outcome::CubeSum);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->ax == 7);
    CHECK(v.witness->ay == 2);
    CHECK(v.witness->c == 3);
    CHECK(v.root_number_w == -1);
}

TEST_CASE("classify(183): the necessary condition passes and a witness exists") {
    Verdict v = classify(Int(183));
    REQUIRE(v.necessary_condition.has_value());
    CHECK(v.necessary_condition->str() == "h3(732)=2: pass");
    // 183 = (14/3)^3 + (13/3)^3, inside the default search bounds.
    CHECK(v.outcome == Outcome::CubeSum);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->verifies(Int(183)));
    // Without the search the honest answer is Undetermined.
    ClassifyOptions no_search;
    no_search.witness_search = false;
    CHECK(classify(Int(183), no_search).outcome == Outcome::Undetermined);
}

TEST_CASE("classify leaves non-sufficient cases undetermined") {
    Verdict a = classify(Int(3 * 547));
    CHECK(a.outcome == Outcome::Undetermined);
    REQUIRE(a.necessary_condition.has_value());
    CHECK(a.necessary_condition->passes);
    CHECK(a.necessary_condition->field_n == 12 * 547);

    Verdict b = classify(Int(3 * 67 * 67));
    CHECK(b.outcome == Outcome::Undetermined);
    REQUIRE(b.necessary_condition.has_value());
    CHECK(b.necessary_condition->passes);
    CHECK(b.necessary_condition->field_n == 18 * 67);
}

TEST_CASE("Pepin-Lucas-Sylvester classes") {
    for (long ell : {5L, 23L, 41L, 59L, 113L, 1103L}) {
        Int l(ell);
        Int r = l % 9;
        REQUIRE((r == 2 || r == 5));
        CHECK(classify(l).outcome == Outcome::ProvablyNonCubeSum);
    }
    // 2 itself is the classical exception: 1^3 + 1^3.
    CHECK(classify(Int(2)).outcome == Outcome::CubeSum);
    CHECK(classify(Int(1)).outcome == Outcome::CubeSum);
}

TEST_CASE("classify(19) finds the integral witness") {
    Verdict v = classify(Int(19));
    CHECK(v.outcome == Outcome::CubeSum);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->ax == 3);
    CHECK(v.witness->ay == -2);
    CHECK(v.witness->c == 1);
}

TEST_CASE("classify rejects non-cube-free input") {
    CHECK_THROWS_WITH(classify(Int(16)), doctest::Contains("UnsupportedFamily"));
    CHECK_THROWS_AS(classify(Int(0)), Error);
}

TEST_CASE("cube sums always carry verified witnesses") {
    ClassifyOptions opts;
    opts.denom_bound = 6;
    opts.num_bound = 300;
    for (long n = 1; n <= 150; ++n) {
        if (cube_free_part(Int(n)) != n) continue;
        Verdict v = classify(Int(n), opts);
        if (v.outcome == Outcome::CubeSum) {
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->verifies(Int(n)));
        }
    }
}

TEST_CASE("verdicts are invariant under conjugate relabeling") {
    ClassifyOptions swapped;
    swapped.swap_conjugates = true;
    for (long n : {129L, 237L, 507L, 38L, 74L, 722L, 183L, 1641L, 457L, 19L}) {
        Verdict a = classify(Int(n));
        Verdict b = classify(Int(n), swapped);
        CHECK(a.outcome == b.outcome);
        if (a.necessary_condition) {
            REQUIRE(b.necessary_condition.has_value());
            CHECK(a.necessary_condition->h3_value == b.necessary_condition->h3_value);
        }
    }
}


TEST_CASE("the oracle never contradicts a rank-0 proof") {
    ClassifyOptions proof_only;
    proof_only.witness_search = false;
    int proven = 0;
    for_each_prime(200, [&](uint32_t ell) {
        for (Family f : {Family::ThreeEll, Family::ThreeEllSquared, Family::TwoEll,
                         Family::TwoEllSquared}) {
            if (ell % 9 != static_cast<uint32_t>(family_class_mod9(f))) continue;
            Int n = family_n(f, Int(static_cast<unsigned long>(ell)));
            if (classify(n, proof_only).outcome != Outcome::ProvablyNonCubeSum) continue;
            ++proven;
            CHECK_FALSE(find_witness(n, 20, 3000).has_value());
        }
    });
    CHECK(proven >= 10);
}

TEST_CASE("non-cube-sum proof implies the 3-rank is 1 across the 3l family") {
    for_each_prime(2000, [](uint32_t ell) {
        if (ell % 9 != 7) return;
        Int n = Int(3) * static_cast<unsigned long>(ell);
        ClassifyOptions opts;
        opts.witness_search = false;
        Verdict v = classify(n, opts);
        if (v.outcome == Outcome::ProvablyNonCubeSum) {
            REQUIRE(v.necessary_condition.has_value());
            CHECK(v.necessary_condition->h3_value == 1);
        }
    });
}

}  // TEST_SUITE
