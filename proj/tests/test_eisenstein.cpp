#include <doctest.h>

#include <random>

#include "cubekit/eisenstein.hpp"
#include "cubekit/sieve.hpp"

using namespace cubekit;

namespace {

EisensteinInt random_element(std::mt19937_64& rng, long span = 200) {
    std::uniform_int_distribution<long> dist(-span, span);
    return EisensteinInt(Int(dist(rng)), Int(dist(rng)));
}

// Residue-field multiplication, for the homomorphism check.
ResidueElement res_mul(const ResidueElement& x, const ResidueElement& y) {
    ResidueElement r;
    r.p = x.p;
    r.c0 = (x.c0 * y.c0 - x.c1 * y.c1) % x.p;
    r.c1 = (x.c0 * y.c1 + y.c0 * x.c1 - x.c1 * y.c1) % x.p;
    if (r.c0 < 0) r.c0 += x.p;
    if (r.c1 < 0) r.c1 += x.p;
    return r;
}

}  // namespace

TEST_SUITE("eisenstein") {

TEST_CASE("norm values") {
    CHECK(EisensteinInt(1).norm() == 1);
    CHECK(EisensteinInt::p3().norm() == 3);
    CHECK(EisensteinInt(3, 1).norm() == 7);
    CHECK(EisensteinInt(0).norm() == 0);
}

TEST_CASE("zeta satisfies zeta^2 = -1 - zeta") {
    EisensteinInt z = EisensteinInt::zeta();
    CHECK(z * z == EisensteinInt(-1, -1));
    CHECK(z * z * z == EisensteinInt(1));
}

TEST_CASE("units are exactly the norm-1 elements") {
    for (const auto& u : units()) {
        CHECK(u.norm() == 1);
        CHECK(u.is_unit());
    }
    CHECK_FALSE(EisensteinInt(2).is_unit());
    CHECK_FALSE(EisensteinInt::p3().is_unit());
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 10000; ++i) {
        EisensteinInt x = random_element(rng), y = random_element(rng);
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("primary associate examples") {
    CHECK(primary_associate(EisensteinInt(1)) == EisensteinInt(1));
    CHECK(primary_associate(EisensteinInt(-1)) == EisensteinInt(1));

    // The primary associate of 3+ζ (norm 7); exactly one of the six
    // associates is congruent to 1 mod 3.
    EisensteinInt x(3, 1);
    EisensteinInt p = primary_associate(x);
    CHECK(is_primary(p));
    CHECK(p.norm() == 7);
    int primary_count = 0;
    for (const auto& u : units())
        if (is_primary(u * x)) ++primary_count;
    CHECK(primary_count == 1);
}

TEST_CASE("primary associate of a primary element is itself") {
    auto [pi, pi2] = split_pair(Int(7));
    CHECK(primary_associate(pi.generator) == pi.generator);
    CHECK(primary_associate(pi2.generator) == pi2.generator);
}

TEST_CASE("primary_associate rejects elements with norm divisible by 3") {
    CHECK_THROWS_WITH_AS(primary_associate(EisensteinInt::p3()),
                         doctest::Contains("NotPrimaryizable"), Error);
    CHECK_THROWS_AS(primary_associate(EisensteinInt(3)), Error);
}

TEST_CASE("primary associate is idempotent with the same norm") {
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 2000) {
        EisensteinInt x = random_element(rng);
        Int n = x.norm();
        if (n == 0 || mpz_divisible_ui_p(n.get_mpz_t(), 3)) continue;
        EisensteinInt p = primary_associate(x);
        CHECK(is_primary(p));
        CHECK(p.norm() == n);
        CHECK(primary_associate(p) == p);
        ++tested;
    }
}

TEST_CASE("split of 7") {
    auto primes = split_rational_prime(Int(7));
    REQUIRE(primes.size() == 2);
    const PrimeOfK& pi = primes[0];
    const PrimeOfK& pi2 = primes[1];
    CHECK(pi.generator.norm() == 7);
    CHECK(pi2.generator.norm() == 7);
    CHECK(pi.generator * pi2.generator == EisensteinInt(7));
    CHECK(is_primary(pi.generator));
    CHECK(is_primary(pi2.generator));
    CHECK(pi.residue_degree == 1);
    CHECK(pi.tag == ConjugateTag::First);
    CHECK(pi2.tag == ConjugateTag::Second);
    CHECK(pi.generator.b() > 0);
}

TEST_CASE("split of 2 is inert") {
    auto primes = split_rational_prime(Int(2));
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].residue_degree == 2);
    CHECK(primes[0].tag == ConjugateTag::Inert);
    CHECK(primes[0].generator.norm() == 4);
    CHECK(is_primary(primes[0].generator));
}

TEST_CASE("split of 3 is ramified") {
    auto primes = split_rational_prime(Int(3));
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].tag == ConjugateTag::Ramified);
    CHECK(primes[0].generator.norm() == 3);
    // 𝔭² is an associate of 3.
    EisensteinInt sq = primes[0].generator * primes[0].generator;
    bool associate = false;
    for (const auto& u : units())
        if (sq == u * EisensteinInt(3)) associate = true;
    CHECK(associate);
}

TEST_CASE("split rejects composites") {
    CHECK_THROWS_AS(split_rational_prime(Int(91)), Error);
    CHECK_THROWS_WITH(split_rational_prime(Int(1)), doctest::Contains("NotPrime"));
}

TEST_CASE("every split prime up to 10^4 factors into a primary conjugate pair") {
    for_each_prime(10000, [](uint32_t p) {
        if (p % 3 != 1) return;
        auto [pi, pi2] = split_pair(Int(static_cast<unsigned long>(p)));
        CHECK(pi.generator * pi2.generator == EisensteinInt(static_cast<long>(p)));
        CHECK(is_primary(pi.generator));
        CHECK(is_primary(pi2.generator));
        CHECK(pi2.generator == pi.generator.conj());
    });
}

TEST_CASE("mod_reduce places zeta at a root of z^2+z+1") {
    auto [pi, pi2] = split_pair(Int(7));
    ResidueElement z = mod_reduce(EisensteinInt::zeta(), pi);
    CHECK((z.c0 == 2 || z.c0 == 4));
    CHECK((z.c0 * z.c0 + z.c0 + 1) % 7 == 0);
    // The conjugate gets the other root.
    ResidueElement z2 = mod_reduce(EisensteinInt::zeta(), pi2);
    CHECK(z2.c0 != z.c0);

    CHECK(mod_reduce(EisensteinInt(7), pi).is_zero());
    PrimeOfK two = split_rational_prime(Int(2))[0];
    ResidueElement one = mod_reduce(EisensteinInt(1), two);
    CHECK(one.c0 == 1);
    CHECK(one.c1 == 0);
}

TEST_CASE("mod_reduce is a ring homomorphism") {
    std::mt19937_64 rng(99);
    auto [pi, pi2] = split_pair(Int(103));
    (void)pi2;
    PrimeOfK inert5 = split_rational_prime(Int(5))[0];
    for (int i = 0; i < 2000; ++i) {
        EisensteinInt x = random_element(rng), y = random_element(rng);
        for (const PrimeOfK& q : {pi, inert5}) {
            CHECK(mod_reduce(x * y, q) == res_mul(mod_reduce(x, q), mod_reduce(y, q)));
        }
    }
}

TEST_CASE("exact division and factor removal") {
    EisensteinInt p3 = EisensteinInt::p3();
    CHECK(exact_div(EisensteinInt(3), p3).has_value());
    CHECK_FALSE(exact_div(EisensteinInt(5), p3).has_value());
    auto [v, rest] = remove_factor(EisensteinInt(9), p3);
    CHECK(v == 4);  // 9 = unit · 𝔭⁴
    CHECK(rest.is_unit());
    auto [v2, rest2] = remove_factor(EisensteinInt(12), EisensteinInt(2));
    CHECK(v2 == 2);
    CHECK(rest2 == EisensteinInt(3));
}

}  // TEST_SUITE
