#include "hct/error.hpp"
#include "hct/modmath.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

using namespace hct;

namespace {

bool trial_division_prime(std::uint64_t u)
{
    if (u < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= u; ++d)
        if (u % d == 0)
            return false;
    return true;
}

std::uint64_t smallest_factor(std::uint64_t u)
{
    for (std::uint64_t d = 2; d * d <= u; ++d)
        if (u % d == 0)
            return d;
    return u;
}

} // namespace

TEST_CASE("is_prime examples")
{
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK(trial_division_prime(2147483647));
    CHECK(is_prime(2147483647));
}

TEST_CASE("is_prime agrees with trial division")
{
    for (std::uint64_t u = 0; u < 200000; ++u)
        REQUIRE_MESSAGE(is_prime(u) == trial_division_prime(u), u);

    // Strong pseudoprimes to several small bases, Fermat F5 and a semiprime of two 32-bit primes.
    const std::vector<std::uint64_t> composites = {561,         1105,        1729, 2047, 3215031751ULL,
                                                   3825123056546413051ULL, 4294967297ULL,
                                                   18446744073709551615ULL, 4294967291ULL * 4294967279ULL};
    for (auto c : composites)
        CHECK_MESSAGE(!is_prime(c), c);
    CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    CHECK(is_prime((1ULL << 61) - 1));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t u = rng() >> 24; // 40-bit values stay cheap for the oracle
        REQUIRE_MESSAGE(is_prime(u) == trial_division_prime(u), u);
    }
}

TEST_CASE("validate_key_element accepts exactly the Mersenne exponents up to 31")
{
    CHECK(validate_key_element(3) == ModulusParams{3, 7});
    CHECK(validate_key_element(5) == ModulusParams{5, 31});

    std::vector<long long> accepted;
    for (long long x = -3; x <= 64; ++x) {
        try {
            const auto m = validate_key_element(x);
            CHECK(m.p == (1ULL << x) - 1);
            accepted.push_back(x);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidKeyElement);
        }
    }
    CHECK(accepted == std::vector<long long>{2, 3, 5, 7, 13, 17, 19, 31});
}

TEST_CASE("validate_key_element rejects 11 because 2047 factors")
{
    const auto f = smallest_factor(2047);
    CHECK(f == 23);
    CHECK(2047 / f == 89);
    CHECK_THROWS_AS(validate_key_element(11), Error);
    try {
        validate_key_element(11);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidKeyElement);
    }
}

TEST_CASE("mod_inverse")
{
    CHECK(mod_inverse(8, 31) == 4);
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(3, 7) == 5);

    for (std::uint32_t p : {3u, 7u, 31u, 127u, 8191u}) {
        for (std::uint32_t a = 1; a < p; ++a) {
            const auto b = mod_inverse(a, p);
            REQUIRE(b > 0);
            REQUIRE(b < p);
            REQUIRE((std::uint64_t{a} * b) % p == 1);
        }
    }
    const std::uint32_t big = 2147483647;
    for (std::uint32_t a : {2u, 8u, 128u, big - 1}) {
        const auto b = mod_inverse(a, big);
        CHECK((std::uint64_t{a} * b) % big == 1);
    }

    try {
        mod_inverse(31, 31);
        FAIL("expected NoInverse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoInverse);
    }
    CHECK_THROWS_AS(mod_inverse(0, 7), Error);
}

TEST_CASE("mod_reduce")
{
    CHECK(mod_reduce(32, 7) == 4);
    CHECK(mod_reduce(0, 31) == 0);
    CHECK(mod_reduce(1953, 31) == 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng();
        const std::uint64_t p = (rng() % 2147483646) + 2;
        const auto r = mod_reduce(v, p);
        REQUIRE(r < p);
        REQUIRE(mod_reduce(r, p) == r);
    }
}

TEST_CASE("modular helpers stay exact at the largest modulus")
{
    const std::uint32_t p = 2147483647;
    CHECK(add_mod(p - 1, p - 1, p) == p - 2);
    CHECK(sub_mod(0, 1, p) == p - 1);
    CHECK(sub_mod(5, 0, p) == 5);
    CHECK(mul_mod(p - 1, p - 1, p) == 1);
}
