#include "hct/modmath.hpp"
#include "hct/error.hpp"

#include <string>

namespace hct {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t u) noexcept
{
    if (u < 2)
        return false;
    // The first twelve primes are a sufficient witness set below 3.3 * 10^24.
    static constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (u == w)
            return true;
        if (u % w == 0)
            return false;
    }

    std::uint64_t d = u - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : witnesses) {
        std::uint64_t y = powmod64(a, d, u);
        if (y == 1 || y == u - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            y = mulmod64(y, y, u);
            if (y == u - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

ModulusParams validate_key_element(long long x)
{
    if (x < 2 || x > static_cast<long long>(kMaxExponent))
        throw Error(ErrorCode::InvalidKeyElement,
                    "key element " + std::to_string(x) + " is outside the supported range 2..31");
    if (!is_prime(static_cast<std::uint64_t>(x)))
        throw Error(ErrorCode::InvalidKeyElement, "key element " + std::to_string(x) + " is not prime");
    const std::uint64_t p = (std::uint64_t{1} << x) - 1;
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidKeyElement,
                    "key element " + std::to_string(x) + ": 2^x - 1 = " + std::to_string(p) + " is composite");
    return {static_cast<unsigned>(x), static_cast<std::uint32_t>(p)};
}

std::uint32_t mod_inverse(std::uint64_t a, std::uint32_t p)
{
    if (p < 2)
        throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
    std::int64_t r0 = p, r1 = static_cast<std::int64_t>(a % p);
    if (r1 == 0)
        throw Error(ErrorCode::NoInverse, std::to_string(a) + " has no inverse modulo " + std::to_string(p));
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1)
        throw Error(ErrorCode::NoInverse, std::to_string(a) + " has no inverse modulo " + std::to_string(p));
    if (t0 < 0)
        t0 += p;
    return static_cast<std::uint32_t>(t0);
}

} // namespace hct
