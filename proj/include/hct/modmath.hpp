#pragma once

#include <cstdint>

namespace hct {

// Group width x and modulus p = 2^x - 1, both prime.
struct ModulusParams {
    unsigned x = 0;
    std::uint32_t p = 0;

    friend bool operator==(const ModulusParams&, const ModulusParams&) = default;
};

inline constexpr unsigned kMaxExponent = 31;

// Deterministic for every 64-bit input (Miller-Rabin with a fixed witness set).
bool is_prime(std::uint64_t u) noexcept;

// Throws Error{InvalidKeyElement} unless x and 2^x - 1 are prime and 2 <= x <= 31.
ModulusParams validate_key_element(long long x);

// Extended Euclid. Throws Error{NoInverse} when a == 0 mod p.
std::uint32_t mod_inverse(std::uint64_t a, std::uint32_t p);

constexpr std::uint64_t mod_reduce(std::uint64_t v, std::uint64_t p) noexcept { return v % p; }

constexpr std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

// a - b for a, b in [0, p), realised as a + (p - b).
constexpr std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return add_mod(a, b == 0 ? 0 : p - b, p);
}

constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

} // namespace hct
