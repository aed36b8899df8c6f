#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hct {

using ResidueVector = std::vector<std::uint32_t>;

inline constexpr std::size_t kMinOrder = 8;
inline constexpr std::size_t kMaxOrder = 128;

bool is_supported_order(std::size_t n) noexcept;

// Sylvester Hadamard matrix of order n with -1 written as p - 1.
struct HadamardSpec {
    std::size_t n = 8;
    std::uint32_t p = 7;

    // Throws UnsupportedBlockOrder for n outside {8, 16, 32, 64, 128} and
    // InvalidArgument for an even or trivial modulus.
    static HadamardSpec make(std::size_t n, std::uint32_t p);

    friend bool operator==(const HadamardSpec&, const HadamardSpec&) = default;
};

// 1 when popcount(i & j) is even, p - 1 otherwise.
constexpr std::uint32_t entry(std::size_t i, std::size_t j, const HadamardSpec& spec) noexcept
{
    return (__builtin_popcountll(i & j) & 1) ? spec.p - 1 : 1;
}

// Row-by-row matrix product, reduced term by term. Inputs may hold the value p.
ResidueVector apply_naive(const HadamardSpec& spec, std::span<const std::uint32_t> v);

// Walsh-Hadamard butterfly; same result as apply_naive.
ResidueVector apply_fast(const HadamardSpec& spec, std::span<const std::uint32_t> v);

// In-place butterfly over a chunk of exactly n values, each in [0, p].
void transform_in_place(const HadamardSpec& spec, std::span<std::uint32_t> v);

// inv(n mod p) * H * w (mod p).
ResidueVector apply_inverse(const HadamardSpec& spec, std::span<const std::uint32_t> w);
void inverse_in_place(const HadamardSpec& spec, std::span<std::uint32_t> w);

// Unreduced integer product H * v. Throws ValueOverflow when n * (p - 1)^2 could exceed 64 bits.
std::vector<std::uint64_t> raw_product(const HadamardSpec& spec, std::span<const std::uint32_t> v);

// H * H == (n mod p) * I (mod p), by brute-force matrix product.
bool self_check(const HadamardSpec& spec);

std::vector<ResidueVector> build_matrix(const HadamardSpec& spec);

// One row per line, entries separated by single spaces.
std::string matrix_text(const HadamardSpec& spec);

struct BenchResult {
    std::size_t iterations = 0;
    double naive_ns = 0; // per vector
    double fast_ns = 0;
};

BenchResult bench_kernels(const HadamardSpec& spec, std::size_t iterations, std::uint64_t seed);

} // namespace hct
