#include "hct/hadamard.hpp"
#include "hct/error.hpp"
#include "hct/modmath.hpp"

#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hct {

namespace {

void check_input(const HadamardSpec& spec, std::span<const std::uint32_t> v)
{
    if (v.size() != spec.n)
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " for a transform of order " + std::to_string(spec.n));
    for (auto value : v)
        if (value > spec.p)
            throw Error(ErrorCode::ValueOverflow,
                        "residue " + std::to_string(value) + " exceeds modulus " + std::to_string(spec.p));
}

} // namespace

bool is_supported_order(std::size_t n) noexcept
{
    return n >= kMinOrder && n <= kMaxOrder && (n & (n - 1)) == 0;
}

HadamardSpec HadamardSpec::make(std::size_t n, std::uint32_t p)
{
    if (!is_supported_order(n))
        throw Error(ErrorCode::UnsupportedBlockOrder,
                    "block order " + std::to_string(n) + " is not one of 8, 16, 32, 64, 128");
    if (p < 3 || !is_prime(p))
        throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not an odd prime");
    return {n, p};
}

ResidueVector apply_naive(const HadamardSpec& spec, std::span<const std::uint32_t> v)
{
    check_input(spec, v);
    ResidueVector w(spec.n, 0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < spec.n; ++j)
            acc = add_mod(acc, mul_mod(entry(i, j, spec), v[j] % spec.p, spec.p), spec.p);
        w[i] = acc;
    }
    return w;
}

void transform_in_place(const HadamardSpec& spec, std::span<std::uint32_t> v)
{
    check_input(spec, v);
    const std::uint32_t p = spec.p;
    for (auto& value : v)
        if (value == p)
            value = 0;
    for (std::size_t half = 1; half < spec.n; half <<= 1) {
        for (std::size_t base = 0; base < spec.n; base += 2 * half) {
            for (std::size_t k = base; k < base + half; ++k) {
                const std::uint32_t a = v[k];
                const std::uint32_t b = v[k + half];
                v[k] = add_mod(a, b, p);
                v[k + half] = sub_mod(a, b, p);
            }
        }
    }
}

ResidueVector apply_fast(const HadamardSpec& spec, std::span<const std::uint32_t> v)
{
    ResidueVector w(v.begin(), v.end());
    transform_in_place(spec, w);
    return w;
}

void inverse_in_place(const HadamardSpec& spec, std::span<std::uint32_t> w)
{
    transform_in_place(spec, w);
    const std::uint32_t scale = mod_inverse(spec.n % spec.p, spec.p);
    if (scale == 1)
        return;
    for (auto& value : w)
        value = mul_mod(value, scale, spec.p);
}

ResidueVector apply_inverse(const HadamardSpec& spec, std::span<const std::uint32_t> w)
{
    ResidueVector v(w.begin(), w.end());
    inverse_in_place(spec, v);
    return v;
}

std::vector<std::uint64_t> raw_product(const HadamardSpec& spec, std::span<const std::uint32_t> v)
{
    check_input(spec, v);
    const unsigned __int128 bound = static_cast<unsigned __int128>(spec.n) * spec.p * spec.p;
    if (bound > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::ValueOverflow, "unreduced product does not fit in 64 bits for this order and modulus");
    std::vector<std::uint64_t> out(spec.n, 0);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            out[i] += std::uint64_t{entry(i, j, spec)} * v[j];
    return out;
}

bool self_check(const HadamardSpec& spec)
{
    const std::uint32_t diag = static_cast<std::uint32_t>(spec.n % spec.p);
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t k = 0; k < spec.n; ++k)
                acc = add_mod(acc, mul_mod(entry(i, k, spec), entry(k, j, spec), spec.p), spec.p);
            if (acc != (i == j ? diag : 0))
                return false;
        }
    }
    return true;
}

std::vector<ResidueVector> build_matrix(const HadamardSpec& spec)
{
    std::vector<ResidueVector> rows(spec.n, ResidueVector(spec.n));
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            rows[i][j] = entry(i, j, spec);
    return rows;
}

std::string matrix_text(const HadamardSpec& spec)
{
    std::ostringstream os;
    for (const auto& row : build_matrix(spec)) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

BenchResult bench_kernels(const HadamardSpec& spec, std::size_t iterations, std::uint64_t seed)
{
    using clock = std::chrono::steady_clock;
    if (iterations == 0)
        throw Error(ErrorCode::InvalidArgument, "iterations must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, spec.p - 1);
    std::vector<ResidueVector> inputs(iterations, ResidueVector(spec.n));
    for (auto& v : inputs)
        for (auto& value : v)
            value = dist(rng);

    std::uint64_t sink = 0;
    auto t0 = clock::now();
    for (const auto& v : inputs)
        sink += apply_naive(spec, v)[0];
    auto t1 = clock::now();
    for (const auto& v : inputs)
        sink -= apply_fast(spec, v)[0];
    auto t2 = clock::now();
    if (sink != 0)
        throw std::logic_error("naive and fast kernels disagree");

    const auto ns = [&](auto d) {
        return std::chrono::duration<double, std::nano>(d).count() / static_cast<double>(iterations);
    };
    return {iterations, ns(t1 - t0), ns(t2 - t1)};
}

} // namespace hct
