#include "hct/bitcodec.hpp"
#include "hct/error.hpp"

#include <algorithm>

namespace hct {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    for (auto& b : bits_)
        if (b > 1)
            throw Error(ErrorCode::InvalidArgument, "bit values must be 0 or 1");
}

BitSeq BitSeq::from_text(std::string_view text)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw Error(ErrorCode::InvalidArgument,
                        "bit string has invalid character at position " + std::to_string(i));
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitSeq(std::move(bits));
}

BitSeq BitSeq::from_bytes(std::span<const std::uint8_t> bytes)
{
    return from_bytes(bytes, bytes.size() * 8);
}

BitSeq BitSeq::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_len)
{
    if (bit_len > bytes.size() * 8)
        throw Error(ErrorCode::LengthUnderflow, "bit length exceeds the available bytes");
    std::vector<std::uint8_t> bits(bit_len);
    for (std::size_t i = 0; i < bit_len; ++i)
        bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    BitSeq out;
    out.bits_ = std::move(bits);
    return out;
}

void BitSeq::flip(std::size_t i)
{
    if (i >= bits_.size())
        throw Error(ErrorCode::InvalidArgument, "bit index out of range");
    bits_[i] ^= 1;
}

std::string BitSeq::to_text() const
{
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

std::vector<std::uint8_t> BitSeq::to_bytes() const
{
    std::vector<std::uint8_t> bytes((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bytes[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (7 - i % 8));
    return bytes;
}

std::size_t padded_group_count(std::size_t bit_len, unsigned x, std::size_t n) noexcept
{
    const std::size_t groups = (bit_len + x - 1) / x;
    return (groups + n - 1) / n * n;
}

GroupedSeq pad_and_group(const BitSeq& bits, unsigned x, std::size_t n)
{
    if (x < 2 || x > 31)
        throw Error(ErrorCode::InvalidArgument, "group width must be in 2..31");
    if (n == 0 || (n & (n - 1)) != 0)
        throw Error(ErrorCode::UnsupportedBlockOrder, "block order must be a power of 2");

    GroupedSeq g;
    g.x = x;
    g.orig_bit_len = bits.size();
    g.values.assign(padded_group_count(bits.size(), x, n), 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        g.values[i / x] |= std::uint32_t{bits[i]} << (x - 1 - i % x);
    return g;
}

std::vector<std::uint32_t> group_exact(const BitSeq& bits, unsigned x)
{
    if (x < 2 || x > 31)
        throw Error(ErrorCode::InvalidArgument, "group width must be in 2..31");
    if (bits.size() % x != 0)
        throw Error(ErrorCode::DimensionMismatch,
                    "bit length " + std::to_string(bits.size()) + " is not a multiple of " + std::to_string(x));
    std::vector<std::uint32_t> values(bits.size() / x, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        values[i / x] |= std::uint32_t{bits[i]} << (x - 1 - i % x);
    return values;
}

SentinelSet detect_sentinels(const GroupedSeq& g)
{
    const std::uint32_t max = (std::uint32_t{1} << g.x) - 1;
    SentinelSet s;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (g.values[i] == max)
            s.indices.push_back(static_cast<std::uint32_t>(i));
    return s;
}

std::vector<std::uint32_t> restore_sentinels(std::vector<std::uint32_t> values, const SentinelSet& s, unsigned x)
{
    const std::uint32_t max = (std::uint32_t{1} << x) - 1;
    for (auto idx : s.indices) {
        if (idx >= values.size())
            throw Error(ErrorCode::InvalidArgument, "sentinel index " + std::to_string(idx) + " is out of range");
        if (values[idx] != 0)
            throw Error(ErrorCode::SentinelConflict, "sentinel position " + std::to_string(idx) + " holds "
                                                         + std::to_string(values[idx]) + " instead of 0");
        values[idx] = max;
    }
    return values;
}

BitSeq ungroup(std::span<const std::uint32_t> values, unsigned x)
{
    if (x < 1 || x > 31)
        throw Error(ErrorCode::InvalidArgument, "group width must be in 1..31");
    std::vector<std::uint8_t> bits(values.size() * x);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] >> x)
            throw Error(ErrorCode::ValueOverflow,
                        "value " + std::to_string(values[k]) + " does not fit in " + std::to_string(x) + " bits");
        for (unsigned b = 0; b < x; ++b)
            bits[k * x + b] = (values[k] >> (x - 1 - b)) & 1;
    }
    return BitSeq(std::move(bits));
}

BitSeq truncate(const BitSeq& bits, std::size_t orig_bit_len)
{
    if (orig_bit_len > bits.size())
        throw Error(ErrorCode::LengthUnderflow, "recorded length " + std::to_string(orig_bit_len)
                                                    + " exceeds sequence length " + std::to_string(bits.size()));
    const auto all = bits.bits();
    if (std::any_of(all.begin() + static_cast<std::ptrdiff_t>(orig_bit_len), all.end(), [](auto b) { return b != 0; }))
        throw Error(ErrorCode::NonZeroPadding, "discarded padding contains a 1 bit");
    return BitSeq(std::vector<std::uint8_t>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(orig_bit_len)));
}

} // namespace hct
