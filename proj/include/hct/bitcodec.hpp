#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hct {

// Bit sequence with an explicit length. Bytes are packed MSB-first.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::vector<std::uint8_t> bits);

    // Accepts only '0' and '1'; throws InvalidArgument otherwise.
    static BitSeq from_text(std::string_view text);
    static BitSeq from_bytes(std::span<const std::uint8_t> bytes);
    static BitSeq from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_len);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }

    void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
    void flip(std::size_t i);
    void resize(std::size_t n) { bits_.resize(n, 0); }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::string to_text() const;
    std::vector<std::uint8_t> to_bytes() const;

    friend bool operator==(const BitSeq&, const BitSeq&) = default;

private:
    std::vector<std::uint8_t> bits_; // one 0/1 per element
};

struct GroupedSeq {
    std::vector<std::uint32_t> values;
    unsigned x = 0;
    std::size_t orig_bit_len = 0;
};

// Positions (0-based, across all chunks) whose group value is 2^x - 1.
struct SentinelSet {
    std::vector<std::uint32_t> indices;

    friend bool operator==(const SentinelSet&, const SentinelSet&) = default;
};

// Group count after padding: n * ceil(ceil(bit_len / x) / n).
std::size_t padded_group_count(std::size_t bit_len, unsigned x, std::size_t n) noexcept;

GroupedSeq pad_and_group(const BitSeq& bits, unsigned x, std::size_t n);

// Splits into x-bit groups; bits.size() must be a multiple of x.
std::vector<std::uint32_t> group_exact(const BitSeq& bits, unsigned x);

SentinelSet detect_sentinels(const GroupedSeq& g);

// Writes 2^x - 1 at every sentinel position. Throws SentinelConflict when a
// marked position does not hold 0, or InvalidArgument for an out-of-range index.
std::vector<std::uint32_t> restore_sentinels(std::vector<std::uint32_t> values, const SentinelSet& s, unsigned x);

BitSeq ungroup(std::span<const std::uint32_t> values, unsigned x);

// Keeps the first orig_bit_len bits. The discarded tail must be all zero.
BitSeq truncate(const BitSeq& bits, std::size_t orig_bit_len);

} // namespace hct
