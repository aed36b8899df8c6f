#pragma once

#include "hct/bitcodec.hpp"
#include "hct/modmath.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hct {

class KeySchedule {
public:
    // Validates every element; throws InvalidKeyElement, or InvalidArgument when empty.
    explicit KeySchedule(std::span<const long long> exponents);
    KeySchedule(std::initializer_list<long long> exponents);

    // "3,5,7"
    static KeySchedule parse(std::string_view text);

    std::span<const ModulusParams> levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }

private:
    std::vector<ModulusParams> levels_;
};

struct LevelRecord {
    unsigned x = 0;
    std::uint64_t orig_bit_len = 0;
    SentinelSet sentinels;

    friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

inline constexpr std::uint8_t kEnvelopeVersion = 1;

struct CipherEnvelope {
    std::uint8_t version = kEnvelopeVersion;
    std::size_t block_order = 8;
    std::vector<LevelRecord> levels; // encryption order
    BitSeq payload;

    friend bool operator==(const CipherEnvelope&, const CipherEnvelope&) = default;
};

// Intermediate values of one level, recorded on request.
struct LevelTrace {
    unsigned x = 0;
    std::vector<std::uint32_t> grouped;     // decimated input of the level
    SentinelSet sentinels;
    std::vector<std::uint64_t> raw_product; // unreduced H * grouped; empty if it could overflow
    std::uint32_t inverse_multiplier = 0;   // decryption only
    std::vector<std::uint32_t> transformed; // after reduction (decryption: before restoration)
    std::vector<std::uint32_t> restored;    // decryption only
    BitSeq output;
};

struct DecryptOptions {
    // Skip restoration at conflicting sentinel positions and accept nonzero
    // padding instead of throwing; the counts land in DecryptReport.
    bool tolerant = false;
};

struct DecryptReport {
    std::size_t sentinel_conflicts = 0;
    std::size_t padding_violations = 0;
};

CipherEnvelope encrypt(const BitSeq& plaintext, const KeySchedule& key, std::size_t block_order,
                       std::vector<LevelTrace>* trace = nullptr);

BitSeq decrypt(const CipherEnvelope& envelope, const KeySchedule& key, const DecryptOptions& options = {},
               DecryptReport* report = nullptr, std::vector<LevelTrace>* trace = nullptr);

// First digest_bits payload bits, zero-extended when the payload is shorter.
BitSeq hash_digest(const BitSeq& data, const KeySchedule& key, std::size_t block_order, std::size_t digest_bits);

// Structural checks shared by parse and decrypt. Throws MalformedEnvelope.
void validate(const CipherEnvelope& envelope);

std::vector<std::uint8_t> serialize(const CipherEnvelope& envelope);
CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes);

} // namespace hct
