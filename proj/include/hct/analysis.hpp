#pragma once

#include "hct/bitcodec.hpp"
#include "hct/cipher.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hct {

struct DiffReport {
    std::size_t length_a = 0;
    std::size_t length_b = 0;
    std::size_t hamming = 0;      // over the common prefix
    std::size_t length_delta = 0;
    std::vector<std::uint8_t> series;

    double fraction() const noexcept;
};

DiffReport difference_series(const BitSeq& a, const BitSeq& b);

struct AvalancheResult {
    DiffReport report;
    BitSeq original;
    BitSeq corrupted;
    DecryptReport decrypt_report;
};

// Encrypts, flips payload bit flip_index, decrypts tolerantly and diffs the plaintexts.
AvalancheResult avalanche_experiment(const BitSeq& plaintext, const KeySchedule& key, std::size_t n,
                                     std::size_t flip_index);

struct AvalancheSummary {
    std::size_t trials = 0;
    double mean_fraction = 0;
    std::size_t min_hamming = 0;
    std::size_t conflicts = 0;
};

// Random message of msg_bits and random flip position per trial.
AvalancheSummary avalanche_trials(std::size_t msg_bits, const KeySchedule& key, std::size_t n, std::size_t trials,
                                  std::uint64_t seed);

// Warning text for all-zero or all-one input.
std::optional<std::string> degenerate_check(const BitSeq& plaintext);

// position,bit_a,bit_b,diff rows followed by a '#' summary line.
void write_csv(std::ostream& os, const BitSeq& a, const BitSeq& b, const DiffReport& report);

} // namespace hct
