#include "hct/analysis.hpp"
#include "hct/error.hpp"

#include <algorithm>
#include <random>

namespace hct {

double DiffReport::fraction() const noexcept
{
    const auto common = std::min(length_a, length_b);
    return common == 0 ? 0.0 : static_cast<double>(hamming) / static_cast<double>(common);
}

DiffReport difference_series(const BitSeq& a, const BitSeq& b)
{
    DiffReport r;
    r.length_a = a.size();
    r.length_b = b.size();
    r.length_delta = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    const auto common = std::min(a.size(), b.size());
    r.series.resize(common);
    for (std::size_t i = 0; i < common; ++i) {
        r.series[i] = a[i] ^ b[i];
        r.hamming += r.series[i];
    }
    return r;
}

AvalancheResult avalanche_experiment(const BitSeq& plaintext, const KeySchedule& key, std::size_t n,
                                     std::size_t flip_index)
{
    auto env = encrypt(plaintext, key, n);
    if (flip_index >= env.payload.size())
        throw Error(ErrorCode::InvalidArgument, "flip index " + std::to_string(flip_index)
                                                    + " is outside the payload of " + std::to_string(env.payload.size())
                                                    + " bits");
    env.payload.flip(flip_index);

    AvalancheResult result;
    result.original = plaintext;
    result.corrupted = decrypt(env, key, DecryptOptions{.tolerant = true}, &result.decrypt_report);
    result.report = difference_series(result.original, result.corrupted);
    return result;
}

AvalancheSummary avalanche_trials(std::size_t msg_bits, const KeySchedule& key, std::size_t n, std::size_t trials,
                                  std::uint64_t seed)
{
    if (msg_bits == 0 || trials == 0)
        throw Error(ErrorCode::InvalidArgument, "message length and trial count must be positive");
    std::mt19937_64 rng(seed);
    AvalancheSummary summary;
    summary.trials = trials;
    summary.min_hamming = msg_bits;
    double total = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        BitSeq m;
        for (std::size_t i = 0; i < msg_bits; ++i)
            m.push_back(rng() & 1);
        const auto payload_bits = encrypt(m, key, n).payload.size();
        const auto flip = std::uniform_int_distribution<std::size_t>(0, payload_bits - 1)(rng);
        const auto res = avalanche_experiment(m, key, n, flip);
        total += res.report.fraction();
        summary.min_hamming = std::min(summary.min_hamming, res.report.hamming);
        summary.conflicts += res.decrypt_report.sentinel_conflicts;
    }
    summary.mean_fraction = total / static_cast<double>(trials);
    return summary;
}

std::optional<std::string> degenerate_check(const BitSeq& plaintext)
{
    const auto bits = plaintext.bits();
    if (bits.empty())
        return std::nullopt;
    if (std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 0; }))
        return "input is all zeros: the ciphertext payload will be all zeros";
    if (std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 1; }))
        return "input is all ones: the ciphertext payload will be all zeros and only sentinel metadata carries the message";
    return std::nullopt;
}

void write_csv(std::ostream& os, const BitSeq& a, const BitSeq& b, const DiffReport& report)
{
    os << "position,bit_a,bit_b,diff\n";
    for (std::size_t i = 0; i < report.series.size(); ++i)
        os << i << ',' << int{a[i]} << ',' << int{b[i]} << ',' << int{report.series[i]} << '\n';
    os << "# length_a=" << report.length_a << " length_b=" << report.length_b << " hamming=" << report.hamming
       << " length_delta=" << report.length_delta << '\n';
}

} // namespace hct
