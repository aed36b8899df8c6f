#include "hct/cipher.hpp"
#include "hct/error.hpp"
#include "hct/hadamard.hpp"

#include <charconv>
#include <limits>

namespace hct {

namespace {

void check_block_order(std::size_t n)
{
    if (!is_supported_order(n))
        throw Error(ErrorCode::UnsupportedBlockOrder,
                    "block order " + std::to_string(n) + " is not one of 8, 16, 32, 64, 128");
}

bool raw_product_fits(const HadamardSpec& spec)
{
    return static_cast<unsigned __int128>(spec.n) * spec.p * spec.p <= std::numeric_limits<std::uint64_t>::max();
}

std::vector<std::uint64_t> chunked_raw_product(const HadamardSpec& spec, std::span<const std::uint32_t> values)
{
    std::vector<std::uint64_t> out;
    if (!raw_product_fits(spec))
        return out;
    out.reserve(values.size());
    for (std::size_t base = 0; base < values.size(); base += spec.n) {
        auto chunk = raw_product(spec, values.subspan(base, spec.n));
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
}

} // namespace

KeySchedule::KeySchedule(std::span<const long long> exponents)
{
    if (exponents.empty())
        throw Error(ErrorCode::InvalidArgument, "key must contain at least one exponent");
    if (exponents.size() > 255)
        throw Error(ErrorCode::InvalidArgument, "key may contain at most 255 exponents");
    levels_.reserve(exponents.size());
    for (auto x : exponents)
        levels_.push_back(validate_key_element(x));
}

KeySchedule::KeySchedule(std::initializer_list<long long> exponents)
    : KeySchedule(std::span<const long long>(exponents.begin(), exponents.size()))
{
}

KeySchedule KeySchedule::parse(std::string_view text)
{
    std::vector<long long> exponents;
    while (true) {
        const auto comma = text.find(',');
        auto field = text.substr(0, comma);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw Error(ErrorCode::InvalidArgument, "key element '" + std::string(field) + "' is not an integer");
        exponents.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return KeySchedule(exponents);
}

CipherEnvelope encrypt(const BitSeq& plaintext, const KeySchedule& key, std::size_t block_order,
                       std::vector<LevelTrace>* trace)
{
    check_block_order(block_order);

    CipherEnvelope env;
    env.block_order = block_order;
    BitSeq current = plaintext;
    for (const auto& level : key.levels()) {
        auto grouped = pad_and_group(current, level.x, block_order);
        if (grouped.values.size() > std::numeric_limits<std::uint32_t>::max())
            throw Error(ErrorCode::InvalidArgument, "input too long for 32-bit group indices");
        auto sentinels = detect_sentinels(grouped);
        const HadamardSpec spec{block_order, level.p};

        LevelTrace* t = nullptr;
        if (trace) {
            t = &trace->emplace_back();
            t->x = level.x;
            t->grouped = grouped.values;
            t->sentinels = sentinels;
            t->raw_product = chunked_raw_product(spec, grouped.values);
        }

        std::span<std::uint32_t> values(grouped.values);
        for (std::size_t base = 0; base < values.size(); base += block_order)
            transform_in_place(spec, values.subspan(base, block_order));

        env.levels.push_back({level.x, current.size(), std::move(sentinels)});
        current = ungroup(grouped.values, level.x);
        if (t) {
            t->transformed = grouped.values;
            t->output = current;
        }
    }
    env.payload = std::move(current);
    return env;
}

BitSeq decrypt(const CipherEnvelope& envelope, const KeySchedule& key, const DecryptOptions& options,
               DecryptReport* report, std::vector<LevelTrace>* trace)
{
    validate(envelope);
    if (key.size() != envelope.levels.size())
        throw Error(ErrorCode::KeyMismatch, "key has " + std::to_string(key.size()) + " levels, envelope has "
                                                + std::to_string(envelope.levels.size()));
    for (std::size_t i = 0; i < key.size(); ++i)
        if (key.levels()[i].x != envelope.levels[i].x)
            throw Error(ErrorCode::KeyMismatch, "key element " + std::to_string(i) + " does not match the envelope");

    DecryptReport local;
    const std::size_t n = envelope.block_order;
    BitSeq current = envelope.payload;
    for (std::size_t li = envelope.levels.size(); li-- > 0;) {
        const auto& record = envelope.levels[li];
        const auto& params = key.levels()[li];
        const HadamardSpec spec{n, params.p};

        auto values = group_exact(current, params.x);
        LevelTrace* t = nullptr;
        if (trace) {
            t = &trace->emplace_back();
            t->x = params.x;
            t->grouped = values;
            t->sentinels = record.sentinels;
            t->raw_product = chunked_raw_product(spec, values);
            t->inverse_multiplier = mod_inverse(n % params.p, params.p);
        }

        std::span<std::uint32_t> view(values);
        for (std::size_t base = 0; base < view.size(); base += n)
            inverse_in_place(spec, view.subspan(base, n));
        if (t)
            t->transformed = values;

        if (options.tolerant) {
            for (auto idx : record.sentinels.indices) {
                if (values[idx] != 0)
                    ++local.sentinel_conflicts;
                else
                    values[idx] = params.p;
            }
        } else {
            values = restore_sentinels(std::move(values), record.sentinels, params.x);
        }
        if (t)
            t->restored = values;

        auto bits = ungroup(values, params.x);
        if (options.tolerant) {
            const auto all = bits.bits();
            bool dirty = false;
            for (std::size_t i = record.orig_bit_len; i < all.size(); ++i)
                dirty |= all[i] != 0;
            local.padding_violations += dirty ? 1 : 0;
            bits.resize(record.orig_bit_len);
            current = std::move(bits);
        } else {
            current = truncate(bits, record.orig_bit_len);
        }
        if (t)
            t->output = current;
    }
    if (report)
        *report = local;
    return current;
}

BitSeq hash_digest(const BitSeq& data, const KeySchedule& key, std::size_t block_order, std::size_t digest_bits)
{
    if (digest_bits == 0)
        throw Error(ErrorCode::InvalidArgument, "digest length must be at least one bit");
    auto env = encrypt(data, key, block_order);
    BitSeq digest = std::move(env.payload);
    digest.resize(digest_bits);
    return digest;
}

} // namespace hct
