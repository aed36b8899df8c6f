#include "hct/cipher.hpp"
#include "hct/error.hpp"
#include "hct/hadamard.hpp"

#include <algorithm>
#include <array>

namespace hct {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'H', 'C', 'T', '1'};

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedEnvelope, what);
}

template <typename T>
void put_be(std::vector<std::uint8_t>& out, T value, std::size_t width)
{
    for (std::size_t i = width; i-- > 0;)
        out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t be(std::size_t width, const char* field)
    {
        if (remaining() < width)
            malformed(std::string("truncated envelope while reading ") + field);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < width; ++i)
            v = (v << 8) | bytes_[pos_++];
        return v;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

void validate(const CipherEnvelope& env)
{
    if (env.version != kEnvelopeVersion)
        malformed("unsupported envelope version " + std::to_string(env.version));
    if (!is_supported_order(env.block_order))
        malformed("block order " + std::to_string(env.block_order) + " is not a supported power of 2");
    if (env.levels.empty() || env.levels.size() > 255)
        malformed("envelope must carry between 1 and 255 levels");

    const std::size_t n = env.block_order;
    std::uint64_t expected_input = env.levels.front().orig_bit_len;
    for (std::size_t i = 0; i < env.levels.size(); ++i) {
        const auto& level = env.levels[i];
        try {
            validate_key_element(level.x);
        } catch (const Error& e) {
            malformed("level " + std::to_string(i) + ": " + e.what());
        }
        if (level.orig_bit_len != expected_input)
            malformed("level " + std::to_string(i) + " length does not follow from the previous level");
        const std::uint64_t groups = padded_group_count(level.orig_bit_len, level.x, n);
        std::int64_t prev = -1;
        for (auto idx : level.sentinels.indices) {
            if (static_cast<std::int64_t>(idx) <= prev)
                malformed("level " + std::to_string(i) + " sentinel indices are not strictly ascending");
            if (idx >= groups)
                malformed("level " + std::to_string(i) + " sentinel index " + std::to_string(idx) + " is out of range");
            prev = idx;
        }
        expected_input = groups * level.x;
    }
    if (env.payload.size() != expected_input)
        malformed("payload length " + std::to_string(env.payload.size()) + " does not match the level records");
}

std::vector<std::uint8_t> serialize(const CipherEnvelope& env)
{
    validate(env);
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.push_back(env.version);
    out.push_back(static_cast<std::uint8_t>(env.block_order));
    out.push_back(static_cast<std::uint8_t>(env.levels.size()));
    for (const auto& level : env.levels) {
        out.push_back(static_cast<std::uint8_t>(level.x));
        put_be(out, level.orig_bit_len, 8);
        put_be(out, level.sentinels.indices.size(), 4);
        for (auto idx : level.sentinels.indices)
            put_be(out, idx, 4);
    }
    put_be(out, env.payload.size(), 8);
    const auto packed = env.payload.to_bytes();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes)
{
    Reader in(bytes);
    for (auto m : kMagic)
        if (in.be(1, "magic") != m)
            malformed("bad magic");

    CipherEnvelope env;
    env.version = static_cast<std::uint8_t>(in.be(1, "version"));
    if (env.version != kEnvelopeVersion)
        malformed("unsupported envelope version " + std::to_string(env.version));
    env.block_order = in.be(1, "block order");
    if (!is_supported_order(env.block_order))
        malformed("block order " + std::to_string(env.block_order) + " is not a supported power of 2");

    const auto level_count = in.be(1, "level count");
    for (std::uint64_t i = 0; i < level_count; ++i) {
        LevelRecord level;
        level.x = static_cast<unsigned>(in.be(1, "level exponent"));
        level.orig_bit_len = in.be(8, "level length");
        const auto count = in.be(4, "sentinel count");
        if (count * 4 > in.remaining())
            malformed("truncated envelope while reading sentinel indices");
        level.sentinels.indices.reserve(count);
        for (std::uint64_t k = 0; k < count; ++k)
            level.sentinels.indices.push_back(static_cast<std::uint32_t>(in.be(4, "sentinel index")));
        env.levels.push_back(std::move(level));
    }

    const auto bit_len = in.be(8, "payload length");
    const auto rest = in.rest();
    if (bit_len > rest.size() * 8 || (bit_len + 7) / 8 != rest.size())
        malformed("payload length " + std::to_string(bit_len) + " is inconsistent with " + std::to_string(rest.size())
                  + " payload bytes");
    if (bit_len % 8 != 0 && (rest.back() & (0xFFu >> (bit_len % 8))) != 0)
        malformed("payload fill bits are not zero");
    env.payload = BitSeq::from_bytes(rest, bit_len);

    validate(env);
    return env;
}

} // namespace hct
