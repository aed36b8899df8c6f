#include "hct/hct.h"

#include "hct/analysis.hpp"
#include "hct/cipher.hpp"
#include "hct/error.hpp"
#include "hct/hadamard.hpp"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct hct_key {
    hct::KeySchedule schedule;
};

struct hct_bits {
    hct::BitSeq seq;
};

struct hct_envelope {
    hct::CipherEnvelope env;
};

namespace {

thread_local std::string g_last_error;

hct_status to_status(hct::ErrorCode code)
{
    return static_cast<hct_status>(static_cast<int>(code));
}

hct_status fail(hct_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

template <typename Fn>
hct_status guard(Fn&& fn)
{
    try {
        g_last_error.clear();
        return fn();
    } catch (const hct::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HCT_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(HCT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HCT_ERR_INTERNAL, "unknown failure");
    }
}

hct_status null_arg(const char* name)
{
    return fail(HCT_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

template <typename T>
hct_status copy_out(const T* src, std::size_t count, T* buf, std::size_t cap, std::size_t* needed)
{
    if (needed)
        *needed = count;
    if (cap < count || (!buf && count))
        return fail(HCT_ERR_BUFFER_TOO_SMALL,
                    "buffer holds " + std::to_string(cap) + " elements, " + std::to_string(count) + " required");
    if (count)
        std::memcpy(buf, src, count * sizeof(T));
    return HCT_OK;
}

hct_status copy_text(const std::string& s, char* buf, std::size_t cap, std::size_t* needed)
{
    return copy_out(s.c_str(), s.size() + 1, buf, cap, needed);
}

hct::HadamardSpec spec_for(std::uint32_t exponent, std::uint32_t order)
{
    const auto params = hct::validate_key_element(exponent);
    return hct::HadamardSpec::make(order, params.p);
}

} // namespace

extern "C" {

const char* hct_status_name(hct_status status)
{
    switch (status) {
    case HCT_OK: return "OK";
    case HCT_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case HCT_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case HCT_ERR_INTERNAL: return "InternalError";
    default:
        if (status >= HCT_ERR_INVALID_ARGUMENT && status <= HCT_ERR_KEY_MISMATCH)
            return hct::error_name(static_cast<hct::ErrorCode>(status));
        return "Unknown";
    }
}

const char* hct_last_error(void)
{
    return g_last_error.c_str();
}

const char* hct_version(void)
{
    return "1.0.0";
}

hct_status hct_key_parse(const char* text, hct_key** out)
{
    if (!text)
        return null_arg("text");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_key{hct::KeySchedule::parse(text)};
        return HCT_OK;
    });
}

hct_status hct_key_create(const int64_t* exponents, size_t count, hct_key** out)
{
    if (!exponents && count)
        return null_arg("exponents");
    if (!out)
        return null_arg("out");
    return guard([&] {
        std::vector<long long> xs(exponents, exponents + count);
        *out = new hct_key{hct::KeySchedule(xs)};
        return HCT_OK;
    });
}

size_t hct_key_length(const hct_key* key)
{
    return key ? key->schedule.size() : 0;
}

void hct_key_free(hct_key* key)
{
    delete key;
}

hct_status hct_bits_from_text(const char* text, hct_bits** out)
{
    if (!text)
        return null_arg("text");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_bits{hct::BitSeq::from_text(text)};
        return HCT_OK;
    });
}

hct_status hct_bits_from_bytes(const uint8_t* data, size_t len, hct_bits** out)
{
    if (!data && len)
        return null_arg("data");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_bits{hct::BitSeq::from_bytes(std::span<const std::uint8_t>(data, len))};
        return HCT_OK;
    });
}

size_t hct_bits_length(const hct_bits* bits)
{
    return bits ? bits->seq.size() : 0;
}

hct_status hct_bits_to_text(const hct_bits* bits, char* buf, size_t cap, size_t* needed)
{
    if (!bits)
        return null_arg("bits");
    return guard([&] { return copy_text(bits->seq.to_text(), buf, cap, needed); });
}

hct_status hct_bits_to_bytes(const hct_bits* bits, uint8_t* buf, size_t cap, size_t* needed)
{
    if (!bits)
        return null_arg("bits");
    return guard([&] {
        const auto bytes = bits->seq.to_bytes();
        return copy_out(bytes.data(), bytes.size(), buf, cap, needed);
    });
}

int hct_bits_equal(const hct_bits* a, const hct_bits* b)
{
    return a && b && a->seq == b->seq;
}

void hct_bits_free(hct_bits* bits)
{
    delete bits;
}

hct_status hct_encrypt(const hct_bits* plaintext, const hct_key* key, uint32_t block_order, hct_envelope** out)
{
    if (!plaintext)
        return null_arg("plaintext");
    if (!key)
        return null_arg("key");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_envelope{hct::encrypt(plaintext->seq, key->schedule, block_order)};
        return HCT_OK;
    });
}

hct_status hct_decrypt(const hct_envelope* envelope, const hct_key* key, hct_bits** out)
{
    if (!envelope)
        return null_arg("envelope");
    if (!key)
        return null_arg("key");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_bits{hct::decrypt(envelope->env, key->schedule)};
        return HCT_OK;
    });
}

hct_status hct_hash(const hct_bits* data, const hct_key* key, uint32_t block_order, size_t digest_bits,
                    hct_bits** out)
{
    if (!data)
        return null_arg("data");
    if (!key)
        return null_arg("key");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_bits{hct::hash_digest(data->seq, key->schedule, block_order, digest_bits)};
        return HCT_OK;
    });
}

hct_status hct_envelope_serialize(const hct_envelope* envelope, uint8_t* buf, size_t cap, size_t* needed)
{
    if (!envelope)
        return null_arg("envelope");
    return guard([&] {
        const auto bytes = hct::serialize(envelope->env);
        return copy_out(bytes.data(), bytes.size(), buf, cap, needed);
    });
}

hct_status hct_envelope_parse(const uint8_t* data, size_t len, hct_envelope** out)
{
    if (!data && len)
        return null_arg("data");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_envelope{hct::parse_envelope(std::span<const std::uint8_t>(data, len))};
        return HCT_OK;
    });
}

hct_status hct_envelope_payload(const hct_envelope* envelope, hct_bits** out)
{
    if (!envelope)
        return null_arg("envelope");
    if (!out)
        return null_arg("out");
    return guard([&] {
        *out = new hct_bits{envelope->env.payload};
        return HCT_OK;
    });
}

uint32_t hct_envelope_block_order(const hct_envelope* envelope)
{
    return envelope ? static_cast<uint32_t>(envelope->env.block_order) : 0;
}

size_t hct_envelope_level_count(const hct_envelope* envelope)
{
    return envelope ? envelope->env.levels.size() : 0;
}

hct_status hct_envelope_level(const hct_envelope* envelope, size_t index, hct_level_info* out)
{
    if (!envelope)
        return null_arg("envelope");
    if (!out)
        return null_arg("out");
    if (index >= envelope->env.levels.size())
        return fail(HCT_ERR_INVALID_ARGUMENT, "level index out of range");
    const auto& level = envelope->env.levels[index];
    out->exponent = level.x;
    out->modulus = (std::uint32_t{1} << level.x) - 1;
    out->orig_bit_len = level.orig_bit_len;
    out->sentinel_count = level.sentinels.indices.size();
    return HCT_OK;
}

void hct_envelope_free(hct_envelope* envelope)
{
    delete envelope;
}

hct_status hct_difference(const hct_bits* a, const hct_bits* b, hct_diff_summary* out)
{
    if (!a || !b)
        return null_arg("bits");
    if (!out)
        return null_arg("out");
    return guard([&] {
        const auto r = hct::difference_series(a->seq, b->seq);
        *out = {r.length_a, r.length_b, r.hamming, r.length_delta, 0, 0};
        return HCT_OK;
    });
}

hct_status hct_difference_csv(const hct_bits* a, const hct_bits* b, char* buf, size_t cap, size_t* needed)
{
    if (!a || !b)
        return null_arg("bits");
    return guard([&] {
        std::ostringstream os;
        hct::write_csv(os, a->seq, b->seq, hct::difference_series(a->seq, b->seq));
        return copy_text(os.str(), buf, cap, needed);
    });
}

hct_status hct_avalanche(const hct_bits* plaintext, const hct_key* key, uint32_t block_order, size_t flip_index,
                         hct_diff_summary* out, hct_bits** corrupted)
{
    if (!plaintext)
        return null_arg("plaintext");
    if (!key)
        return null_arg("key");
    if (!out)
        return null_arg("out");
    return guard([&] {
        auto res = hct::avalanche_experiment(plaintext->seq, key->schedule, block_order, flip_index);
        *out = {res.report.length_a,
                res.report.length_b,
                res.report.hamming,
                res.report.length_delta,
                res.decrypt_report.sentinel_conflicts,
                res.decrypt_report.padding_violations};
        if (corrupted)
            *corrupted = new hct_bits{std::move(res.corrupted)};
        return HCT_OK;
    });
}

hct_status hct_degenerate_check(const hct_bits* plaintext, int* is_degenerate, char* warning, size_t cap,
                                size_t* needed)
{
    if (!plaintext)
        return null_arg("plaintext");
    if (!is_degenerate)
        return null_arg("is_degenerate");
    return guard([&] {
        const auto w = hct::degenerate_check(plaintext->seq);
        *is_degenerate = w.has_value();
        if (!warning && !needed)
            return HCT_OK;
        return copy_text(w.value_or(""), warning, cap, needed);
    });
}

hct_status hct_transform(uint32_t exponent, uint32_t order, hct_kernel kernel, const uint32_t* in, uint32_t* out)
{
    if (!in)
        return null_arg("in");
    if (!out)
        return null_arg("out");
    return guard([&] {
        const auto spec = spec_for(exponent, order);
        std::span<const std::uint32_t> input(in, order);
        hct::ResidueVector result;
        switch (kernel) {
        case HCT_KERNEL_NAIVE: result = hct::apply_naive(spec, input); break;
        case HCT_KERNEL_FAST: result = hct::apply_fast(spec, input); break;
        case HCT_KERNEL_INVERSE: result = hct::apply_inverse(spec, input); break;
        default: return fail(HCT_ERR_INVALID_ARGUMENT, "unknown kernel");
        }
        std::memcpy(out, result.data(), result.size() * sizeof(std::uint32_t));
        return HCT_OK;
    });
}

hct_status hct_matrix_text(uint32_t exponent, uint32_t order, char* buf, size_t cap, size_t* needed)
{
    return guard([&] { return copy_text(hct::matrix_text(spec_for(exponent, order)), buf, cap, needed); });
}

hct_status hct_bench(uint32_t exponent, uint32_t order, size_t iterations, uint64_t seed, hct_bench_result* out)
{
    if (!out)
        return null_arg("out");
    return guard([&] {
        const auto r = hct::bench_kernels(spec_for(exponent, order), iterations, seed);
        *out = {r.iterations, r.naive_ns, r.fast_ns};
        return HCT_OK;
    });
}

} // extern "C"
