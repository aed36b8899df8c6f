#include "hct/hct.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string text_of(const hct_bits* bits)
{
    size_t needed = 0;
    CHECK(hct_bits_to_text(bits, nullptr, 0, &needed) == HCT_ERR_BUFFER_TOO_SMALL);
    std::string s(needed, '\0');
    REQUIRE(hct_bits_to_text(bits, s.data(), s.size(), &needed) == HCT_OK);
    s.pop_back();
    return s;
}

} // namespace

TEST_CASE("status names cover every code")
{
    CHECK(std::string(hct_status_name(HCT_OK)) == "OK");
    CHECK(std::string(hct_status_name(HCT_ERR_INVALID_KEY_ELEMENT)) == "InvalidKeyElement");
    CHECK(std::string(hct_status_name(HCT_ERR_MALFORMED_ENVELOPE)) == "MalformedEnvelope");
    CHECK(std::string(hct_status_name(HCT_ERR_KEY_MISMATCH)) == "KeyMismatch");
    CHECK(std::string(hct_status_name(HCT_ERR_BUFFER_TOO_SMALL)) == "BufferTooSmall");
    CHECK(std::string(hct_status_name(static_cast<hct_status>(99))) == "Unknown");
    CHECK(std::string(hct_version()).size() > 0);
}

TEST_CASE("encrypt, serialize, parse and decrypt through the C interface")
{
    hct_key* key = nullptr;
    REQUIRE(hct_key_parse("3,5", &key) == HCT_OK);
    CHECK(hct_key_length(key) == 2);

    hct_bits* plain = nullptr;
    REQUIRE(hct_bits_from_text("110010011101111110000011", &plain) == HCT_OK);
    CHECK(hct_bits_length(plain) == 24);

    hct_envelope* env = nullptr;
    REQUIRE(hct_encrypt(plain, key, 8, &env) == HCT_OK);
    CHECK(hct_envelope_block_order(env) == 8);
    REQUIRE(hct_envelope_level_count(env) == 2);

    hct_level_info info{};
    REQUIRE(hct_envelope_level(env, 0, &info) == HCT_OK);
    CHECK(info.exponent == 3);
    CHECK(info.modulus == 7);
    CHECK(info.orig_bit_len == 24);
    CHECK(info.sentinel_count == 1);
    CHECK(hct_envelope_level(env, 2, &info) == HCT_ERR_INVALID_ARGUMENT);

    hct_bits* payload = nullptr;
    REQUIRE(hct_envelope_payload(env, &payload) == HCT_OK);
    CHECK(text_of(payload) == "0011010100011110100011101011000011100000");

    size_t needed = 0;
    CHECK(hct_envelope_serialize(env, nullptr, 0, &needed) == HCT_ERR_BUFFER_TOO_SMALL);
    std::vector<uint8_t> bytes(needed);
    REQUIRE(hct_envelope_serialize(env, bytes.data(), bytes.size(), &needed) == HCT_OK);
    CHECK(bytes.size() == 50);

    hct_envelope* parsed = nullptr;
    REQUIRE(hct_envelope_parse(bytes.data(), bytes.size(), &parsed) == HCT_OK);
    hct_bits* recovered = nullptr;
    REQUIRE(hct_decrypt(parsed, key, &recovered) == HCT_OK);
    CHECK(hct_bits_equal(recovered, plain));

    bytes[0] = 'Z';
    hct_envelope* bad = nullptr;
    CHECK(hct_envelope_parse(bytes.data(), bytes.size(), &bad) == HCT_ERR_MALFORMED_ENVELOPE);
    CHECK(bad == nullptr);
    CHECK(std::string(hct_last_error()) == "bad magic");

    hct_bits_free(recovered);
    hct_envelope_free(parsed);
    hct_bits_free(payload);
    hct_envelope_free(env);
    hct_bits_free(plain);
    hct_key_free(key);
}

TEST_CASE("errors map to distinct status codes")
{
    hct_key* key = nullptr;
    CHECK(hct_key_parse("3,11", &key) == HCT_ERR_INVALID_KEY_ELEMENT);
    CHECK(std::string(hct_last_error()).find("2047") != std::string::npos);
    CHECK(hct_key_parse(nullptr, &key) == HCT_ERR_INVALID_ARGUMENT);

    const int64_t xs[] = {3};
    REQUIRE(hct_key_create(xs, 1, &key) == HCT_OK);

    hct_bits* bits = nullptr;
    CHECK(hct_bits_from_text("10x", &bits) == HCT_ERR_INVALID_ARGUMENT);
    REQUIRE(hct_bits_from_text("1011", &bits) == HCT_OK);

    hct_envelope* env = nullptr;
    CHECK(hct_encrypt(bits, key, 12, &env) == HCT_ERR_UNSUPPORTED_BLOCK_ORDER);
    hct_bits* digest = nullptr;
    CHECK(hct_hash(bits, key, 8, 0, &digest) == HCT_ERR_INVALID_ARGUMENT);

    hct_key* other = nullptr;
    REQUIRE(hct_key_parse("5", &other) == HCT_OK);
    REQUIRE(hct_encrypt(bits, key, 8, &env) == HCT_OK);
    hct_bits* out = nullptr;
    CHECK(hct_decrypt(env, other, &out) == HCT_ERR_KEY_MISMATCH);

    uint32_t in[8] = {0}, res[8];
    CHECK(hct_transform(4, 8, HCT_KERNEL_FAST, in, res) == HCT_ERR_INVALID_KEY_ELEMENT);
    CHECK(hct_transform(3, 6, HCT_KERNEL_FAST, in, res) == HCT_ERR_UNSUPPORTED_BLOCK_ORDER);
    in[0] = 9;
    CHECK(hct_transform(3, 8, HCT_KERNEL_NAIVE, in, res) == HCT_ERR_VALUE_OVERFLOW);

    hct_envelope_free(env);
    hct_key_free(other);
    hct_bits_free(bits);
    hct_key_free(key);
}

TEST_CASE("transform kernels")
{
    const uint32_t v[8] = {6, 2, 3, 5, 7, 6, 0, 3};
    uint32_t naive[8], fast[8], back[8];
    REQUIRE(hct_transform(3, 8, HCT_KERNEL_NAIVE, v, naive) == HCT_OK);
    REQUIRE(hct_transform(3, 8, HCT_KERNEL_FAST, v, fast) == HCT_OK);
    REQUIRE(hct_transform(3, 8, HCT_KERNEL_INVERSE, fast, back) == HCT_OK);
    const std::vector<uint32_t> expected{4, 0, 3, 3, 0, 4, 4, 2};
    CHECK(std::vector<uint32_t>(naive, naive + 8) == expected);
    CHECK(std::vector<uint32_t>(fast, fast + 8) == expected);
    CHECK(std::vector<uint32_t>(back, back + 8) == std::vector<uint32_t>{6, 2, 3, 5, 0, 6, 0, 3});

    size_t needed = 0;
    REQUIRE(hct_matrix_text(5, 8, nullptr, 0, &needed) == HCT_ERR_BUFFER_TOO_SMALL);
    std::string m(needed, '\0');
    REQUIRE(hct_matrix_text(5, 8, m.data(), m.size(), &needed) == HCT_OK);
    CHECK(m.rfind("1 30 30 1 30 1 1 30\n") != std::string::npos);

    hct_bench_result r{};
    REQUIRE(hct_bench(5, 64, 20, 1, &r) == HCT_OK);
    CHECK(r.iterations == 20);
    CHECK(hct_bench(5, 64, 0, 1, &r) == HCT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hash, analysis and byte I/O")
{
    hct_key* key = nullptr;
    REQUIRE(hct_key_parse("3,5", &key) == HCT_OK);
    const uint8_t raw[] = {0xC9, 0xDF, 0x83};
    hct_bits* plain = nullptr;
    REQUIRE(hct_bits_from_bytes(raw, sizeof raw, &plain) == HCT_OK);
    CHECK(text_of(plain) == "110010011101111110000011");

    size_t needed = 0;
    uint8_t packed[3];
    REQUIRE(hct_bits_to_bytes(plain, packed, sizeof packed, &needed) == HCT_OK);
    CHECK(needed == 3);
    CHECK(packed[2] == 0x83);

    hct_bits* digest = nullptr;
    REQUIRE(hct_hash(plain, key, 8, 16, &digest) == HCT_OK);
    CHECK(text_of(digest) == "0011010100011110");

    hct_diff_summary s{};
    hct_bits* corrupted = nullptr;
    REQUIRE(hct_avalanche(plain, key, 8, 0, &s, &corrupted) == HCT_OK);
    CHECK(s.hamming >= 1);
    CHECK(s.length_a == 24);
    CHECK(hct_bits_length(corrupted) == 24);
    CHECK(hct_avalanche(plain, key, 8, 40, &s, nullptr) == HCT_ERR_INVALID_ARGUMENT);

    REQUIRE(hct_difference(plain, digest, &s) == HCT_OK);
    CHECK(s.length_delta == 8);

    REQUIRE(hct_difference_csv(plain, plain, nullptr, 0, &needed) == HCT_ERR_BUFFER_TOO_SMALL);
    std::string csv(needed, '\0');
    REQUIRE(hct_difference_csv(plain, plain, csv.data(), csv.size(), &needed) == HCT_OK);
    CHECK(csv.rfind("position,bit_a,bit_b,diff\n", 0) == 0);

    int degenerate = -1;
    REQUIRE(hct_degenerate_check(plain, &degenerate, nullptr, 0, nullptr) == HCT_OK);
    CHECK(degenerate == 0);
    hct_bits* ones = nullptr;
    REQUIRE(hct_bits_from_text("111111", &ones) == HCT_OK);
    char warning[256];
    REQUIRE(hct_degenerate_check(ones, &degenerate, warning, sizeof warning, &needed) == HCT_OK);
    CHECK(degenerate == 1);
    CHECK(std::string(warning).find("all ones") != std::string::npos);

    hct_bits_free(ones);
    hct_bits_free(corrupted);
    hct_bits_free(digest);
    hct_bits_free(plain);
    hct_key_free(key);
}
