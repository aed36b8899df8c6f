// hct: command-line front end for the chained Hadamard transform codec.
// Talks to the library exclusively through the C interface in hct/hct.h.

#include "hct/hct.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kIoErrorExit = 20;

struct KeyDeleter {
    void operator()(hct_key* k) const { hct_key_free(k); }
};
struct BitsDeleter {
    void operator()(hct_bits* b) const { hct_bits_free(b); }
};
struct EnvelopeDeleter {
    void operator()(hct_envelope* e) const { hct_envelope_free(e); }
};
using KeyPtr = std::unique_ptr<hct_key, KeyDeleter>;
using BitsPtr = std::unique_ptr<hct_bits, BitsDeleter>;
using EnvelopePtr = std::unique_ptr<hct_envelope, EnvelopeDeleter>;

// Carries a failed status out of a command body.
struct Failure {
    int exit_code;
    std::string message;
};

void check(hct_status status, const char* what)
{
    if (status != HCT_OK)
        throw Failure{static_cast<int>(status),
                      std::string(hct_status_name(status)) + ": " + what + ": " + hct_last_error()};
}

[[noreturn]] void io_failure(const std::string& message)
{
    throw Failure{kIoErrorExit, "IoError: " + message};
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        io_failure("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const void* data, std::size_t size)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        io_failure("cannot open '" + path + "' for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out)
        io_failure("failed writing '" + path + "'");
}

std::string bits_text(const hct_bits* bits)
{
    std::size_t needed = 0;
    hct_bits_to_text(bits, nullptr, 0, &needed);
    std::string s(needed, '\0');
    check(hct_bits_to_text(bits, s.data(), s.size(), &needed), "formatting bits");
    s.pop_back();
    return s;
}

std::vector<std::uint8_t> bits_bytes(const hct_bits* bits)
{
    std::size_t needed = 0;
    hct_bits_to_bytes(bits, nullptr, 0, &needed);
    std::vector<std::uint8_t> out(needed);
    check(hct_bits_to_bytes(bits, out.data(), out.size(), &needed), "packing bits");
    return out;
}

std::string bits_hex(const hct_bits* bits)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    for (auto b : bits_bytes(bits)) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 15]);
    }
    return hex;
}

struct InputOptions {
    std::string text;
    std::string in_path;
    std::string key;
    std::uint32_t block_size = 8;
};

void add_input_options(CLI::App* cmd, InputOptions& opts)
{
    auto* text = cmd->add_option("--text", opts.text, "Input as a string of '0'/'1' characters");
    auto* in = cmd->add_option("--in", opts.in_path, "Input file (bytes, read MSB-first)");
    text->excludes(in);
    in->excludes(text);
    cmd->add_option("--key", opts.key, "Comma-separated key exponents, e.g. 3,5")->required();
    cmd->add_option("--block-size", opts.block_size, "Transform order n (8, 16, 32, 64, 128)")
        ->default_val(8);
}

BitsPtr load_input(const InputOptions& opts, const CLI::App* cmd)
{
    hct_bits* raw = nullptr;
    if (cmd->count("--in")) {
        const auto bytes = read_file(opts.in_path);
        check(hct_bits_from_bytes(bytes.data(), bytes.size(), &raw), "reading input");
    } else if (cmd->count("--text")) {
        check(hct_bits_from_text(opts.text.c_str(), &raw), "parsing --text");
    } else {
        throw Failure{static_cast<int>(HCT_ERR_INVALID_ARGUMENT),
                      "InvalidArgument: one of --text or --in is required"};
    }
    return BitsPtr(raw);
}

KeyPtr load_key(const std::string& text)
{
    hct_key* raw = nullptr;
    check(hct_key_parse(text.c_str(), &raw), "parsing --key");
    return KeyPtr(raw);
}

void warn_degenerate(const hct_bits* bits)
{
    int degenerate = 0;
    std::size_t needed = 0;
    check(hct_degenerate_check(bits, &degenerate, nullptr, 0, nullptr), "checking input");
    if (!degenerate)
        return;
    hct_degenerate_check(bits, &degenerate, nullptr, 0, &needed);
    std::string warning(needed, '\0');
    check(hct_degenerate_check(bits, &degenerate, warning.data(), warning.size(), &needed), "checking input");
    warning.pop_back();
    std::cerr << "hct: warning: " << warning << '\n';
}

void write_envelope(const hct_envelope* env, const std::string& path)
{
    std::size_t needed = 0;
    hct_envelope_serialize(env, nullptr, 0, &needed);
    std::vector<std::uint8_t> bytes(needed);
    check(hct_envelope_serialize(env, bytes.data(), bytes.size(), &needed), "serializing envelope");
    write_file(path, bytes.data(), bytes.size());
}

const std::vector<std::uint32_t> kSupportedExponents = {2, 3, 5, 7, 13, 17, 19, 31};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chained Hadamard transform encryption, decryption and hashing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hct_version()));

    InputOptions enc_opts;
    std::string enc_out;
    auto* enc = app.add_subcommand("encrypt", "Encrypt into an HCT1 envelope");
    add_input_options(enc, enc_opts);
    enc->add_option("--out", enc_out, "Envelope output path");

    std::string dec_in, dec_key, dec_out;
    auto* dec = app.add_subcommand("decrypt", "Decrypt an HCT1 envelope");
    dec->add_option("--in", dec_in, "Envelope path")->required();
    dec->add_option("--key", dec_key, "Comma-separated key exponents")->required();
    dec->add_option("--out", dec_out, "Write recovered bytes here instead of printing bits");

    InputOptions hash_opts;
    std::size_t digest_bits = 256;
    auto* hash = app.add_subcommand("hash", "Digest: leading bits of the zero-padded encryption");
    add_input_options(hash, hash_opts);
    hash->add_option("--digest-bits", digest_bits, "Digest length in bits")->default_val(256);

    InputOptions an_opts;
    std::size_t flip = 0;
    std::string csv_path;
    auto* analyze = app.add_subcommand(
        "analyze", "Compare plaintext with ciphertext, or with a corrupted decryption when --flip is given");
    add_input_options(analyze, an_opts);
    auto* flip_opt = analyze->add_option("--flip", flip, "Payload bit to flip before decrypting");
    analyze->add_option("--emit-csv", csv_path, "CSV output path (default: stdout)");

    std::uint32_t mat_exp = 3, mat_order = 8;
    auto* matrix = app.add_subcommand("matrix", "Print the mod (2^x - 1) Hadamard matrix");
    matrix->add_option("--exponent", mat_exp, "Exponent x")->required();
    matrix->add_option("--order", mat_order, "Matrix order")->default_val(8);

    std::uint32_t bench_exp = 0, bench_order = 128;
    std::size_t bench_iters = 2000;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Time the naive and fast transform kernels");
    auto* bench_exp_opt = bench->add_option("--exponent", bench_exp, "Exponent x (default: all supported)");
    bench->add_option("--order", bench_order, "Transform order")->default_val(128);
    bench->add_option("--iterations", bench_iters, "Vectors per kernel")->default_val(2000);
    bench->add_option("--seed", bench_seed, "Random seed")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) {
            auto key = load_key(enc_opts.key);
            auto plain = load_input(enc_opts, enc);
            if (enc->count("--in") && enc_out.empty())
                throw Failure{static_cast<int>(HCT_ERR_INVALID_ARGUMENT),
                              "InvalidArgument: --out is required when encrypting a file"};
            warn_degenerate(plain.get());
            hct_envelope* raw = nullptr;
            check(hct_encrypt(plain.get(), key.get(), enc_opts.block_size, &raw), "encrypting");
            EnvelopePtr env(raw);
            if (!enc_out.empty())
                write_envelope(env.get(), enc_out);
            if (enc->count("--text")) {
                hct_bits* payload = nullptr;
                check(hct_envelope_payload(env.get(), &payload), "reading payload");
                std::cout << bits_text(BitsPtr(payload).get()) << '\n';
            }
        } else if (dec->parsed()) {
            auto key = load_key(dec_key);
            const auto bytes = read_file(dec_in);
            hct_envelope* raw_env = nullptr;
            check(hct_envelope_parse(bytes.data(), bytes.size(), &raw_env), "parsing envelope");
            EnvelopePtr env(raw_env);
            hct_bits* raw_plain = nullptr;
            check(hct_decrypt(env.get(), key.get(), &raw_plain), "decrypting");
            BitsPtr plain(raw_plain);
            if (!dec_out.empty()) {
                const auto out = bits_bytes(plain.get());
                write_file(dec_out, out.data(), out.size());
            } else {
                std::cout << bits_text(plain.get()) << '\n';
            }
        } else if (hash->parsed()) {
            auto key = load_key(hash_opts.key);
            auto data = load_input(hash_opts, hash);
            hct_bits* raw = nullptr;
            check(hct_hash(data.get(), key.get(), hash_opts.block_size, digest_bits, &raw), "hashing");
            BitsPtr digest(raw);
            std::cout << bits_text(digest.get()) << '\n' << bits_hex(digest.get()) << '\n';
        } else if (analyze->parsed()) {
            auto key = load_key(an_opts.key);
            auto plain = load_input(an_opts, analyze);
            warn_degenerate(plain.get());

            BitsPtr other;
            if (flip_opt->count()) {
                hct_diff_summary summary{};
                hct_bits* corrupted = nullptr;
                check(hct_avalanche(plain.get(), key.get(), an_opts.block_size, flip, &summary, &corrupted),
                      "running avalanche experiment");
                other.reset(corrupted);
                if (summary.sentinel_conflicts || summary.padding_violations)
                    std::cerr << "hct: note: corrupted decryption hit " << summary.sentinel_conflicts
                              << " sentinel conflict(s) and " << summary.padding_violations
                              << " nonzero padding tail(s)\n";
            } else {
                hct_envelope* raw_env = nullptr;
                check(hct_encrypt(plain.get(), key.get(), an_opts.block_size, &raw_env), "encrypting");
                EnvelopePtr env(raw_env);
                hct_bits* payload = nullptr;
                check(hct_envelope_payload(env.get(), &payload), "reading payload");
                other.reset(payload);
            }

            std::size_t needed = 0;
            hct_difference_csv(plain.get(), other.get(), nullptr, 0, &needed);
            std::string csv(needed, '\0');
            check(hct_difference_csv(plain.get(), other.get(), csv.data(), csv.size(), &needed), "building CSV");
            csv.pop_back();
            if (csv_path.empty()) {
                std::cout << csv;
            } else {
                write_file(csv_path, csv.data(), csv.size());
                std::cout << csv.substr(csv.rfind('#'));
            }
        } else if (matrix->parsed()) {
            std::size_t needed = 0;
            hct_matrix_text(mat_exp, mat_order, nullptr, 0, &needed);
            std::string text(needed, '\0');
            check(hct_matrix_text(mat_exp, mat_order, text.data(), text.size(), &needed), "building matrix");
            text.pop_back();
            std::cout << text;
        } else if (bench->parsed()) {
            const auto exponents = bench_exp_opt->count() ? std::vector<std::uint32_t>{bench_exp} : kSupportedExponents;
            for (auto x : exponents) {
                hct_bench_result r{};
                check(hct_bench(x, bench_order, bench_iters, bench_seed, &r), "benchmarking");
                std::printf("order=%u exponent=%u modulus=%u iterations=%zu naive_ns=%.1f fast_ns=%.1f speedup=%.2f\n",
                            bench_order, x, (1u << x) - 1, r.iterations, r.naive_ns, r.fast_ns,
                            r.fast_ns > 0 ? r.naive_ns / r.fast_ns : 0.0);
            }
        }
    } catch (const Failure& f) {
        std::cerr << "hct: error: " << f.message << '\n';
        return f.exit_code;
    }
    return 0;
}
