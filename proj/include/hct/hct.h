/*
 * C interface to the chained Hadamard transform codec.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an hct_status; on
 * failure hct_last_error() describes the problem for the calling thread.
 *
 * Buffer-returning calls follow one pattern: pass buf == NULL (or a too-small
 * capacity) to learn the required size through *needed, which is always set.
 * Text outputs are NUL-terminated and *needed counts the terminator.
 */
#ifndef HCT_H
#define HCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HCT_BUILDING_LIBRARY)
#    define HCT_API __declspec(dllexport)
#  else
#    define HCT_API __declspec(dllimport)
#  endif
#else
#  define HCT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hct_status {
    HCT_OK = 0,
    HCT_ERR_INVALID_ARGUMENT = 1,
    HCT_ERR_INVALID_KEY_ELEMENT = 2,
    HCT_ERR_NO_INVERSE = 3,
    HCT_ERR_DIMENSION_MISMATCH = 4,
    HCT_ERR_UNSUPPORTED_BLOCK_ORDER = 5,
    HCT_ERR_SENTINEL_CONFLICT = 6,
    HCT_ERR_VALUE_OVERFLOW = 7,
    HCT_ERR_NON_ZERO_PADDING = 8,
    HCT_ERR_LENGTH_UNDERFLOW = 9,
    HCT_ERR_MALFORMED_ENVELOPE = 10,
    HCT_ERR_KEY_MISMATCH = 11,
    HCT_ERR_BUFFER_TOO_SMALL = 12,
    HCT_ERR_OUT_OF_MEMORY = 13,
    HCT_ERR_INTERNAL = 14
} hct_status;

typedef enum hct_kernel {
    HCT_KERNEL_NAIVE = 0,
    HCT_KERNEL_FAST = 1,
    HCT_KERNEL_INVERSE = 2
} hct_kernel;

typedef struct hct_key hct_key;
typedef struct hct_bits hct_bits;
typedef struct hct_envelope hct_envelope;

typedef struct hct_level_info {
    uint32_t exponent;
    uint32_t modulus;
    uint64_t orig_bit_len;
    size_t sentinel_count;
} hct_level_info;

typedef struct hct_diff_summary {
    size_t length_a;
    size_t length_b;
    size_t hamming;
    size_t length_delta;
    size_t sentinel_conflicts;
    size_t padding_violations;
} hct_diff_summary;

typedef struct hct_bench_result {
    size_t iterations;
    double naive_ns;
    double fast_ns;
} hct_bench_result;

/* Diagnostics */
HCT_API const char* hct_status_name(hct_status status);
HCT_API const char* hct_last_error(void);
HCT_API const char* hct_version(void);

/* Keys */
HCT_API hct_status hct_key_parse(const char* text, hct_key** out);
HCT_API hct_status hct_key_create(const int64_t* exponents, size_t count, hct_key** out);
HCT_API size_t hct_key_length(const hct_key* key);
HCT_API void hct_key_free(hct_key* key);

/* Bit sequences */
HCT_API hct_status hct_bits_from_text(const char* text, hct_bits** out);
HCT_API hct_status hct_bits_from_bytes(const uint8_t* data, size_t len, hct_bits** out);
HCT_API size_t hct_bits_length(const hct_bits* bits);
HCT_API hct_status hct_bits_to_text(const hct_bits* bits, char* buf, size_t cap, size_t* needed);
HCT_API hct_status hct_bits_to_bytes(const hct_bits* bits, uint8_t* buf, size_t cap, size_t* needed);
HCT_API int hct_bits_equal(const hct_bits* a, const hct_bits* b);
HCT_API void hct_bits_free(hct_bits* bits);

/* Cipher */
HCT_API hct_status hct_encrypt(const hct_bits* plaintext, const hct_key* key, uint32_t block_order,
                               hct_envelope** out);
HCT_API hct_status hct_decrypt(const hct_envelope* envelope, const hct_key* key, hct_bits** out);
HCT_API hct_status hct_hash(const hct_bits* data, const hct_key* key, uint32_t block_order, size_t digest_bits,
                            hct_bits** out);

/* Envelope (HCT1 binary format) */
HCT_API hct_status hct_envelope_serialize(const hct_envelope* envelope, uint8_t* buf, size_t cap, size_t* needed);
HCT_API hct_status hct_envelope_parse(const uint8_t* data, size_t len, hct_envelope** out);
HCT_API hct_status hct_envelope_payload(const hct_envelope* envelope, hct_bits** out);
HCT_API uint32_t hct_envelope_block_order(const hct_envelope* envelope);
HCT_API size_t hct_envelope_level_count(const hct_envelope* envelope);
HCT_API hct_status hct_envelope_level(const hct_envelope* envelope, size_t index, hct_level_info* out);
HCT_API void hct_envelope_free(hct_envelope* envelope);

/* Analysis */
HCT_API hct_status hct_difference(const hct_bits* a, const hct_bits* b, hct_diff_summary* out);
/* CSV rows "position,bit_a,bit_b,diff" plus a '#' summary line. */
HCT_API hct_status hct_difference_csv(const hct_bits* a, const hct_bits* b, char* buf, size_t cap, size_t* needed);
/* Encrypt, flip payload bit flip_index, decrypt tolerantly. *corrupted may be NULL. */
HCT_API hct_status hct_avalanche(const hct_bits* plaintext, const hct_key* key, uint32_t block_order,
                                 size_t flip_index, hct_diff_summary* out, hct_bits** corrupted);
/* *is_degenerate receives 1 for all-zero or all-one input. warning may be NULL. */
HCT_API hct_status hct_degenerate_check(const hct_bits* plaintext, int* is_degenerate, char* warning, size_t cap,
                                        size_t* needed);

/* Hadamard transform over Z_(2^exponent - 1) */
HCT_API hct_status hct_transform(uint32_t exponent, uint32_t order, hct_kernel kernel, const uint32_t* in,
                                 uint32_t* out);
HCT_API hct_status hct_matrix_text(uint32_t exponent, uint32_t order, char* buf, size_t cap, size_t* needed);
HCT_API hct_status hct_bench(uint32_t exponent, uint32_t order, size_t iterations, uint64_t seed,
                             hct_bench_result* out);

#ifdef __cplusplus
}
#endif

#endif /* HCT_H */
