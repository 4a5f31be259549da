#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Word-level kernels behind BitVector. The scalar implementations are the
// reference; an AVX2 variant (x86-64) and a NEON variant (AArch64) are picked
// at startup when the CPU supports them. set_backend() switches the active
// variant at runtime, which is how the equivalence tests drive every
// supported backend through the same inputs.
namespace pforest::bitops {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
std::vector<Backend> supported_backends();
Backend active_backend();

// Returns false (and leaves the active backend unchanged) if `b` is not
// supported on this machine.
bool set_backend(Backend b);

// dst[i] ^= src[i] for i in [0, n)
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);
std::size_t popcount_words(const uint64_t* words, std::size_t n);
bool any_word(const uint64_t* words, std::size_t n);

namespace detail {

void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n);
std::size_t popcount_words_scalar(const uint64_t* words, std::size_t n);
bool any_word_scalar(const uint64_t* words, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void xor_words_avx2(uint64_t* dst, const uint64_t* src, std::size_t n);
std::size_t popcount_words_avx2(const uint64_t* words, std::size_t n);
bool any_word_avx2(const uint64_t* words, std::size_t n);
#endif

#if defined(__aarch64__)
void xor_words_neon(uint64_t* dst, const uint64_t* src, std::size_t n);
std::size_t popcount_words_neon(const uint64_t* words, std::size_t n);
bool any_word_neon(const uint64_t* words, std::size_t n);
#endif

}  // namespace detail

}  // namespace pforest::bitops
