// NEON variants of the word kernels (AArch64 only, where NEON is baseline).

#include "pforest/bitops.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace pforest::bitops::detail {

void xor_words_neon(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t a = vld1q_u64(dst + i);
        uint64x2_t b = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(a, b));
    }
    for (; i < n; ++i) {
        dst[i] ^= src[i];
    }
}

std::size_t popcount_words_neon(const uint64_t* words, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t bytes = vreinterpretq_u8_u64(vld1q_u64(words + i));
        total += vaddlvq_u8(vcntq_u8(bytes));
    }
    for (; i < n; ++i) {
        total += static_cast<std::size_t>(std::popcount(words[i]));
    }
    return total;
}

bool any_word_neon(const uint64_t* words, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vorrq_u64(acc, vld1q_u64(words + i));
    }
    if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) {
        return true;
    }
    for (; i < n; ++i) {
        if (words[i] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace pforest::bitops::detail

#endif  // AArch64
