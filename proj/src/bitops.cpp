#include "pforest/bitops.hpp"

#include <bit>

namespace pforest::bitops {

namespace detail {

void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] ^= src[i];
    }
}

std::size_t popcount_words_scalar(const uint64_t* words, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += static_cast<std::size_t>(std::popcount(words[i]));
    }
    return total;
}

bool any_word_scalar(const uint64_t* words, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (words[i] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

namespace {

struct Kernels {
    void (*xor_words)(uint64_t*, const uint64_t*, std::size_t);
    std::size_t (*popcount_words)(const uint64_t*, std::size_t);
    bool (*any_word)(const uint64_t*, std::size_t);
};

constexpr Kernels kScalar{detail::xor_words_scalar, detail::popcount_words_scalar,
                          detail::any_word_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Kernels kAvx2{detail::xor_words_avx2, detail::popcount_words_avx2,
                        detail::any_word_avx2};
#endif
#if defined(__aarch64__)
constexpr Kernels kNeon{detail::xor_words_neon, detail::popcount_words_neon,
                        detail::any_word_neon};
#endif

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            // NEON is baseline on AArch64.
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Kernels& kernels_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            return kAvx2;
#endif
#if defined(__aarch64__)
        case Backend::neon:
            return kNeon;
#endif
        default:
            return kScalar;
    }
}

struct State {
    Backend backend;
    Kernels kernels;
};

State& state() {
    static State s = [] {
        Backend best = Backend::scalar;
        if (backend_supported(Backend::avx2)) {
            best = Backend::avx2;
        } else if (backend_supported(Backend::neon)) {
            best = Backend::neon;
        }
        return State{best, kernels_for(best)};
    }();
    return s;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

std::vector<Backend> supported_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (backend_supported(b)) {
            out.push_back(b);
        }
    }
    return out;
}

Backend active_backend() { return state().backend; }

bool set_backend(Backend b) {
    if (!backend_supported(b)) {
        return false;
    }
    state() = State{b, kernels_for(b)};
    return true;
}

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
    state().kernels.xor_words(dst, src, n);
}

std::size_t popcount_words(const uint64_t* words, std::size_t n) {
    return state().kernels.popcount_words(words, n);
}

bool any_word(const uint64_t* words, std::size_t n) {
    return state().kernels.any_word(words, n);
}

}  // namespace pforest::bitops
