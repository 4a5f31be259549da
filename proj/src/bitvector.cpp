#include "pforest/bitvector.hpp"

#include <bit>

#include "pforest/bitops.hpp"
#include "pforest/errors.hpp"

namespace pforest {

BitVector::BitVector(int length) : length_(length) {
    if (length < 1) {
        throw InputError("BitVector length must be positive, got " + std::to_string(length));
    }
    words_.resize((static_cast<std::size_t>(length) + 63) / 64, 0);
}

BitVector BitVector::edge_vector(int i, int j, int length) {
    if (i < 1 || j < 1 || i > length || j > length) {
        throw InvalidEdgeError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                               "): endpoint out of range 1.." + std::to_string(length));
    }
    if (i == j) {
        throw InvalidEdgeError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is a self-loop");
    }
    BitVector v(length);
    v.set(i);
    v.set(j);
    return v;
}

void BitVector::check_index(int i) const {
    if (i < 1 || i > length_) {
        throw InputError("bit index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(length_));
    }
}

bool BitVector::test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i - 1) / 64] >> ((i - 1) % 64)) & 1u;
}

void BitVector::set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i - 1) / 64] |= uint64_t{1} << ((i - 1) % 64);
}

void BitVector::flip(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i - 1) / 64] ^= uint64_t{1} << ((i - 1) % 64);
}

bool BitVector::zero() const { return !bitops::any_word(words_.data(), words_.size()); }

int BitVector::count() const {
    return static_cast<int>(bitops::popcount_words(words_.data(), words_.size()));
}

int BitVector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<int>(w * 64) + std::countr_zero(words_[w]) + 1;
        }
    }
    return 0;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (length_ != rhs.length_) {
        throw DimensionMismatchError("cannot XOR vectors of lengths " + std::to_string(length_) +
                                     " and " + std::to_string(rhs.length_));
    }
    bitops::xor_words(words_.data(), rhs.words_.data(), words_.size());
    return *this;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(length_));
    for (int i = 1; i <= length_; ++i) {
        s.push_back(test(i) ? '1' : '0');
    }
    return s;
}

BitVector xor_sum(int length, std::span<const BitVector> vs) {
    BitVector acc(length);
    for (const BitVector& v : vs) {
        acc ^= v;  // throws on mixed dimensions
    }
    return acc;
}

}  // namespace pforest
