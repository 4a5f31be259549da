#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pforest {

// Vector over GF(2) with coordinates 1..length(). Addition is coordinate-wise
// XOR, so every vector is its own inverse. Bits are packed into 64-bit words
// and routed through the bitops kernels; unused high bits of the last word
// stay zero, which makes operator== a plain word compare.
class BitVector {
public:
    explicit BitVector(int length);

    // The vector whose only nonzero coordinates are i and j.
    static BitVector edge_vector(int i, int j, int length);

    int length() const { return length_; }
    bool test(int i) const;
    void set(int i);
    void flip(int i);

    bool zero() const;
    int count() const;
    // 1-based position of the lowest set bit, 0 when the vector is zero.
    int lowest_set() const;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const BitVector&) const = default;

    // Coordinate 1 first, e.g. "1100".
    std::string to_string() const;

    std::span<const uint64_t> words() const { return words_; }

private:
    void check_index(int i) const;

    int length_;
    std::vector<uint64_t> words_;
};

// Coordinate-wise XOR of all vectors; the empty list yields the zero vector
// of the given length.
BitVector xor_sum(int length, std::span<const BitVector> vs);

}  // namespace pforest
