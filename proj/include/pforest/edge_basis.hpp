#pragma once

#include <optional>
#include <vector>

#include "pforest/bitvector.hpp"

namespace pforest {

// A linearly independent set of GF(2) vectors, each tagged with a
// caller-supplied edge id, maintained in reduced form so that membership in
// the span and the exact member combination behind a dependent vector are
// both cheap to extract. Because the members stay independent, the
// combination reported for a dependent vector is unique.
class EdgeBasis {
public:
    explicit EdgeBasis(int dimension);

    struct InsertResult {
        bool inserted;
        // Member edge ids whose vectors XOR to the rejected query; empty for
        // the zero vector. Meaningful only when !inserted.
        std::vector<int> dependency;
    };

    // Appends v as a new member if it is independent of the current members;
    // otherwise leaves the basis unchanged and reports the dependency.
    InsertResult try_insert(int edge_id, const BitVector& v);

    // Member edge ids whose vectors XOR to v, or nullopt when v lies outside
    // the span. v must match the basis dimension.
    std::optional<std::vector<int>> represent(const BitVector& v) const;

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(member_ids_.size()); }
    const std::vector<int>& member_ids() const { return member_ids_; }
    const BitVector& member_vector(int slot) const { return member_vectors_[slot]; }

private:
    // Each stored row r satisfies: r.reduced = XOR of the original member
    // vectors whose (1-based) slots are set in r.combination, and
    // r.reduced.lowest_set() is a pivot owned by no other row.
    struct Row {
        BitVector reduced;
        BitVector combination;
    };
    struct Reduction {
        BitVector residual;
        BitVector combination;
    };

    Reduction reduce(const BitVector& v) const;
    std::vector<int> combination_ids(const BitVector& combination) const;
    void check_dimension(const BitVector& v) const;

    int dimension_;
    std::vector<int> member_ids_;
    std::vector<BitVector> member_vectors_;
    std::vector<Row> rows_;          // parallel to member slots
    std::vector<int> row_of_pivot_;  // pivot position 1..dimension -> row, -1 when free
};

}  // namespace pforest
