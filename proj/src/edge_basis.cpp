#include "pforest/edge_basis.hpp"

#include <stdexcept>

#include "pforest/errors.hpp"

namespace pforest {

EdgeBasis::EdgeBasis(int dimension) : dimension_(dimension) {
    if (dimension < 1) {
        throw InputError("EdgeBasis dimension must be positive, got " + std::to_string(dimension));
    }
    row_of_pivot_.assign(static_cast<std::size_t>(dimension) + 1, -1);
}

void EdgeBasis::check_dimension(const BitVector& v) const {
    if (v.length() != dimension_) {
        throw DimensionMismatchError("vector of length " + std::to_string(v.length()) +
                                     " queried against basis of dimension " +
                                     std::to_string(dimension_));
    }
}

// Eliminates v against the stored rows. Each step XORs in the row owning the
// residual's lowest set bit, which strictly raises that bit, so the loop
// terminates after at most dimension steps. The accumulated combination
// expands the used rows into original member slots.
EdgeBasis::Reduction EdgeBasis::reduce(const BitVector& v) const {
    Reduction r{v, BitVector(dimension_)};
    while (true) {
        int pivot = r.residual.lowest_set();
        if (pivot == 0) {
            break;  // fully eliminated: v is in the span
        }
        int row = row_of_pivot_[static_cast<std::size_t>(pivot)];
        if (row < 0) {
            break;  // pivot owned by no row: v is outside the span
        }
        r.residual ^= rows_[static_cast<std::size_t>(row)].reduced;
        r.combination ^= rows_[static_cast<std::size_t>(row)].combination;
    }
    return r;
}

std::vector<int> EdgeBasis::combination_ids(const BitVector& combination) const {
    std::vector<int> ids;
    for (int slot = 1; slot <= size(); ++slot) {
        if (combination.test(slot)) {
            ids.push_back(member_ids_[static_cast<std::size_t>(slot - 1)]);
        }
    }
    return ids;
}

EdgeBasis::InsertResult EdgeBasis::try_insert(int edge_id, const BitVector& v) {
    check_dimension(v);
    Reduction r = reduce(v);
    if (r.residual.zero()) {
        return {false, combination_ids(r.combination)};
    }
    int slot = size() + 1;
    if (slot > dimension_) {
        // rank cannot exceed the dimension, so a nonzero residual must fit
        throw std::logic_error("EdgeBasis rank exceeded dimension");
    }
    r.combination.flip(slot);
    int pivot = r.residual.lowest_set();
    row_of_pivot_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
    rows_.push_back(Row{std::move(r.residual), std::move(r.combination)});
    member_ids_.push_back(edge_id);
    member_vectors_.push_back(v);
    return {true, {}};
}

std::optional<std::vector<int>> EdgeBasis::represent(const BitVector& v) const {
    check_dimension(v);
    Reduction r = reduce(v);
    if (!r.residual.zero()) {
        return std::nullopt;
    }
    return combination_ids(r.combination);
}

}  // namespace pforest
