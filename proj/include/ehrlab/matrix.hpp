#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ehrlab/exact.hpp"

namespace ehrlab {

// Rectangular matrix of exact integers, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Fraction-free Bareiss elimination; pivot is the first nonzero entry in
    /// column order, with row swaps tracked in the sign. Throws on non-square.
    Int determinant() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

}  // namespace ehrlab
