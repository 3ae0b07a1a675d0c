#include "ehrlab/matrix.hpp"

#include <stdexcept>

namespace ehrlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("ragged matrix initializer");
        }
        std::size_t j = 0;
        for (long v : row) {
            m.at(i, j++) = v;
        }
        ++i;
    }
    return m;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) {
        return 1;
    }

    std::vector<Int> m = entries_;
    auto e = [&](std::size_t r, std::size_t c) -> Int& { return m[r * n + c]; };

    int sign = 1;
    Int prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // First nonzero pivot in column order.
        std::size_t pivot_row = k;
        while (pivot_row < n && e(pivot_row, k) == 0) {
            ++pivot_row;
        }
        if (pivot_row == n) {
            return 0;
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(e(k, j), e(pivot_row, j));
            }
            sign = -sign;
        }

        const Int pivot = e(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                e(i, j) = divide_exact(e(i, j) * pivot - e(i, k) * e(k, j), prev_pivot);
            }
            e(i, k) = 0;
        }
        prev_pivot = pivot;
    }

    return sign > 0 ? e(n - 1, n - 1) : Int(-e(n - 1, n - 1));
}

}  // namespace ehrlab
