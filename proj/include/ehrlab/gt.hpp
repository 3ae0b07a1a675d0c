#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ehrlab/exact.hpp"
#include "ehrlab/polynomial.hpp"

namespace ehrlab {

// Weakly decreasing sequence of non-negative integers, zero-padded to a fixed
// length chosen by the caller.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    static Partition parse(std::string_view comma_separated);
    static Partition zero(std::size_t length);

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long sum() const;

    /// Componentwise mu <= lambda, comparing past either end as zero.
    bool contains(const Partition& mu) const;

    Partition scaled(long factor) const;
    Partition padded(std::size_t length) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

// Parallelogram pattern: R rows of a fixed width, stored bottom-to-top.
// Triangular patterns are the special case with the forced zeros written out.
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<long>> rows_bottom_up);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t width() const { return rows_.empty() ? 0 : rows_[0].size(); }

    /// Row i, 0-based from the bottom.
    const std::vector<long>& row(std::size_t i) const { return rows_[i]; }
    const std::vector<std::vector<long>>& rows() const { return rows_; }

    std::vector<long> row_sums() const;

    bool operator==(const GTPattern&) const = default;

private:
    std::vector<std::vector<long>> rows_;
};

/// One row sum per stored pattern row, bottom-to-top, boundary rows included;
/// consistency requires w.front() = |mu| and w.back() = |lambda|.
using RowSums = std::vector<long>;

/// Description of the first violated constraint, or nullopt if the pattern
/// interlaces and has boundary rows lambda (top) and mu (bottom). Throws
/// std::invalid_argument when the widths disagree.
std::optional<std::string> pattern_violation(const GTPattern& pattern, const Partition& lambda,
                                             const Partition& mu);

bool validate_gt(const GTPattern& pattern, const Partition& lambda, const Partition& mu);

/// Description of the first row whose sum differs from w, or nullopt.
std::optional<std::string> row_sums_violation(const GTPattern& pattern, const RowSums& w);

/// Number of integer patterns with `rows` rows, top row lambda, bottom row
/// mu, counted by row-by-row recursion over the interlacing intervals.
Int enumerate_gt(const Partition& lambda, const Partition& mu, std::size_t rows);

/// Skew Schur evaluation s_{lambda/mu}(1^m) as the Jacobi-Trudi determinant
/// det(h_{lambda_i - mu_j - i + j}) with h_k(1^m) = C(m+k-1, k).
Int skew_schur_ones(const Partition& lambda, const Partition& mu, unsigned m);

/// Product formula for s_lambda(1^m): prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).
Int weyl_dimension(const Partition& lambda, unsigned m);

/// Lattice-point counting polynomial of the pattern polytope with boundary
/// lambda/mu on m+1 rows, interpolated from s_{n*lambda/n*mu}(1^m) at
/// n = 0..D where D bounds the dimension (free cells); an extra sample at
/// D+1 is checked against the interpolant.
UniPolynomial ehrhart_gt(const Partition& lambda, const Partition& mu, unsigned m);

/// All patterns with the given boundary and exact row sums w. Throws on
/// boundary-inconsistent w.
std::vector<GTPattern> enumerate_gt_with_rowsums(const Partition& lambda, const Partition& mu,
                                                 const RowSums& w);

/// Count-only variant of enumerate_gt_with_rowsums.
Int count_gt_with_rowsums(const Partition& lambda, const Partition& mu, const RowSums& w);

// Interpolation result for the stretched count n -> #patterns with boundary
// n*lambda/n*mu and row sums n*w. `consistent` reports whether one extra
// sample beyond the interpolation nodes matches the fitted polynomial; a
// mismatch means the sample budget was insufficient (or the count is not a
// polynomial) and the fit must not be trusted.
struct StretchedKostka {
    UniPolynomial polynomial;
    bool consistent = false;
    Int fitted_next;  // polynomial value at samples+1
    Int actual_next;  // recount at samples+1
};

/// Samples n = 0..samples; samples = 0 picks the slice dimension bound
/// (rows-2)*(width-1).
StretchedKostka stretched_kostka(const Partition& lambda, const Partition& mu, const RowSums& w,
                                 unsigned samples = 0);

// Equality-class layout of a constrained triangular pattern: every cell is
// pinned to the top-row value, pinned to zero, tied to one shared free value,
// or an individually free diagonal cell.
class GTFaceSpec {
public:
    static constexpr long kPinnedTop = -1;
    static constexpr long kPinnedZero = -2;
    static constexpr long kShared = -3;

    /// cells[r][j] is one of the codes above or the index (>= 0) of a free
    /// diagonal cell; rows are top-down with decreasing widths.
    explicit GTFaceSpec(std::vector<std::vector<long>> cells);

    const std::vector<std::vector<long>>& cells() const { return cells_; }
    std::size_t free_cell_count() const { return free_cells_; }

    /// Cells per class: {pinned-to-top, pinned-to-zero, shared}.
    std::size_t pinned_top_cells() const;
    std::size_t pinned_zero_cells() const;
    std::size_t shared_cells() const;

private:
    std::vector<std::vector<long>> cells_;
    std::size_t free_cells_ = 0;
};

/// The one-parameter family with top row (1^ell, 0^(ell+1)): a region pinned
/// to the dilated 1s, the forced-zero staircase, one shared region, and one
/// free cell per designated diagonal position.
GTFaceSpec gt_face_spec(unsigned ell);

/// Lattice points of the n-th dilate of the face: direct enumeration of the
/// free values with every interlacing constraint of the materialized
/// triangle checked.
Int face_lattice_points(const GTFaceSpec& spec, unsigned n);

/// face_lattice_points(gt_face_spec(ell), n).
Int face_example_count(unsigned ell, unsigned n);

/// Text format: line 1 "R n", then R rows of n integers, bottom row first;
/// '#' comments allowed.
GTPattern read_gt_pattern(std::istream& in);
GTPattern read_gt_pattern_file(const std::string& path);

// Parameters of the 19-row non-decomposable pattern family.
Partition counterexample36_lambda();
Partition counterexample36_mu();
RowSums counterexample36_row_sums();

struct VerifierCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CounterexampleReport {
    std::vector<VerifierCheck> checks;
    std::vector<long> distinguished_row;        // content of the located row of G
    unsigned long decompositions_examined = 0;  // exhaustion count of the split search
    bool all_pass() const;
};

/// Verifies the three claims of the counterexample: (a) every summand is a
/// valid pattern with boundary lambda/mu and row sums w, and the doubled
/// pattern matches 2*lambda / 2*mu / 2*w; (b) twice the doubled pattern
/// equals the entrywise sum of the summands; (c) the row whose prescribed
/// unit sum equals `unit_row_sum` cannot split into two lattice points of
/// the partition polytope on `width` parts. All checks run even when an
/// earlier one fails.
CounterexampleReport verify_counterexample_36(const GTPattern& doubled,
                                              const std::vector<GTPattern>& summands,
                                              const Partition& lambda, const Partition& mu,
                                              const RowSums& w, long unit_row_sum = 18);

}  // namespace ehrlab
