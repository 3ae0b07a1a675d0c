#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ehrlab/hull.hpp"
#include "ehrlab/polynomial.hpp"
#include "ehrlab/poset.hpp"

namespace ehrlab {

// A poset keyed by its canonical relation-matrix byte string: the row-major
// 0/1 matrix minimized over relabelings (restricted to permutations that
// respect an isomorphism-invariant refinement, which preserves the minimum).
// Two posets are isomorphic iff their canonical bytes are equal.
class CanonicalPoset {
public:
    explicit CanonicalPoset(const Poset& p);

    std::size_t size() const { return size_; }
    const std::string& bytes() const { return bytes_; }
    Poset to_poset() const;

    bool operator==(const CanonicalPoset&) const = default;
    bool operator<(const CanonicalPoset& rhs) const {
        return size_ != rhs.size_ ? size_ < rhs.size_ : bytes_ < rhs.bytes_;
    }

private:
    std::size_t size_;
    std::string bytes_;
};

/// All posets on n elements up to isomorphism, grown one maximal element at a
/// time (the new element is placed above each down-set of each smaller poset)
/// with canonical-form rejection of duplicates. Hard cap n <= 7.
std::vector<CanonicalPoset> enumerate_posets(unsigned n);

struct NegativeCoefficientViolation {
    std::size_t poset_size = 0;
    std::string poset_bytes;  // canonical relation matrix
    std::size_t degree = 0;   // degree of the offending coefficient
    Rat coefficient;
};

struct NegativeCoefficientScan {
    unsigned max_size = 0;
    unsigned jobs = 1;
    unsigned long examined = 0;  // posets checked, all sizes together
    std::vector<NegativeCoefficientViolation> violations;
    std::string checksum;  // over canonical forms and their full polynomials
    double wall_seconds = 0;
};

/// Computes the order-polytope counting polynomial of every poset with at
/// most max_size elements and records every negative coefficient. Workers
/// split deterministic index ranges; the report is identical for any job
/// count.
NegativeCoefficientScan scan_negative_coefficients(unsigned max_size, unsigned jobs = 1);

struct IdpGridViolation {
    unsigned a = 0;
    unsigned b = 0;
    IdpViolation violation;
};

struct IdpScan {
    unsigned max_a = 0;
    unsigned max_b = 0;
    unsigned dilate = 2;
    unsigned jobs = 1;
    unsigned long cells_examined = 0;
    Int points_examined;  // dilate-k candidates across all cells
    std::vector<IdpGridViolation> violations;
    std::string checksum;
    double wall_seconds = 0;
};

/// Runs the k-th dilate decomposition check over every partition polytope
/// with 1 <= a <= max_a, 1 <= b <= max_b. Caps: max_a <= 18, max_b <= 9.
IdpScan scan_idp_partition_polytopes(unsigned max_a, unsigned max_b, unsigned dilate = 2,
                                     unsigned jobs = 1);

/// Number of partitions of n into at most k parts (exact; used for the
/// points-examined accounting and as a test oracle).
Int partition_count(unsigned long n, unsigned long max_parts);

}  // namespace ehrlab
