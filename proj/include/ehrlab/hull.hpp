#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrlab/exact.hpp"

namespace ehrlab {

using LatticePoint = std::vector<Int>;

// Polytope given by integer generating points (not required to be vertices).
struct VPolytope {
    std::size_t dimension = 0;
    std::vector<LatticePoint> generators;
};

/// Validates a non-empty generator list of consistent dimension.
VPolytope make_vpolytope(std::vector<LatticePoint> generators);

/// Convex hull of all partitions of a into at most b parts, zero-padded to
/// length b. Generators are listed in decreasing lexicographic order.
VPolytope partition_polytope(unsigned a, unsigned b);

// Exact membership verdict with a machine-checkable witness: a convex
// combination of the generators when inside, a strictly separating integer
// functional when outside (functional . g <= offset < functional . point for
// every generator g).
struct MembershipCertificate {
    enum class Verdict { inside, outside };

    Verdict verdict = Verdict::outside;
    std::vector<Rat> weights;     // one per generator, inside only
    std::vector<Int> functional;  // outside only
    Rat offset;                   // outside only
};

/// Re-validates a certificate against the polytope and query point by plain
/// arithmetic, independent of how it was produced.
bool certificate_valid(const VPolytope& poly, const std::vector<Rat>& point,
                       const MembershipCertificate& cert);

/// Exact LP feasibility in barycentric form (weights >= 0, sum 1, weighted
/// generator sum equals the point), decided by a two-phase simplex with a
/// deterministic pivot rule. The returned certificate is re-validated before
/// return. Throws std::invalid_argument on dimension mismatch.
MembershipCertificate contains(const VPolytope& poly, const std::vector<Rat>& point);

/// Convenience: membership of point/denominator.
MembershipCertificate contains_scaled(const VPolytope& poly, const LatticePoint& point,
                                      unsigned long denominator);

/// All lattice points of k*P: candidate integer vectors from the ambient
/// cone (weakly decreasing with fixed coordinate sum when every generator
/// satisfies that, otherwise the full bounding box), filtered by exact
/// membership of x/k. Sorted in decreasing lexicographic order.
std::vector<LatticePoint> lattice_points_of_dilate(const VPolytope& poly, unsigned k);

// Result of an exhaustive k-term decomposition search.
struct DecompositionSearch {
    std::optional<std::vector<LatticePoint>> terms;  // k lattice points summing to the target
    unsigned long examined = 0;                      // candidate combinations tested
};

/// Searches for lattice points x_1, ..., x_k of P with x_1 + ... + x_k equal
/// to the given point. Candidates are scanned in decreasing lexicographic
/// order with early exit; on failure the exhaustion count is reported.
DecompositionSearch decompose_as_sum(const LatticePoint& point, const VPolytope& poly, unsigned k);

/// Same search against a precomputed list of the lattice points of P.
DecompositionSearch decompose_as_sum(const LatticePoint& point,
                                     const std::vector<LatticePoint>& unit_points, unsigned k);

// A lattice point of k*P with no k-term decomposition, plus the exhaustion
// record of the search that proved it.
struct IdpViolation {
    unsigned dilate = 0;
    LatticePoint point;
    unsigned long examined = 0;
};

/// Scans every lattice point of k*P and reports the points with no k-term
/// decomposition into lattice points of P. An empty list certifies the
/// integer decomposition property at level k. Violations are sorted in
/// decreasing lexicographic order.
std::vector<IdpViolation> idp_check(const VPolytope& poly, unsigned k);

}  // namespace ehrlab
