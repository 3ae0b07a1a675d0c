#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehrlab/polynomial.hpp"

namespace ehrlab {

// One verified statement of a worked example: what was expected, what the
// library computed, and where the expectation comes from ("reference" for a
// value printed in the source example, "cross-check" for an independently
// derived value, "definition" for a forced one).
struct Claim {
    std::string description;
    std::string expected;
    std::string computed;
    std::string source;
    bool pass = false;
};

struct ExampleReport {
    std::string id;
    std::vector<Claim> claims;
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> rendered value

    bool all_pass() const;
};

/// Order polytope with one bottom below ell incomparable tops; counting
/// polynomial is the shifted power sum. ell = 20 is the first size with a
/// negative coefficient.
ExampleReport example_negative_coefficients(unsigned ell);

/// Constrained-pattern family whose dilate counts reproduce the same shifted
/// power sums, checked per dilate up to max_dilate.
ExampleReport example_gt_face(unsigned ell, unsigned max_dilate);

/// The partition polytope on 9 parts with content 18: two lattice points of
/// the double dilate admit no two-term decomposition.
ExampleReport example_partition_polytope();

/// The 19-row pattern counterexample; fixtures are read from fixture_dir.
ExampleReport example_gt_counterexample(const std::string& fixture_dir);

/// Shapes (8,5,4) and (7,7,2,1): equal hooks, different counting polynomials.
ExampleReport example_hook_shapes();

/// The two 14-node trees with equal hooks and different counting polynomials.
ExampleReport example_hook_trees(const std::string& fixture_dir);

// Published closed forms the computed polynomials are compared against.
UniPolynomial shape_854_closed_form();
UniPolynomial shape_7721_closed_form();
UniPolynomial tree_t_closed_form();
UniPolynomial tree_t_prime_closed_form();

/// EHRLAB_FIXTURES environment override, falling back to the build-time
/// default fixture directory.
std::string default_fixture_dir();

}  // namespace ehrlab
