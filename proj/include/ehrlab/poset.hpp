#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ehrlab/exact.hpp"
#include "ehrlab/polynomial.hpp"

namespace ehrlab {

/// Subset of poset elements as a bitmask; element capacity is 64.
using ElementSet = std::uint64_t;

// Finite partial order on {0..n-1}. The reflexive transitive relation is
// stored as per-element bitmasks and validated on construction; cover pairs
// are derived on demand.
class Poset {
public:
    /// Antichain on `size` elements.
    explicit Poset(std::size_t size);

    /// Builds the transitive closure of the given strict cover pairs (a, b)
    /// meaning a < b, 0-indexed. Throws std::invalid_argument on cycles.
    static Poset from_covers(std::size_t size, const std::vector<std::pair<int, int>>& covers);

    /// Adopts a full reflexive relation, one "below" mask per element
    /// (below[v] = all u with u <= v, including v). Validates reflexivity,
    /// antisymmetry and transitivity.
    static Poset from_relation(std::vector<ElementSet> below);

    std::size_t size() const { return below_.size(); }
    bool less_equal(int a, int b) const { return (below_[b] >> a) & 1u; }
    bool less(int a, int b) const { return a != b && less_equal(a, b); }

    /// All u <= v as a mask (includes v itself).
    ElementSet below(int v) const { return below_[v]; }
    /// All u >= v as a mask (includes v itself).
    ElementSet above(int v) const { return above_[v]; }

    /// Derived covering relation, pairs (a, b) with a covered by b.
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// Row-major 0/1 bytes of the full relation matrix (r[a][b] = a <= b).
    std::string relation_bytes() const;

private:
    std::vector<ElementSet> below_;
    std::vector<ElementSet> above_;

    explicit Poset(std::vector<ElementSet> below, std::vector<ElementSet> above)
        : below_(std::move(below)), above_(std::move(above)) {}
};

// Partition shape: weakly decreasing positive parts. The empty shape is valid.
class YoungShape {
public:
    YoungShape() = default;
    explicit YoungShape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> conjugate() const;
    std::size_t box_count() const;

    static YoungShape parse(std::string_view comma_separated);

private:
    std::vector<int> parts_;
};

// Rooted tree as a parent map; node 0..n-1, exactly one root.
class RootedTree {
public:
    /// parent[v] is the parent of v, or -1 for the root. Validates that the
    /// structure is a single tree.
    explicit RootedTree(std::vector<int> parent);

    std::size_t size() const { return parent_.size(); }
    int parent(int v) const { return parent_[v]; }
    int root() const { return root_; }

    /// Subtree size per node (the node itself included).
    std::vector<int> subtree_sizes() const;

private:
    std::vector<int> parent_;
    int root_ = -1;
};

// The distributive lattice of order ideals (down-sets) of a poset, listed as
// bitmasks sorted by (popcount, value). Always contains the empty and the
// full ideal. Containment between ideals is the mask subset test.
class IdealLattice {
public:
    static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

    explicit IdealLattice(const Poset& p, std::size_t max_ideals = kDefaultCap);

    std::size_t count() const { return ideals_.size(); }
    const std::vector<ElementSet>& ideals() const { return ideals_; }
    std::size_t element_count() const { return element_count_; }

private:
    std::vector<ElementSet> ideals_;
    std::size_t element_count_;
};

/// Poset of the shape's boxes ordered componentwise; the corner box is the
/// unique minimal element. Linear extensions biject with standard tableaux.
Poset poset_from_shape(const YoungShape& shape);

/// One bottom element below ell pairwise-incomparable tops.
Poset poset_from_example21(unsigned ell);

/// Tree poset with the root minimal (every node below its descendants).
Poset poset_from_tree(const RootedTree& tree);

/// Number of order-preserving maps P -> {0..t}, via multichain counting in
/// the ideal lattice.
Int order_polynomial_value(const Poset& p, unsigned long t);

/// Order-polynomial values for all t = 0..t_max in one lattice sweep.
std::vector<Int> order_polynomial_values(const Poset& p, unsigned long t_max);

/// Lattice-point counting polynomial of the order polytope: interpolates the
/// order polynomial at t = 0..|P|. Degree |P|, constant term 1.
UniPolynomial ehrhart_order_polytope(const Poset& p);

/// Exact number of linear extensions (maximal chains in the ideal lattice).
Int linear_extensions(const Poset& p);

/// Sorted (descending) multiset of positive integers.
using HookMultiset = std::vector<int>;

/// Arm + leg + 1 for every box of the shape.
HookMultiset hook_multiset_shape(const YoungShape& shape);

/// Subtree sizes, one per node; the root contributes the full node count.
HookMultiset hook_multiset_tree(const RootedTree& tree);

/// n! divided by the product of hooks; the division is checked exact.
Int hook_formula_count(const YoungShape& shape);

/// n! divided by the product of subtree sizes; the division is checked exact.
Int hook_formula_count_tree(const RootedTree& tree);

/// Number of order-preserving maps f: P -> {0..k} with total sum exactly k,
/// i.e. lattice points of the k-th dilate of the hyperplane slice sum(x) = 1
/// of the order polytope.
Int slice_count(const Poset& p, unsigned long k);

/// Text format: first line n, then cover lines "a < b", 1-indexed. Blank
/// lines and '#' comments are skipped.
Poset read_poset(std::istream& in);

/// Text format: first line n, then lines "child parent", 1-indexed; the root
/// has no line. Blank lines and '#' comments are skipped.
RootedTree read_tree(std::istream& in);

Poset read_poset_file(const std::string& path);
RootedTree read_tree_file(const std::string& path);

}  // namespace ehrlab
