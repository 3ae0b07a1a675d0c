// Acceptance suite: every numbered criterion below runs exactly, prints one
// pass/fail line with its runtime against the stated budget, and the binary
// exits nonzero if any line fails. `--long` additionally sweeps the full
// 18x9 partition-polytope grid.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "ehrlab/examples.hpp"
#include "ehrlab/gt.hpp"
#include "ehrlab/hull.hpp"
#include "ehrlab/polynomial.hpp"
#include "ehrlab/poset.hpp"
#include "ehrlab/search.hpp"
#include "oracles.hpp"

using namespace ehrlab;

namespace {

const std::string kFixtures = EHRLAB_TEST_FIXTURES;

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        error = "over budget";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << seconds << " s, budget "
              << budget_seconds << " s)";
    if (!error.empty()) {
        std::cout << "  <- " << error;
    }
    std::cout << "\n";
    if (!ok) {
        ++failures;
    }
}

bool criterion_power_sum_coefficients() {
    const auto p = power_sum_polynomial(20);
    bool ok = p.coefficient(0) == Rat(1);
    ok = ok && p.coefficient(1) == make_rat(-3528231, 6930);
    ok = ok && p.coefficient(2) == make_rat(1316700, 6930);
    ok = ok && p.coefficient(3) == make_rat(32027050, 6930);
    for (unsigned long ell = 0; ell < 20 && ok; ++ell) {
        for (const auto& c : power_sum_polynomial(ell).coefficients()) {
            ok = ok && c >= 0;
        }
    }
    return ok;
}

bool criterion_order_polytope_recount() {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        const auto closed = power_sum_polynomial(ell);
        const auto values = order_polynomial_values(poset_from_example21(ell), 4);
        for (unsigned long n = 0; n <= 4; ++n) {
            if (Rat(values[n]) != closed(Int(n))) {
                return false;
            }
        }
    }
    return true;
}

bool criterion_face_family() {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        const auto closed = power_sum_polynomial(ell);
        for (unsigned n = 0; n <= 4; ++n) {
            if (Rat(face_example_count(ell, n)) != closed(Int(n))) {
                return false;
            }
        }
    }
    return true;
}

bool criterion_partition_counterexample() {
    const auto poly = partition_polytope(18, 9);
    for (const LatticePoint& point :
         {LatticePoint{6, 6, 6, 6, 4, 4, 2, 1, 1}, LatticePoint{6, 6, 5, 5, 5, 4, 2, 2, 1}}) {
        std::vector<Rat> half;
        for (const auto& c : point) {
            half.push_back(make_rat(c, Int(2)));
        }
        const auto cert = contains(poly, half);
        if (cert.verdict != MembershipCertificate::Verdict::inside ||
            !certificate_valid(poly, half, cert)) {
            return false;
        }
        const auto search = decompose_as_sum(point, poly, 2);
        if (search.terms.has_value() || search.examined == 0) {
            return false;
        }
    }
    return true;
}

bool criterion_pattern_counterexample() {
    const auto g = read_gt_pattern_file(kFixtures + "/gt_G.txt");
    std::vector<GTPattern> summands;
    for (int i = 1; i <= 4; ++i) {
        summands.push_back(read_gt_pattern_file(kFixtures + "/gt_G" + std::to_string(i) +
                                                ".txt"));
    }
    const auto report = verify_counterexample_36(g, summands, counterexample36_lambda(),
                                                 counterexample36_mu(),
                                                 counterexample36_row_sums());
    return report.all_pass() &&
           report.distinguished_row == std::vector<long>{6, 6, 6, 6, 4, 4, 2, 1, 1};
}

bool criterion_hook_shapes() {
    const YoungShape first({8, 5, 4});
    const YoungShape second({7, 7, 2, 1});
    if (hook_multiset_shape(first) != hook_multiset_shape(second)) {
        return false;
    }
    const Poset poset_first = poset_from_shape(first);
    const Poset poset_second = poset_from_shape(second);
    if (order_polynomial_value(poset_first, 1) != 115 ||
        order_polynomial_value(poset_second, 1) != 134) {
        return false;
    }
    return ehrhart_order_polytope(poset_first) == shape_854_closed_form() &&
           ehrhart_order_polytope(poset_second) == shape_7721_closed_form();
}

bool criterion_hook_trees() {
    const auto tree_t = read_tree_file(kFixtures + "/tree_T.txt");
    const auto tree_t_prime = read_tree_file(kFixtures + "/tree_Tprime.txt");
    if (hook_multiset_tree(tree_t) != hook_multiset_tree(tree_t_prime)) {
        return false;
    }
    const auto poly_t = ehrhart_order_polytope(poset_from_tree(tree_t));
    const auto poly_t_prime = ehrhart_order_polytope(poset_from_tree(tree_t_prime));
    return poly_t == tree_t_closed_form() && poly_t_prime == tree_t_prime_closed_form() &&
           poly_t(Int(1)) == Rat(353) && poly_t_prime(Int(1)) == Rat(346);
}

bool criterion_volume_consistency() {
    const struct {
        Poset poset;
        unsigned long boxes;
        long extensions;
        Int hook_count;
    } cases[] = {
        {poset_from_shape(YoungShape({8, 5, 4})), 17, 272272,
         hook_formula_count(YoungShape({8, 5, 4}))},
        {poset_from_shape(YoungShape({7, 7, 2, 1})), 17, 272272,
         hook_formula_count(YoungShape({7, 7, 2, 1}))},
        {poset_from_tree(read_tree_file(kFixtures + "/tree_T.txt")), 14, 1235520,
         hook_formula_count_tree(read_tree_file(kFixtures + "/tree_T.txt"))},
        {poset_from_tree(read_tree_file(kFixtures + "/tree_Tprime.txt")), 14, 1235520,
         hook_formula_count_tree(read_tree_file(kFixtures + "/tree_Tprime.txt"))},
    };
    for (const auto& c : cases) {
        const Int extensions = linear_extensions(c.poset);
        if (extensions != c.extensions || c.hook_count != extensions) {
            return false;
        }
        const auto poly = ehrhart_order_polytope(c.poset);
        if (poly.leading_coefficient() * Rat(factorial(c.boxes)) != Rat(extensions)) {
            return false;
        }
    }
    return true;
}

bool criterion_sign_scan() {
    const auto ci = scan_negative_coefficients(6, 4);
    if (ci.examined != 1 + 2 + 5 + 16 + 63 + 318 || !ci.violations.empty()) {
        return false;
    }
    const auto full = scan_negative_coefficients(7, 4);
    return full.examined == ci.examined + 2045 && full.violations.empty();
}

bool criterion_slice_invariance() {
    const Poset a = poset_from_shape(YoungShape({8, 5, 4}));
    const Poset b = poset_from_shape(YoungShape({7, 7, 2, 1}));
    for (unsigned long k = 0; k <= 5; ++k) {
        if (slice_count(a, k) != slice_count(b, k)) {
            return false;
        }
    }
    const Poset t = poset_from_tree(read_tree_file(kFixtures + "/tree_T.txt"));
    const Poset t_prime = poset_from_tree(read_tree_file(kFixtures + "/tree_Tprime.txt"));
    for (unsigned long k = 0; k <= 5; ++k) {
        if (slice_count(t, k) != slice_count(t_prime, k)) {
            return false;
        }
    }
    return true;
}

bool criterion_oracle_suites() {
    // (a) pattern count = determinant = product formula.
    std::vector<std::vector<long>> lambdas;
    {
        std::vector<long> cur(3, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == 3) {
                lambdas.push_back(cur);
                return;
            }
            for (long v = 0; v <= (i ? cur[i - 1] : 3); ++v) {
                cur[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    for (const auto& parts : lambdas) {
        const Partition lambda{std::vector<long>(parts)};
        for (unsigned m = 1; m <= 4; ++m) {
            const Int count = enumerate_gt(lambda, Partition::zero(3), m + 1);
            if (count != skew_schur_ones(lambda, Partition::zero(3), m)) {
                return false;
            }
            if (m >= 3 && count != weyl_dimension(lambda, m)) {
                return false;
            }
        }
    }

    // (b) decomposition checker vs the naive tuple-sum recount.
    for (unsigned a = 1; a <= 8; ++a) {
        for (unsigned b = 1; b <= 4; ++b) {
            const auto poly = partition_polytope(a, b);
            for (unsigned k : {2u, 3u}) {
                const auto naive = oracles::naive_idp_violations(poly, k);
                const auto checked = idp_check(poly, k);
                if (naive.size() != checked.size()) {
                    return false;
                }
                for (std::size_t i = 0; i < naive.size(); ++i) {
                    if (checked[i].point != naive[i]) {
                        return false;
                    }
                }
            }
        }
    }

    // (c) reciprocity and interpolation round trips.
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        const int size = 2 + trial % 4;
        const Poset p = oracles::random_poset(rng, size);
        const auto poly = ehrhart_order_polytope(p);
        for (long n = 0; n <= 4; ++n) {
            Rat reflected = poly(Int(-n - 2));
            if (size % 2 == 1) {
                reflected = -reflected;
            }
            if (reflected != Rat(oracles::brute_strict_maps(p, n + 1))) {
                return false;
            }
        }
    }
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = deg(rng);
        std::vector<Rat> coeffs;
        for (int i = 0; i <= d; ++i) {
            coeffs.push_back(make_rat(num(rng), den(rng)));
        }
        const UniPolynomial p(coeffs);
        std::vector<std::pair<Int, Rat>> samples;
        for (int x = 0; x <= d; ++x) {
            samples.emplace_back(Int(x), p(Int(x)));
        }
        if (interpolate_polynomial(samples) != p) {
            return false;
        }
    }
    return true;
}

bool long_grid_sweep() {
    const auto scan = scan_idp_partition_polytopes(18, 9, 2, 4);
    if (scan.violations.size() != 2) {
        return false;
    }
    const LatticePoint p = {6, 6, 6, 6, 4, 4, 2, 1, 1};
    const LatticePoint q = {6, 6, 5, 5, 5, 4, 2, 2, 1};
    return scan.violations[0].a == 18 && scan.violations[0].b == 9 &&
           scan.violations[0].violation.point == p && scan.violations[1].violation.point == q;
}

}  // namespace

int main(int argc, char** argv) {
    bool long_mode = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            long_mode = true;
        }
    }

    criterion("1. shifted power sum at exponent 20: published coefficients, smaller exponents "
              "all non-negative",
              1.0, criterion_power_sum_coefficients);
    criterion("2. bottom-element order polytopes recount the power sums (ell <= 3, n <= 4)", 1.0,
              criterion_order_polytope_recount);
    criterion("3. constrained-pattern face family matches the power sums (ell <= 3, n <= 4)",
              10.0, criterion_face_family);
    criterion("4. double-dilate points of the 18/9 partition polytope: certified inside, no "
              "two-term split",
              60.0, criterion_partition_counterexample);
    criterion("5. 19-row pattern: summands valid, half-sum exact, distinguished row unsplittable",
              60.0, criterion_pattern_counterexample);
    criterion("6. equal-hook shapes: counts 115/134 at dilate 1, polynomials match the closed "
              "forms",
              30.0, criterion_hook_shapes);
    criterion("7. equal-hook trees: polynomials match the closed forms, counts 353/346 at "
              "dilate 1",
              30.0, criterion_hook_trees);
    criterion("8. leading coefficient x n! = linear extensions = hook count (272272 / 1235520)",
              60.0, criterion_volume_consistency);
    criterion("9. coefficient-sign scan: 405 posets to size 6 and 2045 more at size 7, no "
              "negatives",
              300.0, criterion_sign_scan);
    criterion("10. unit-sum slice counts agree across each equal-hook pair (k <= 5)", 60.0,
              criterion_slice_invariance);
    criterion("11. oracle equivalences: pattern/determinant/product counts, naive decomposition "
              "recount, reciprocity, interpolation round trip",
              300.0, criterion_oracle_suites);
    if (long_mode) {
        criterion("long: full 18x9 grid sweep finds exactly the two published points", 600.0,
                  long_grid_sweep);
    }

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
