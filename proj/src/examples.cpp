#include "ehrlab/examples.hpp"

#include <cstdlib>
#include <sstream>

#include "ehrlab/gt.hpp"
#include "ehrlab/hull.hpp"
#include "ehrlab/poset.hpp"
#include "ehrlab/search.hpp"

#ifndef EHRLAB_DEFAULT_FIXTURES
#define EHRLAB_DEFAULT_FIXTURES "fixtures"
#endif

namespace ehrlab {

namespace {

Claim claim(std::string description, std::string expected, std::string computed,
            std::string source) {
    Claim c{std::move(description), std::move(expected), std::move(computed), std::move(source),
            false};
    c.pass = c.expected == c.computed;
    return c;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

UniPolynomial linear_factor(long constant) {
    return UniPolynomial({Rat(constant), Rat(1)});
}

UniPolynomial from_descending(std::vector<long> coefficients) {
    std::vector<Rat> ascending;
    ascending.reserve(coefficients.size());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        ascending.emplace_back(*it);
    }
    return UniPolynomial(std::move(ascending));
}

template <typename Row>
std::string tuple_text(const Row& row) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? "," : "") << row[j];
    }
    out << ")";
    return out.str();
}

std::string multiset_text(const HookMultiset& hooks) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < hooks.size(); ++i) {
        out << (i ? "," : "") << hooks[i];
    }
    out << "}";
    return out.str();
}

}  // namespace

bool ExampleReport::all_pass() const {
    for (const auto& c : claims) {
        if (!c.pass) {
            return false;
        }
    }
    return !claims.empty();
}

UniPolynomial shape_854_closed_form() {
    UniPolynomial f = UniPolynomial::constant(make_rat(1, 36578304000L));
    f *= linear_factor(1);
    for (long c : {2, 3, 4, 5}) {
        f *= linear_factor(c);
        f *= linear_factor(c);
    }
    for (long c : {6, 7, 8}) {
        f *= linear_factor(c);
    }
    UniPolynomial result = f * Rat(7);
    result *= linear_factor(3);
    result *= linear_factor(4);
    result *= from_descending({4, 35, 101, 90});
    return result;
}

UniPolynomial shape_7721_closed_form() {
    UniPolynomial f = UniPolynomial::constant(make_rat(1, 36578304000L));
    f *= linear_factor(1);
    for (long c : {2, 3, 4, 5}) {
        f *= linear_factor(c);
        f *= linear_factor(c);
    }
    for (long c : {6, 7, 8}) {
        f *= linear_factor(c);
    }
    f *= linear_factor(6);
    f *= linear_factor(7);
    f *= from_descending({28, 161, 301, 180});
    return f;
}

namespace {

UniPolynomial tree_prefactor() {
    UniPolynomial f = UniPolynomial::constant(make_rat(1, 3632428800L));
    for (long c : {1, 2, 3, 4, 5}) {
        f *= linear_factor(c);
    }
    return f;
}

}  // namespace

UniPolynomial tree_t_closed_form() {
    return tree_prefactor() * from_descending({51480, 1182984, 11490017, 61564083, 199510913,
                                               404186041, 512043278, 393196652, 167403432,
                                               30270240});
}

UniPolynomial tree_t_prime_closed_form() {
    return tree_prefactor() * from_descending({51480, 1173975, 11327855, 60383085, 195027707,
                                               394660980, 500753090, 386259540, 165675888,
                                               30270240});
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("EHRLAB_FIXTURES")) {
        return env;
    }
    return EHRLAB_DEFAULT_FIXTURES;
}

ExampleReport example_negative_coefficients(unsigned ell) {
    ExampleReport report;
    report.id = "2.1";

    const auto poly = power_sum_polynomial(ell);
    report.artifacts.emplace_back("counting polynomial", poly.pretty());

    report.claims.push_back(claim("constant term", "1/1", rat_string(poly.coefficient(0)),
                                  "definition"));

    if (ell == 20) {
        report.claims.push_back(claim("coefficient of n^1", rat_string(make_rat(-3528231, 6930)),
                                      rat_string(poly.coefficient(1)), "reference"));
        report.claims.push_back(claim("coefficient of n^2", rat_string(make_rat(1316700, 6930)),
                                      rat_string(poly.coefficient(2)), "reference"));
        report.claims.push_back(claim("coefficient of n^3", rat_string(make_rat(32027050, 6930)),
                                      rat_string(poly.coefficient(3)), "reference"));
        report.claims.push_back(claim("value at dilate 1", "1048577/1",
                                      rat_string(poly(Int(1))), "cross-check"));
    }

    bool any_negative = false;
    std::size_t min_degree = 0;
    Rat min_coefficient = poly.coefficient(0);
    for (std::size_t k = 0; k < poly.coefficients().size(); ++k) {
        const Rat& c = poly.coefficients()[k];
        if (c < 0) {
            any_negative = true;
        }
        if (c < min_coefficient) {
            min_coefficient = c;
            min_degree = k;
        }
    }
    if (ell < 20) {
        report.claims.push_back(
            claim("all coefficients non-negative", "yes", yes_no(!any_negative), "reference"));
    } else if (ell == 20) {
        report.claims.push_back(
            claim("some coefficient negative", "yes", yes_no(any_negative), "reference"));
        report.claims.push_back(claim("minimum coefficient",
                                      rat_string(make_rat(-3528231, 6930)) + " at degree 1",
                                      rat_string(min_coefficient) + " at degree " +
                                          std::to_string(min_degree),
                                      "reference"));
    } else {
        std::ostringstream observed;
        observed << (any_negative ? "negative coefficient present" : "all non-negative");
        report.artifacts.emplace_back("coefficient signs", observed.str());
    }

    // Small sizes admit the direct order-polytope recount.
    if (ell <= 5) {
        bool agree = true;
        const auto p = poset_from_example21(ell);
        const auto values = order_polynomial_values(p, 4);
        for (unsigned long t = 0; t <= 4 && agree; ++t) {
            agree = Rat(values[t]) == poly(Int(t));
        }
        report.claims.push_back(claim("order-polytope recount at dilates 0..4", "agrees",
                                      agree ? "agrees" : "differs", "cross-check"));
    }

    return report;
}

ExampleReport example_gt_face(unsigned ell, unsigned max_dilate) {
    ExampleReport report;
    report.id = "2.2";

    const auto poly = power_sum_polynomial(ell);
    for (unsigned n = 0; n <= max_dilate; ++n) {
        const Int counted = face_example_count(ell, n);
        report.claims.push_back(claim("face lattice points at dilate " + std::to_string(n),
                                      rat_string(poly(Int(n))), rat_string(Rat(counted)),
                                      "cross-check"));
    }
    report.artifacts.emplace_back("matching closed form", poly.pretty());
    return report;
}

ExampleReport example_partition_polytope() {
    ExampleReport report;
    report.id = "3.4";

    const auto poly = partition_polytope(18, 9);
    report.claims.push_back(claim("generator count equals the recursive partition count",
                                  partition_count(18, 9).get_str(),
                                  std::to_string(poly.generators.size()), "cross-check"));

    const LatticePoint p = {6, 6, 6, 6, 4, 4, 2, 1, 1};
    const LatticePoint q = {6, 6, 5, 5, 5, 4, 2, 2, 1};

    // The published witness: equal quarter weights on four named partitions.
    {
        const std::vector<LatticePoint> witness = {{4, 4, 4, 4, 1, 1, 0, 0, 0},
                                                   {3, 3, 3, 3, 3, 3, 0, 0, 0},
                                                   {3, 3, 3, 3, 2, 2, 2, 0, 0},
                                                   {2, 2, 2, 2, 2, 2, 2, 2, 2}};
        MembershipCertificate cert;
        cert.verdict = MembershipCertificate::Verdict::inside;
        cert.weights.assign(poly.generators.size(), Rat(0));
        bool all_found = true;
        for (const auto& part : witness) {
            bool found = false;
            for (std::size_t j = 0; j < poly.generators.size(); ++j) {
                if (poly.generators[j] == part) {
                    cert.weights[j] = make_rat(1, 4);
                    found = true;
                    break;
                }
            }
            all_found = all_found && found;
        }
        std::vector<Rat> half_p;
        for (const auto& c : p) {
            half_p.push_back(make_rat(c, Int(2)));
        }
        const bool valid = all_found && certificate_valid(poly, half_p, cert);
        report.claims.push_back(claim("published quarter-weight witness re-validates", "yes",
                                      yes_no(valid), "reference"));
    }

    for (const auto& [name, point] : {std::pair{"(6,6,6,6,4,4,2,1,1)", p},
                                      std::pair{"(6,6,5,5,5,4,2,2,1)", q}}) {
        const auto cert = contains_scaled(poly, point, 2);
        const bool inside = cert.verdict == MembershipCertificate::Verdict::inside;
        report.claims.push_back(claim(std::string(name) + " lies in the double dilate", "yes",
                                      yes_no(inside), "reference"));

        const auto search = decompose_as_sum(point, poly, 2);
        report.claims.push_back(claim(std::string(name) + " has no two-term decomposition",
                                      "none", search.terms ? "found" : "none", "reference"));
        report.artifacts.emplace_back(std::string(name) + " candidates examined",
                                      std::to_string(search.examined));
    }

    return report;
}

ExampleReport example_gt_counterexample(const std::string& fixture_dir) {
    ExampleReport report;
    report.id = "3.6";

    const auto g = read_gt_pattern_file(fixture_dir + "/gt_G.txt");
    std::vector<GTPattern> summands;
    for (int i = 1; i <= 4; ++i) {
        summands.push_back(read_gt_pattern_file(fixture_dir + "/gt_G" + std::to_string(i) +
                                                ".txt"));
    }

    const auto verdict = verify_counterexample_36(g, summands, counterexample36_lambda(),
                                                  counterexample36_mu(),
                                                  counterexample36_row_sums());
    for (const auto& check : verdict.checks) {
        report.claims.push_back(claim(check.name, "pass", check.pass ? "pass" : "fail",
                                      "reference"));
        report.artifacts.emplace_back(check.name, check.detail);
    }
    if (!verdict.distinguished_row.empty()) {
        report.artifacts.emplace_back("distinguished row", tuple_text(verdict.distinguished_row));
        report.artifacts.emplace_back("decompositions examined",
                                      std::to_string(verdict.decompositions_examined));
    }
    return report;
}

ExampleReport example_hook_shapes() {
    ExampleReport report;
    report.id = "4.2";

    const YoungShape first({8, 5, 4});
    const YoungShape second({7, 7, 2, 1});

    const auto hooks_first = hook_multiset_shape(first);
    const auto hooks_second = hook_multiset_shape(second);
    report.claims.push_back(claim("hook multiset of (8,5,4)",
                                  "{10,9,8,7,6,5,5,4,4,3,3,3,2,2,1,1,1}",
                                  multiset_text(hooks_first), "reference"));
    report.claims.push_back(claim("hook multisets coincide", "yes",
                                  yes_no(hooks_first == hooks_second), "reference"));

    const auto poset_first = poset_from_shape(first);
    const auto poset_second = poset_from_shape(second);
    report.claims.push_back(claim("(8,5,4) count at dilate 1", "115",
                                  order_polynomial_value(poset_first, 1).get_str(), "reference"));
    report.claims.push_back(claim("(7,7,2,1) count at dilate 1", "134",
                                  order_polynomial_value(poset_second, 1).get_str(), "reference"));

    const auto poly_first = ehrhart_order_polytope(poset_first);
    const auto poly_second = ehrhart_order_polytope(poset_second);
    report.claims.push_back(claim("(8,5,4) polynomial equals the published closed form", "yes",
                                  yes_no(poly_first == shape_854_closed_form()), "reference"));
    report.claims.push_back(claim("(7,7,2,1) polynomial equals the published closed form", "yes",
                                  yes_no(poly_second == shape_7721_closed_form()), "reference"));

    const Int extensions = linear_extensions(poset_first);
    report.claims.push_back(claim("linear extensions of (8,5,4) match the hook formula",
                                  hook_formula_count(first).get_str(), extensions.get_str(),
                                  "cross-check"));
    report.claims.push_back(
        claim("leading coefficient times 17! recovers the extension count",
              rat_string(Rat(extensions)),
              rat_string(poly_first.leading_coefficient() * Rat(factorial(17))), "cross-check"));
    report.claims.push_back(
        claim("(7,7,2,1) volume agrees with the shared hook product",
              rat_string(Rat(extensions)),
              rat_string(poly_second.leading_coefficient() * Rat(factorial(17))), "cross-check"));

    report.artifacts.emplace_back("(8,5,4) polynomial", poly_first.pretty("k"));
    report.artifacts.emplace_back("(7,7,2,1) polynomial", poly_second.pretty("k"));
    return report;
}

ExampleReport example_hook_trees(const std::string& fixture_dir) {
    ExampleReport report;
    report.id = "4.3";

    const auto tree_t = read_tree_file(fixture_dir + "/tree_T.txt");
    const auto tree_t_prime = read_tree_file(fixture_dir + "/tree_Tprime.txt");

    const auto hooks_t = hook_multiset_tree(tree_t);
    const auto hooks_t_prime = hook_multiset_tree(tree_t_prime);
    report.claims.push_back(claim("root hook equals the node count", "14",
                                  std::to_string(hooks_t.empty() ? 0 : hooks_t.front()),
                                  "reference"));
    report.claims.push_back(
        claim("hook multisets coincide", "yes", yes_no(hooks_t == hooks_t_prime), "reference"));

    const auto poset_t = poset_from_tree(tree_t);
    const auto poset_t_prime = poset_from_tree(tree_t_prime);
    const auto poly_t = ehrhart_order_polytope(poset_t);
    const auto poly_t_prime = ehrhart_order_polytope(poset_t_prime);

    report.claims.push_back(claim("T polynomial equals the published closed form", "yes",
                                  yes_no(poly_t == tree_t_closed_form()), "reference"));
    report.claims.push_back(claim("T' polynomial equals the published closed form", "yes",
                                  yes_no(poly_t_prime == tree_t_prime_closed_form()),
                                  "reference"));
    report.claims.push_back(
        claim("T count at dilate 1", "353/1", rat_string(poly_t(Int(1))), "cross-check"));
    report.claims.push_back(claim("T' count at dilate 1", "346/1",
                                  rat_string(poly_t_prime(Int(1))), "cross-check"));

    const Int extensions = linear_extensions(poset_t);
    report.claims.push_back(claim("linear extensions of T match the subtree-size formula",
                                  hook_formula_count_tree(tree_t).get_str(), extensions.get_str(),
                                  "cross-check"));
    report.claims.push_back(claim("T' has the same extension count",
                                  extensions.get_str(),
                                  linear_extensions(poset_t_prime).get_str(), "cross-check"));
    report.claims.push_back(
        claim("leading coefficient times 14! recovers the extension count",
              rat_string(Rat(extensions)),
              rat_string(poly_t.leading_coefficient() * Rat(factorial(14))), "cross-check"));

    report.artifacts.emplace_back("T polynomial", poly_t.pretty());
    report.artifacts.emplace_back("T' polynomial", poly_t_prime.pretty());
    return report;
}

}  // namespace ehrlab
