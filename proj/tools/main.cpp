#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ehrlab/examples.hpp"
#include "ehrlab/gt.hpp"
#include "ehrlab/hull.hpp"
#include "ehrlab/json_io.hpp"
#include "ehrlab/polynomial.hpp"
#include "ehrlab/poset.hpp"
#include "ehrlab/search.hpp"

namespace {

using namespace ehrlab;

struct GlobalOptions {
    bool json = false;
    unsigned jobs = 1;
    bool long_mode = false;
};

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

int finish_report(const ExampleReport& report, const GlobalOptions& global) {
    if (global.json) {
        emit(to_json(report));
    } else {
        std::cout << "example " << report.id << "\n";
        for (const auto& c : report.claims) {
            std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.description
                      << ": expected " << c.expected << ", computed " << c.computed << " ["
                      << c.source << "]\n";
        }
        for (const auto& [name, value] : report.artifacts) {
            std::cout << "  " << name << ": " << value << "\n";
        }
        std::cout << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

Poset poset_from_sources(const std::string& shape, const std::string& poset_file,
                         const std::string& tree_file) {
    const int given = !shape.empty() + !poset_file.empty() + !tree_file.empty();
    if (given != 1) {
        throw CLI::ValidationError("give exactly one of --shape, --poset, --tree");
    }
    if (!shape.empty()) {
        return poset_from_shape(YoungShape::parse(shape));
    }
    if (!poset_file.empty()) {
        return read_poset_file(poset_file);
    }
    return poset_from_tree(read_tree_file(tree_file));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point counting for order and pattern polytopes"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_flag("--json", global.json, "emit reports as JSON");
    app.add_option("--jobs", global.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
    app.add_flag("--long", global.long_mode, "enable the long-running scan ranges");

    int exit_code = 0;
    const auto run = [&](auto&& body) {
        try {
            exit_code = body();
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            exit_code = 2;
        }
    };

    // example <id>
    {
        auto* cmd = app.add_subcommand("example", "re-run a bundled worked example by number");
        cmd->fallthrough();
        auto id = std::make_shared<std::string>();
        auto ell = std::make_shared<unsigned>(0);
        auto max_dilate = std::make_shared<unsigned>(4);
        cmd->add_option("id", *id, "one of 2.1, 2.2, 3.4, 3.6, 4.2, 4.3")
            ->required()
            ->check(CLI::IsMember({"2.1", "2.2", "3.4", "3.6", "4.2", "4.3"}));
        cmd->add_option("--ell", *ell, "family parameter for 2.1 / 2.2");
        cmd->add_option("--max-dilate", *max_dilate, "dilates checked by 2.2");
        cmd->callback([&, id, ell, max_dilate] {
            run([&]() -> int {
                if (*id == "2.1") {
                    return finish_report(example_negative_coefficients(*ell ? *ell : 20), global);
                }
                if (*id == "2.2") {
                    return finish_report(example_gt_face(*ell ? *ell : 2, *max_dilate), global);
                }
                if (*id == "3.4") {
                    return finish_report(example_partition_polytope(), global);
                }
                if (*id == "3.6") {
                    return finish_report(example_gt_counterexample(default_fixture_dir()), global);
                }
                if (*id == "4.2") {
                    return finish_report(example_hook_shapes(), global);
                }
                return finish_report(example_hook_trees(default_fixture_dir()), global);
            });
        });
    }

    // ehrhart
    {
        auto* cmd = app.add_subcommand("ehrhart", "counting polynomial of a polytope");
        cmd->fallthrough();
        auto shape = std::make_shared<std::string>();
        auto poset_file = std::make_shared<std::string>();
        auto tree_file = std::make_shared<std::string>();
        auto use_gt = std::make_shared<bool>(false);
        auto lambda = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        auto rows = std::make_shared<unsigned>(0);
        cmd->add_option("--shape", *shape, "partition shape, e.g. 8,5,4");
        cmd->add_option("--poset", *poset_file, "poset file (n, then 'a < b' covers)");
        cmd->add_option("--tree", *tree_file, "rooted-tree file (n, then 'child parent')");
        cmd->add_flag("--gt", *use_gt, "pattern polytope mode");
        cmd->add_option("--lambda", *lambda, "top row (pattern mode)");
        cmd->add_option("--mu", *mu, "bottom row (pattern mode)");
        cmd->add_option("--rows", *rows, "pattern row count (pattern mode)");
        auto row_sums = std::make_shared<std::string>();
        cmd->add_option("--w", *row_sums,
                        "row sums, bottom to top (pattern mode; stretched count)");
        cmd->callback([&, shape, poset_file, tree_file, use_gt, lambda, mu, rows, row_sums] {
            run([&]() -> int {
                UniPolynomial poly;
                if (*use_gt) {
                    if (lambda->empty()) {
                        throw CLI::ValidationError("pattern mode needs --lambda");
                    }
                    const auto top = Partition::parse(*lambda);
                    const auto bottom =
                        mu->empty() ? Partition::zero(top.length()) : Partition::parse(*mu);
                    if (!row_sums->empty()) {
                        RowSums sums;
                        std::istringstream in(*row_sums);
                        std::string token;
                        while (std::getline(in, token, ',')) {
                            if (!token.empty()) {
                                sums.push_back(std::stol(token));
                            }
                        }
                        const auto stretched = stretched_kostka(top, bottom, sums);
                        if (!stretched.consistent) {
                            std::cerr << "insufficient samples / non-polynomial fit: recount at "
                                         "the extra node gives "
                                      << stretched.actual_next << "\n";
                            return 1;
                        }
                        poly = stretched.polynomial;
                    } else {
                        if (*rows < 2) {
                            throw CLI::ValidationError("pattern mode needs --rows >= 2");
                        }
                        poly = ehrhart_gt(top, bottom, *rows - 1);
                    }
                } else {
                    poly = ehrhart_order_polytope(
                        poset_from_sources(*shape, *poset_file, *tree_file));
                }
                if (global.json) {
                    Json j;
                    j["coefficients"] = to_json(poly);
                    j["rendered"] = poly.pretty();
                    emit(j);
                } else {
                    std::cout << poly.pretty() << "\n" << Json(poly.to_strings()).dump() << "\n";
                }
                return 0;
            });
        });
    }

    // hooks
    {
        auto* cmd = app.add_subcommand("hooks", "hook multiset of a shape or tree");
        cmd->fallthrough();
        auto shape = std::make_shared<std::string>();
        auto tree_file = std::make_shared<std::string>();
        cmd->add_option("--shape", *shape, "partition shape");
        cmd->add_option("--tree", *tree_file, "rooted-tree file");
        cmd->callback([&, shape, tree_file] {
            run([&]() -> int {
                HookMultiset hooks;
                Int count;
                if (!shape->empty() == !tree_file->empty()) {
                    throw CLI::ValidationError("give exactly one of --shape, --tree");
                }
                if (!shape->empty()) {
                    const YoungShape s = YoungShape::parse(*shape);
                    hooks = hook_multiset_shape(s);
                    count = hook_formula_count(s);
                } else {
                    const auto t = read_tree_file(*tree_file);
                    hooks = hook_multiset_tree(t);
                    count = hook_formula_count_tree(t);
                }
                if (global.json) {
                    Json j;
                    j["hooks"] = hooks;
                    j["extension_count"] = count.get_str();
                    emit(j);
                } else {
                    std::cout << "hooks:";
                    for (int h : hooks) {
                        std::cout << " " << h;
                    }
                    std::cout << "\nextension count: " << count << "\n";
                }
                return 0;
            });
        });
    }

    // linext
    {
        auto* cmd = app.add_subcommand("linext", "count linear extensions");
        cmd->fallthrough();
        auto shape = std::make_shared<std::string>();
        auto poset_file = std::make_shared<std::string>();
        auto tree_file = std::make_shared<std::string>();
        cmd->add_option("--shape", *shape, "partition shape");
        cmd->add_option("--poset", *poset_file, "poset file");
        cmd->add_option("--tree", *tree_file, "rooted-tree file");
        cmd->callback([&, shape, poset_file, tree_file] {
            run([&]() -> int {
                const Int count =
                    linear_extensions(poset_from_sources(*shape, *poset_file, *tree_file));
                if (global.json) {
                    emit(Json{{"linear_extensions", count.get_str()}});
                } else {
                    std::cout << count << "\n";
                }
                return 0;
            });
        });
    }

    // slice
    {
        auto* cmd = app.add_subcommand("slice",
                                       "lattice points of the unit-sum slice per dilate");
        cmd->fallthrough();
        auto shape = std::make_shared<std::string>();
        auto poset_file = std::make_shared<std::string>();
        auto tree_file = std::make_shared<std::string>();
        auto max_k = std::make_shared<unsigned>(5);
        cmd->add_option("--shape", *shape, "partition shape");
        cmd->add_option("--poset", *poset_file, "poset file");
        cmd->add_option("--tree", *tree_file, "rooted-tree file");
        cmd->add_option("--max-k", *max_k, "largest dilate");
        cmd->callback([&, shape, poset_file, tree_file, max_k] {
            run([&]() -> int {
                const Poset p = poset_from_sources(*shape, *poset_file, *tree_file);
                Json counts = Json::array();
                for (unsigned k = 0; k <= *max_k; ++k) {
                    counts.push_back(slice_count(p, k).get_str());
                }
                if (global.json) {
                    emit(Json{{"slice_counts", counts}});
                } else {
                    for (unsigned k = 0; k <= *max_k; ++k) {
                        std::cout << "k=" << k << ": " << counts[k].get<std::string>() << "\n";
                    }
                }
                return 0;
            });
        });
    }

    // idp
    {
        auto* cmd = app.add_subcommand("idp", "decomposition check for one partition polytope");
        cmd->fallthrough();
        auto a = std::make_shared<unsigned>(0);
        auto b = std::make_shared<unsigned>(0);
        auto k = std::make_shared<unsigned>(2);
        cmd->add_option("--a", *a, "partition content")->required();
        cmd->add_option("--b", *b, "number of parts")->required();
        cmd->add_option("--k", *k, "dilate");
        cmd->callback([&, a, b, k] {
            run([&]() -> int {
                const auto violations = idp_check(partition_polytope(*a, *b), *k);
                if (global.json) {
                    Json list = Json::array();
                    for (const auto& v : violations) {
                        list.push_back(to_json(v));
                    }
                    emit(Json{{"a", *a}, {"b", *b}, {"dilate", *k}, {"violations", list}});
                } else {
                    if (violations.empty()) {
                        std::cout << "every lattice point of the dilate decomposes\n";
                    }
                    for (const auto& v : violations) {
                        std::cout << "no decomposition: (";
                        for (std::size_t i = 0; i < v.point.size(); ++i) {
                            std::cout << (i ? "," : "") << v.point[i];
                        }
                        std::cout << ") after " << v.examined << " candidates\n";
                    }
                }
                return violations.empty() ? 0 : 1;
            });
        });
    }

    // gt-verify
    {
        auto* cmd = app.add_subcommand("gt-verify",
                                       "re-verify the 19-row non-decomposable pattern");
        cmd->fallthrough();
        cmd->callback([&] {
            run([&]() -> int {
                return finish_report(example_gt_counterexample(default_fixture_dir()), global);
            });
        });
    }

    // scan
    {
        auto* cmd = app.add_subcommand("scan", "batch scans");
        cmd->fallthrough();
        auto kind = std::make_shared<std::string>();
        auto max_size = std::make_shared<unsigned>(0);
        auto max_a = std::make_shared<unsigned>(0);
        auto max_b = std::make_shared<unsigned>(0);
        auto k = std::make_shared<unsigned>(2);
        cmd->add_option("kind", *kind, "posets | idp")
            ->required()
            ->check(CLI::IsMember({"posets", "idp"}));
        cmd->add_option("--max-size", *max_size, "poset scan: largest element count");
        cmd->add_option("--max-a", *max_a, "partition scan: largest content");
        cmd->add_option("--max-b", *max_b, "partition scan: largest part count");
        cmd->add_option("--k", *k, "partition scan: dilate");
        cmd->callback([&, kind, max_size, max_a, max_b, k] {
            run([&]() -> int {
                if (*kind == "posets") {
                    unsigned limit = *max_size ? *max_size : (global.long_mode ? 7 : 6);
                    if (limit > 6 && !global.long_mode) {
                        throw CLI::ValidationError(
                            "sizes beyond 6 take a while; pass --long to enable");
                    }
                    const auto report = scan_negative_coefficients(limit, global.jobs);
                    if (global.json) {
                        emit(to_json(report));
                    } else {
                        std::cout << "examined " << report.examined << " posets up to size "
                                  << report.max_size << "; " << report.violations.size()
                                  << " negative coefficients; checksum " << report.checksum
                                  << "\n";
                    }
                    return 0;
                }
                const unsigned a_limit = *max_a ? *max_a : (global.long_mode ? 18 : 8);
                const unsigned b_limit = *max_b ? *max_b : (global.long_mode ? 9 : 4);
                const auto report =
                    scan_idp_partition_polytopes(a_limit, b_limit, *k, global.jobs);
                if (global.json) {
                    emit(to_json(report));
                } else {
                    std::cout << "examined " << report.cells_examined << " polytopes ("
                              << report.points_examined << " dilate points); "
                              << report.violations.size() << " non-decomposable points; checksum "
                              << report.checksum << "\n";
                    for (const auto& v : report.violations) {
                        std::cout << "  a=" << v.a << " b=" << v.b << ": (";
                        for (std::size_t i = 0; i < v.violation.point.size(); ++i) {
                            std::cout << (i ? "," : "") << v.violation.point[i];
                        }
                        std::cout << ")\n";
                    }
                }
                return 0;
            });
        });
    }

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
