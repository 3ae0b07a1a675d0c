#pragma once

// Brute-force recounts used as independent oracles. Everything here works by
// direct enumeration and stays off the library's algorithm paths (ideal
// lattices, determinants, simplex, interpolation).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ehrlab/exact.hpp"
#include "ehrlab/gt.hpp"
#include "ehrlab/hull.hpp"
#include "ehrlab/matrix.hpp"
#include "ehrlab/poset.hpp"

namespace oracles {

using ehrlab::Int;
using ehrlab::LatticePoint;
using ehrlab::Poset;

/// Order-preserving maps P -> {0..t}, counted by filling elements in index
/// order with all constraints re-checked per assignment.
inline Int brute_order_maps(const Poset& p, long t) {
    const int n = static_cast<int>(p.size());
    std::vector<long> value(n, 0);
    Int count = 0;
    std::function<void(int)> fill = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (long x = 0; x <= t; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (p.less(u, v) && value[u] > x) {
                    ok = false;
                }
                if (p.less(v, u) && value[u] < x) {
                    ok = false;
                }
            }
            if (ok) {
                value[v] = x;
                fill(v + 1);
            }
        }
    };
    fill(0);
    return count;
}

/// Strictly order-preserving maps P -> {1..m}.
inline Int brute_strict_maps(const Poset& p, long m) {
    const int n = static_cast<int>(p.size());
    std::vector<long> value(n, 0);
    Int count = 0;
    std::function<void(int)> fill = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (long x = 1; x <= m; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (p.less(u, v) && value[u] >= x) {
                    ok = false;
                }
                if (p.less(v, u) && value[u] <= x) {
                    ok = false;
                }
            }
            if (ok) {
                value[v] = x;
                fill(v + 1);
            }
        }
    };
    fill(0);
    return count;
}

/// Order-preserving maps P -> {0..k} with value sum exactly k.
inline Int brute_slice_maps(const Poset& p, long k) {
    const int n = static_cast<int>(p.size());
    std::vector<long> value(n, 0);
    Int count = 0;
    std::function<void(int, long)> fill = [&](int v, long used) {
        if (v == n) {
            if (used == k) {
                ++count;
            }
            return;
        }
        for (long x = 0; x + used <= k; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (p.less(u, v) && value[u] > x) {
                    ok = false;
                }
                if (p.less(v, u) && value[u] < x) {
                    ok = false;
                }
            }
            if (ok) {
                value[v] = x;
                fill(v + 1, used + x);
            }
        }
    };
    fill(0, 0);
    return count;
}

/// Determinant by cofactor expansion along the first row.
inline Int cofactor_determinant(const ehrlab::IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m.at(0, 0);
    }
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        ehrlab::IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t out = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) {
                    minor.at(i - 1, out++) = m.at(i, j);
                }
            }
        }
        const Int term = m.at(0, c) * cofactor_determinant(minor);
        det += (c % 2 == 0) ? term : Int(-term);
    }
    return det;
}

/// Semistandard tableaux of the given shape with entries in {1..max_entry}:
/// rows weakly increase, columns strictly increase.
inline Int count_ssyt(const std::vector<int>& shape, int max_entry) {
    std::vector<std::vector<int>> cells(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) {
        cells[r].assign(shape[r], 0);
    }
    Int count = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == shape.size()) {
            ++count;
            return;
        }
        const std::size_t nr = (c + 1 < shape[r]) ? r : r + 1;
        const int nc = (c + 1 < shape[r]) ? c + 1 : 0;
        const int left = c > 0 ? cells[r][c - 1] : 1;
        const int above = (r > 0 && c < shape[r - 1]) ? cells[r - 1][c] + 1 : 1;
        for (int v = std::max(left, above); v <= max_entry; ++v) {
            cells[r][c] = v;
            fill(nr, nc);
        }
    };
    if (shape.empty()) {
        return 1;
    }
    fill(0, 0);
    return count;
}

/// Semistandard tableaux with prescribed content (content[i] copies of i+1).
inline Int count_ssyt_content(const std::vector<int>& shape, const std::vector<int>& content) {
    std::vector<std::vector<int>> cells(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) {
        cells[r].assign(shape[r], 0);
    }
    std::vector<int> used(content.size(), 0);
    Int count = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == shape.size()) {
            ++count;
            return;
        }
        const std::size_t nr = (c + 1 < shape[r]) ? r : r + 1;
        const int nc = (c + 1 < shape[r]) ? c + 1 : 0;
        const int left = c > 0 ? cells[r][c - 1] : 1;
        const int above = (r > 0 && c < shape[r - 1]) ? cells[r - 1][c] + 1 : 1;
        for (int v = std::max(left, above); v <= static_cast<int>(content.size()); ++v) {
            if (used[v - 1] == content[v - 1]) {
                continue;
            }
            cells[r][c] = v;
            ++used[v - 1];
            fill(nr, nc);
            --used[v - 1];
        }
    };
    if (shape.empty()) {
        return 1;
    }
    fill(0, 0);
    return count;
}

/// All partitions of n into at most max_parts parts (no polytope machinery).
inline std::vector<std::vector<long>> all_partitions(long n, long max_parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rest, long cap) {
        if (static_cast<long>(cur.size()) > max_parts) {
            return;
        }
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<long>(cur.size()) == max_parts) {
            return;
        }
        for (long v = std::min(cap, rest); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Independent count of partitions of n into at most k parts.
inline Int independent_partition_count(long n, long k) {
    // p(n, k) = p(n-k, k) + p(n, k-1), memoized.
    static std::map<std::pair<long, long>, Int> memo;
    std::function<Int(long, long)> p = [&](long rest, long parts) -> Int {
        if (rest == 0) {
            return 1;
        }
        if (rest < 0 || parts == 0) {
            return 0;
        }
        const auto key = std::make_pair(rest, parts);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        const Int value = p(rest - parts, parts) + p(rest, parts - 1);
        memo.emplace(key, value);
        return value;
    };
    return p(n, k);
}

/// Labeled posets on n elements as below-mask vectors: every antisymmetric
/// orientation of each pair, filtered by transitivity.
inline std::vector<std::vector<ehrlab::ElementSet>> labeled_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    std::vector<std::vector<ehrlab::ElementSet>> out;
    std::vector<int> choice(pairs.size(), 0);  // 0: incomparable, 1: a<b, 2: b<a
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pairs.size()) {
            // strict relation as a matrix
            std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                const auto [a, b] = pairs[j];
                if (choice[j] == 1) {
                    less[a][b] = true;
                } else if (choice[j] == 2) {
                    less[b][a] = true;
                }
            }
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    if (!less[x][y]) {
                        continue;
                    }
                    for (int z = 0; z < n; ++z) {
                        if (less[y][z] && !less[x][z]) {
                            return;  // not transitive
                        }
                    }
                }
            }
            std::vector<ehrlab::ElementSet> below(n, 0);
            for (int b = 0; b < n; ++b) {
                below[b] = ehrlab::ElementSet{1} << b;
                for (int a = 0; a < n; ++a) {
                    if (less[a][b]) {
                        below[b] |= ehrlab::ElementSet{1} << a;
                    }
                }
            }
            out.push_back(std::move(below));
            return;
        }
        for (int c = 0; c < 3; ++c) {
            choice[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Isomorphism by exhaustive permutation search.
inline bool brute_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) {
        return false;
    }
    const int n = static_cast<int>(p.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = i;
    }
    do {
        bool match = true;
        for (int a = 0; a < n && match; ++a) {
            for (int b = 0; b < n && match; ++b) {
                if (p.less_equal(a, b) != q.less_equal(perm[a], perm[b])) {
                    match = false;
                }
            }
        }
        if (match) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Random poset via random covers and transitive closure.
inline Poset random_poset(std::mt19937_64& rng, int n, double edge_probability = 0.3) {
    std::vector<std::pair<int, int>> covers;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng) < edge_probability) {
                covers.emplace_back(a, b);  // ordered pairs keep it acyclic
            }
        }
    }
    return Poset::from_covers(n, covers);
}

/// All rooted trees on n nodes up to isomorphism, as parent vectors
/// (parent[0] = -1). Generated from increasing parent arrays and deduped by
/// a canonical subtree encoding.
inline std::vector<std::vector<int>> all_rooted_trees(int n) {
    std::vector<std::vector<int>> out;
    std::set<std::string> seen;
    std::vector<int> parent(n, -1);

    std::function<std::string(int, const std::vector<std::vector<int>>&)> encode =
        [&](int v, const std::vector<std::vector<int>>& kids) -> std::string {
        std::vector<std::string> parts;
        for (int c : kids[v]) {
            parts.push_back(encode(c, kids));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) {
            s += p;
        }
        return s + ")";
    };

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            std::vector<std::vector<int>> kids(n);
            for (int u = 1; u < n; ++u) {
                kids[parent[u]].push_back(u);
            }
            if (seen.insert(encode(0, kids)).second) {
                out.push_back(parent);
            }
            return;
        }
        for (int p = 0; p < v; ++p) {
            parent[v] = p;
            rec(v + 1);
        }
    };
    if (n == 1) {
        return {{-1}};
    }
    rec(1);
    return out;
}

/// Violations of the k-term decomposition property found naively: every sum
/// of k dilate-1 points is marked, then the dilate-k points are scanned.
inline std::vector<LatticePoint> naive_idp_violations(const ehrlab::VPolytope& poly, unsigned k) {
    const auto unit = ehrlab::lattice_points_of_dilate(poly, 1);
    std::set<LatticePoint> sums;
    std::vector<std::size_t> pick(k, 0);
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned depth, std::size_t first) {
        if (depth == k) {
            LatticePoint total(poly.dimension, Int(0));
            for (unsigned i = 0; i < k; ++i) {
                for (std::size_t c = 0; c < poly.dimension; ++c) {
                    total[c] += unit[pick[i]][c];
                }
            }
            sums.insert(std::move(total));
            return;
        }
        for (std::size_t i = first; i < unit.size(); ++i) {
            pick[depth] = i;
            rec(depth + 1, i);
        }
    };
    rec(0, 0);

    std::vector<LatticePoint> violations;
    for (const auto& point : ehrlab::lattice_points_of_dilate(poly, k)) {
        if (sums.count(point) == 0) {
            violations.push_back(point);
        }
    }
    return violations;
}

}  // namespace oracles
