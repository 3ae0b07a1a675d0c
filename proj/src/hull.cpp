#include "ehrlab/hull.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ehrlab {

namespace {

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_greater(const LatticePoint& a, const LatticePoint& b) {
    return lex_less(b, a);
}

void decreasing_vectors_rec(std::size_t length, const Int& sum, const Int& cap,
                            LatticePoint& prefix, std::vector<LatticePoint>& out) {
    if (prefix.size() == length) {
        if (sum == 0) {
            out.push_back(prefix);
        }
        return;
    }
    const long remaining = static_cast<long>(length - prefix.size());
    // Largest value first keeps the output in decreasing lexicographic order.
    for (Int v = cap < sum ? cap : sum; v >= 0; --v) {
        if (v * remaining < sum) {
            break;  // the rest cannot reach the target under the new cap
        }
        prefix.push_back(v);
        decreasing_vectors_rec(length, sum - v, v, prefix, out);
        prefix.pop_back();
    }
}

/// Weakly decreasing non-negative integer vectors of the given length and
/// coordinate sum, first part at most cap; decreasing lexicographic order.
std::vector<LatticePoint> decreasing_vectors(std::size_t length, const Int& sum, const Int& cap) {
    std::vector<LatticePoint> out;
    if (length == 0) {
        if (sum == 0) {
            out.push_back({});
        }
        return out;
    }
    LatticePoint prefix;
    prefix.reserve(length);
    decreasing_vectors_rec(length, sum, cap, prefix, out);
    return out;
}

struct SimplexOutcome {
    bool feasible = false;
    std::vector<Rat> weights;      // barycentric coordinates when feasible
    std::vector<Rat> multipliers;  // Farkas row multipliers when infeasible
};

// Phase-1 simplex for { w >= 0, sum w = 1, sum_j w_j v_j = x }. Deterministic
// and cycle-free: smallest-index entering column, smallest ratio with ties
// broken by the smallest basic index.
SimplexOutcome solve_barycentric(const VPolytope& poly, const std::vector<Rat>& point) {
    const std::size_t d = poly.dimension;
    const std::size_t n_cols = poly.generators.size();
    const std::size_t m = d + 1;
    const std::size_t total = n_cols + m;  // structural + artificial
    const std::size_t rhs = total;

    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            t[i][j] = Rat(poly.generators[j][i]);
        }
        t[i][rhs] = point[i];
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
        t[d][j] = 1;
    }
    t[d][rhs] = 1;

    for (std::size_t i = 0; i < m; ++i) {
        if (t[i][rhs] < 0) {
            row_sign[i] = -1;
            for (auto& cell : t[i]) {
                cell = -cell;
            }
        }
        t[i][n_cols + i] = 1;
    }

    // Reduced-cost row for minimizing the artificial sum; z[rhs] carries the
    // negated objective value.
    std::vector<Rat> z(total + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            z[j] -= t[i][j];
        }
        z[rhs] -= t[i][rhs];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n_cols + i;
    }

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == total) {
            break;
        }

        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) {
                continue;
            }
            Rat ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            throw std::logic_error("phase-1 simplex claims an unbounded objective");
        }

        const Rat pivot = t[leave][enter];
        for (auto& cell : t[leave]) {
            cell /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) {
                continue;
            }
            const Rat factor = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) {
                t[i][j] -= factor * t[leave][j];
            }
        }
        if (z[enter] != 0) {
            const Rat factor = z[enter];
            for (std::size_t j = 0; j <= total; ++j) {
                z[j] -= factor * t[leave][j];
            }
        }
        basis[leave] = enter;
    }

    SimplexOutcome out;
    if (z[rhs] == 0) {  // artificial sum minimized to zero
        out.feasible = true;
        out.weights.assign(n_cols, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n_cols) {
                out.weights[basis[i]] = t[i][rhs];
            }
        }
    } else {
        out.feasible = false;
        out.multipliers.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            // Dual value of row i, mapped back to the un-normalized system.
            Rat y = Rat(1) - z[n_cols + i];
            out.multipliers[i] = row_sign[i] > 0 ? y : Rat(-y);
        }
    }
    return out;
}

std::vector<Rat> scaled_point(const LatticePoint& point, unsigned long denominator) {
    std::vector<Rat> q;
    q.reserve(point.size());
    for (const auto& c : point) {
        q.push_back(make_rat(c, Int(denominator)));
    }
    return q;
}

}  // namespace

VPolytope make_vpolytope(std::vector<LatticePoint> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("polytope needs at least one generating point");
    }
    const std::size_t d = generators.front().size();
    for (const auto& g : generators) {
        if (g.size() != d) {
            throw std::invalid_argument("generators of mixed dimension");
        }
    }
    return VPolytope{d, std::move(generators)};
}

VPolytope partition_polytope(unsigned a, unsigned b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("partition polytope needs a, b >= 1");
    }
    return make_vpolytope(decreasing_vectors(b, Int(a), Int(a)));
}

bool certificate_valid(const VPolytope& poly, const std::vector<Rat>& point,
                       const MembershipCertificate& cert) {
    if (point.size() != poly.dimension) {
        return false;
    }
    if (cert.verdict == MembershipCertificate::Verdict::inside) {
        if (cert.weights.size() != poly.generators.size()) {
            return false;
        }
        Rat weight_sum(0);
        std::vector<Rat> combo(poly.dimension, Rat(0));
        for (std::size_t j = 0; j < cert.weights.size(); ++j) {
            if (cert.weights[j] < 0) {
                return false;
            }
            weight_sum += cert.weights[j];
            for (std::size_t i = 0; i < poly.dimension; ++i) {
                combo[i] += cert.weights[j] * Rat(poly.generators[j][i]);
            }
        }
        return weight_sum == 1 && combo == point;
    }

    if (cert.functional.size() != poly.dimension) {
        return false;
    }
    for (const auto& g : poly.generators) {
        Int value = 0;
        for (std::size_t i = 0; i < poly.dimension; ++i) {
            value += cert.functional[i] * g[i];
        }
        if (Rat(value) > cert.offset) {
            return false;
        }
    }
    Rat at_point(0);
    for (std::size_t i = 0; i < poly.dimension; ++i) {
        at_point += Rat(cert.functional[i]) * point[i];
    }
    return at_point > cert.offset;
}

MembershipCertificate contains(const VPolytope& poly, const std::vector<Rat>& point) {
    if (point.size() != poly.dimension) {
        throw std::invalid_argument("query point dimension does not match the polytope");
    }

    const auto outcome = solve_barycentric(poly, point);
    MembershipCertificate cert;
    if (outcome.feasible) {
        cert.verdict = MembershipCertificate::Verdict::inside;
        cert.weights = outcome.weights;
    } else {
        cert.verdict = MembershipCertificate::Verdict::outside;
        // The Farkas multipliers y satisfy y.(v_j, 1) <= 0 for every generator
        // and y.(x, 1) > 0; their first d entries, cleared of denominators,
        // give an integer functional separating x from the hull.
        Int lcm = 1;
        for (std::size_t i = 0; i < poly.dimension; ++i) {
            Int den = outcome.multipliers[i].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        cert.functional.resize(poly.dimension);
        for (std::size_t i = 0; i < poly.dimension; ++i) {
            Rat scaled = outcome.multipliers[i] * Rat(lcm);
            cert.functional[i] = scaled.get_num();
        }
        bool first = true;
        for (const auto& g : poly.generators) {
            Int value = 0;
            for (std::size_t i = 0; i < poly.dimension; ++i) {
                value += cert.functional[i] * g[i];
            }
            if (first || Rat(value) > cert.offset) {
                cert.offset = Rat(value);
            }
            first = false;
        }
    }

    if (!certificate_valid(poly, point, cert)) {
        throw std::logic_error("membership certificate failed re-validation");
    }
    return cert;
}

MembershipCertificate contains_scaled(const VPolytope& poly, const LatticePoint& point,
                                      unsigned long denominator) {
    return contains(poly, scaled_point(point, denominator));
}

namespace {

/// Integer vectors covering every lattice point of k*P: monotone-cone
/// candidates when all generators are weakly decreasing with one common
/// coordinate sum, otherwise the scaled bounding box (practical only in low
/// dimension).
std::vector<LatticePoint> dilate_candidates(const VPolytope& poly, unsigned k) {
    const std::size_t d = poly.dimension;

    bool monotone = true;
    Int common_sum = 0;
    for (std::size_t j = 0; j < poly.generators.size() && monotone; ++j) {
        const auto& g = poly.generators[j];
        Int sum = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (g[i] < 0 || (i + 1 < d && g[i] < g[i + 1])) {
                monotone = false;
                break;
            }
            sum += g[i];
        }
        if (monotone && j > 0 && sum != common_sum) {
            monotone = false;
        }
        if (j == 0) {
            common_sum = sum;
        }
    }

    if (monotone) {
        Int cap = 0;
        for (const auto& g : poly.generators) {
            if (g[0] > cap) {
                cap = g[0];
            }
        }
        return decreasing_vectors(d, Int(common_sum * k), Int(cap * k));
    }

    // Bounding-box fallback; fine for d <= 4, explodes beyond that.
    std::vector<Int> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = hi[i] = poly.generators[0][i];
        for (const auto& g : poly.generators) {
            if (g[i] < lo[i]) lo[i] = g[i];
            if (g[i] > hi[i]) hi[i] = g[i];
        }
        lo[i] *= k;
        hi[i] *= k;
    }
    Int cells = 1;
    for (std::size_t i = 0; i < d; ++i) {
        cells *= hi[i] - lo[i] + 1;
    }
    if (cells > 20'000'000) {
        throw std::runtime_error("bounding-box enumeration too large (" + cells.get_str() +
                                 " cells)");
    }

    std::vector<LatticePoint> out;
    LatticePoint cur = lo;
    while (true) {
        out.push_back(cur);
        std::size_t i = d;
        while (i > 0 && cur[i - 1] == hi[i - 1]) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < d; ++j) {
            cur[j] = lo[j];
        }
    }
    std::sort(out.begin(), out.end(), lex_greater);
    return out;
}

bool search_terms(const LatticePoint& remaining, const std::vector<LatticePoint>& unit_points,
                  const std::set<LatticePoint>& unit_set, unsigned k, std::size_t first_index,
                  std::vector<LatticePoint>& terms, unsigned long& examined) {
    if (k == 1) {
        ++examined;
        // The closing term must keep the sequence lexicographically
        // non-increasing, otherwise each multiset would be revisited.
        if (!terms.empty() && lex_greater(remaining, terms.back())) {
            return false;
        }
        if (unit_set.count(remaining) == 0) {
            return false;
        }
        terms.push_back(remaining);
        return true;
    }
    for (std::size_t i = first_index; i < unit_points.size(); ++i) {
        const auto& v = unit_points[i];
        LatticePoint rest(remaining.size());
        bool viable = true;
        for (std::size_t c = 0; c < remaining.size(); ++c) {
            rest[c] = remaining[c] - v[c];
            if (rest[c] < 0) {
                viable = false;
                break;
            }
        }
        if (!viable) {
            continue;
        }
        terms.push_back(v);
        if (search_terms(rest, unit_points, unit_set, k - 1, i, terms, examined)) {
            return true;
        }
        terms.pop_back();
    }
    return false;
}

}  // namespace

std::vector<LatticePoint> lattice_points_of_dilate(const VPolytope& poly, unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("dilate factor must be positive");
    }
    // A candidate that coincides with a generator (k = 1) is inside with the
    // trivial weight-1 witness; everything else goes through the LP.
    std::set<LatticePoint> generator_set;
    if (k == 1) {
        generator_set.insert(poly.generators.begin(), poly.generators.end());
    }
    std::vector<LatticePoint> points;
    for (auto& candidate : dilate_candidates(poly, k)) {
        if (k == 1 && generator_set.count(candidate) != 0) {
            points.push_back(std::move(candidate));
            continue;
        }
        const auto cert = contains_scaled(poly, candidate, k);
        if (cert.verdict == MembershipCertificate::Verdict::inside) {
            points.push_back(std::move(candidate));
        }
    }
    std::sort(points.begin(), points.end(), lex_greater);
    return points;
}

DecompositionSearch decompose_as_sum(const LatticePoint& point,
                                     const std::vector<LatticePoint>& unit_points, unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("decomposition needs k >= 1");
    }
    const std::set<LatticePoint> unit_set(unit_points.begin(), unit_points.end());

    DecompositionSearch result;
    std::vector<LatticePoint> terms;
    if (search_terms(point, unit_points, unit_set, k, 0, terms, result.examined)) {
        result.terms = std::move(terms);
    }
    return result;
}

DecompositionSearch decompose_as_sum(const LatticePoint& point, const VPolytope& poly,
                                     unsigned k) {
    return decompose_as_sum(point, lattice_points_of_dilate(poly, 1), k);
}

std::vector<IdpViolation> idp_check(const VPolytope& poly, unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("dilate factor must be positive");
    }
    const auto unit_points = lattice_points_of_dilate(poly, 1);
    const std::set<LatticePoint> unit_set(unit_points.begin(), unit_points.end());

    std::vector<IdpViolation> violations;
    for (auto& candidate : dilate_candidates(poly, k)) {
        unsigned long examined = 0;
        std::vector<LatticePoint> terms;
        if (search_terms(candidate, unit_points, unit_set, k, 0, terms, examined)) {
            continue;  // decomposable, hence in k*P and harmless
        }
        const auto cert = contains_scaled(poly, candidate, k);
        if (cert.verdict == MembershipCertificate::Verdict::inside) {
            violations.push_back(IdpViolation{k, std::move(candidate), examined});
        }
    }
    std::sort(violations.begin(), violations.end(),
              [](const IdpViolation& a, const IdpViolation& b) {
                  return lex_greater(a.point, b.point);
              });
    return violations;
}

}  // namespace ehrlab
