#include "ehrlab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ehrlab {

namespace {

constexpr unsigned kMaxScanSize = 7;

// FNV-1a, 64 bit; folded in deterministic order so that parallel and serial
// runs agree byte for byte.
struct Digest {
    std::uint64_t state = 14695981039346656037ull;

    void feed(std::string_view text) {
        for (unsigned char c : text) {
            state ^= c;
            state *= 1099511628211ull;
        }
    }

    std::string hex() const {
        std::ostringstream out;
        out << std::hex << state;
        return out.str();
    }
};

using Key = std::vector<long>;

// Isomorphism-invariant refinement key per element: degree data first, then
// one round of neighborhood refinement.
std::vector<Key> element_keys(const Poset& p) {
    const int n = static_cast<int>(p.size());
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
        keys[v] = {std::popcount(p.below(v)), std::popcount(p.above(v))};
    }
    std::vector<Key> refined(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Key> below_keys, above_keys;
        for (int u = 0; u < n; ++u) {
            if (u == v) {
                continue;
            }
            if (p.less_equal(u, v)) {
                below_keys.push_back(keys[u]);
            }
            if (p.less_equal(v, u)) {
                above_keys.push_back(keys[u]);
            }
        }
        std::sort(below_keys.begin(), below_keys.end());
        std::sort(above_keys.begin(), above_keys.end());
        refined[v] = keys[v];
        for (const auto& k : below_keys) {
            refined[v].insert(refined[v].end(), k.begin(), k.end());
            refined[v].push_back(-1);
        }
        refined[v].push_back(-2);
        for (const auto& k : above_keys) {
            refined[v].insert(refined[v].end(), k.begin(), k.end());
            refined[v].push_back(-1);
        }
    }
    return refined;
}

std::string bytes_under(const Poset& p, const std::vector<int>& perm) {
    const std::size_t n = p.size();
    std::string bytes(n * n, '0');
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (p.less_equal(perm[a], perm[b])) {
                bytes[a * n + b] = '1';
            }
        }
    }
    return bytes;
}

std::string minimal_bytes(const Poset& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) {
        return "";
    }
    const auto keys = element_keys(p);

    // Elements grouped into blocks of equal key, blocks ordered by key; the
    // minimum is taken over all block-respecting relabelings.
    std::map<Key, std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) {
        blocks[keys[v]].push_back(v);
    }
    std::vector<std::vector<int>> arrangement;
    arrangement.reserve(blocks.size());
    for (auto& [key, members] : blocks) {
        arrangement.push_back(members);  // each already sorted by element id
    }

    std::string best;
    std::vector<int> perm;
    perm.reserve(n);
    while (true) {
        perm.clear();
        for (const auto& block : arrangement) {
            perm.insert(perm.end(), block.begin(), block.end());
        }
        std::string bytes = bytes_under(p, perm);
        if (best.empty() || bytes < best) {
            best = std::move(bytes);
        }
        // Odometer step over the per-block permutations.
        std::size_t i = 0;
        while (i < arrangement.size() &&
               !std::next_permutation(arrangement[i].begin(), arrangement[i].end())) {
            ++i;
        }
        if (i == arrangement.size()) {
            break;
        }
    }
    return best;
}

Poset poset_from_bytes(std::size_t n, const std::string& bytes) {
    std::vector<ElementSet> below(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (bytes[a * n + b] == '1') {
                below[b] |= ElementSet{1} << a;
            }
        }
    }
    return Poset::from_relation(std::move(below));
}

}  // namespace

CanonicalPoset::CanonicalPoset(const Poset& p) : size_(p.size()), bytes_(minimal_bytes(p)) {}

Poset CanonicalPoset::to_poset() const {
    return poset_from_bytes(size_, bytes_);
}

std::vector<CanonicalPoset> enumerate_posets(unsigned n) {
    if (n < 1 || n > kMaxScanSize) {
        throw std::invalid_argument(
            "poset enumeration is capped at 7 elements (2045 isomorphism classes); larger sizes "
            "grow too fast for exhaustive scanning");
    }

    std::vector<std::string> current = {"1"};  // the one-element poset
    for (unsigned size = 1; size < n; ++size) {
        std::set<std::string> next;
        for (const auto& bytes : current) {
            const Poset p = poset_from_bytes(size, bytes);
            const IdealLattice lattice(p);
            for (const ElementSet down_set : lattice.ideals()) {
                // New maximal element above exactly this down-set.
                std::vector<ElementSet> below(size + 1, 0);
                for (unsigned v = 0; v < size; ++v) {
                    below[v] = p.below(static_cast<int>(v));
                }
                below[size] = down_set | (ElementSet{1} << size);
                const Poset grown = Poset::from_relation(std::move(below));
                next.insert(minimal_bytes(grown));
            }
        }
        current.assign(next.begin(), next.end());
    }

    std::vector<CanonicalPoset> out;
    out.reserve(current.size());
    for (const auto& bytes : current) {
        out.emplace_back(poset_from_bytes(n, bytes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Runs worker(first, last) over deterministic slices of [0, count).
void run_sliced(std::size_t count, unsigned jobs,
                const std::function<void(std::size_t, std::size_t)>& worker) {
    if (jobs <= 1 || count <= 1) {
        worker(0, count);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        const std::size_t first = count * t / used;
        const std::size_t last = count * (t + 1) / used;
        threads.emplace_back([&worker, first, last] { worker(first, last); });
    }
    for (auto& thread : threads) {
        thread.join();
    }
}

}  // namespace

NegativeCoefficientScan scan_negative_coefficients(unsigned max_size, unsigned jobs) {
    if (max_size < 1 || max_size > kMaxScanSize) {
        throw std::invalid_argument("negative-coefficient scan is capped at 7 elements");
    }
    const auto start = std::chrono::steady_clock::now();

    NegativeCoefficientScan report;
    report.max_size = max_size;
    report.jobs = jobs;

    Digest digest;
    for (unsigned size = 1; size <= max_size; ++size) {
        const auto posets = enumerate_posets(size);
        report.examined += posets.size();

        struct SlotResult {
            std::string item_digest;
            std::vector<NegativeCoefficientViolation> violations;
        };
        std::vector<SlotResult> slots(posets.size());
        run_sliced(posets.size(), jobs, [&](std::size_t first, std::size_t last) {
            for (std::size_t i = first; i < last; ++i) {
                const auto poly = ehrhart_order_polytope(posets[i].to_poset());
                std::ostringstream item;
                item << posets[i].bytes() << ":";
                for (const auto& c : poly.coefficients()) {
                    item << rat_string(c) << ",";
                }
                slots[i].item_digest = item.str();
                for (std::size_t deg = 0; deg < poly.coefficients().size(); ++deg) {
                    if (poly.coefficients()[deg] < 0) {
                        slots[i].violations.push_back(NegativeCoefficientViolation{
                            size, posets[i].bytes(), deg, poly.coefficients()[deg]});
                    }
                }
            }
        });
        for (auto& slot : slots) {
            digest.feed(slot.item_digest);
            for (auto& violation : slot.violations) {
                report.violations.push_back(std::move(violation));
            }
        }
    }

    report.checksum = digest.hex();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Int partition_count(unsigned long n, unsigned long max_parts) {
    // p(n, k): partitions of n into at most k parts.
    std::vector<Int> row(n + 1, Int(0));
    row[0] = 1;
    for (unsigned long part = 1; part <= max_parts; ++part) {
        for (unsigned long total = part; total <= n; ++total) {
            row[total] += row[total - part];
        }
    }
    return row[n];
}

IdpScan scan_idp_partition_polytopes(unsigned max_a, unsigned max_b, unsigned dilate,
                                     unsigned jobs) {
    if (max_a < 1 || max_b < 1 || max_a > 18 || max_b > 9) {
        throw std::invalid_argument("partition-polytope scan is capped at a <= 18, b <= 9");
    }
    if (dilate < 1) {
        throw std::invalid_argument("dilate must be positive");
    }
    const auto start = std::chrono::steady_clock::now();

    IdpScan report;
    report.max_a = max_a;
    report.max_b = max_b;
    report.dilate = dilate;
    report.jobs = jobs;
    report.points_examined = 0;

    struct Cell {
        unsigned a, b;
    };
    std::vector<Cell> cells;
    for (unsigned a = 1; a <= max_a; ++a) {
        for (unsigned b = 1; b <= max_b; ++b) {
            cells.push_back({a, b});
        }
    }
    report.cells_examined = cells.size();

    struct SlotResult {
        std::vector<IdpGridViolation> violations;
        Int candidates;
    };
    std::vector<SlotResult> slots(cells.size());
    run_sliced(cells.size(), jobs, [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            const auto [a, b] = cells[i];
            auto violations = idp_check(partition_polytope(a, b), dilate);
            for (auto& v : violations) {
                slots[i].violations.push_back(IdpGridViolation{a, b, std::move(v)});
            }
            slots[i].candidates = partition_count(static_cast<unsigned long>(a) * dilate, b);
        }
    });

    Digest digest;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::ostringstream item;
        item << cells[i].a << "x" << cells[i].b << ":" << slots[i].candidates.get_str() << ":";
        for (const auto& v : slots[i].violations) {
            for (const auto& c : v.violation.point) {
                item << c.get_str() << ",";
            }
            item << ";";
        }
        digest.feed(item.str());
        report.points_examined += slots[i].candidates;
        for (auto& v : slots[i].violations) {
            report.violations.push_back(std::move(v));
        }
    }

    report.checksum = digest.hex();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ehrlab
