#include "ehrlab/poset.hpp"

#include "ehrlab/text_io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ehrlab {

namespace {

constexpr std::size_t kMaxElements = 64;

void check_size(std::size_t n) {
    if (n > kMaxElements) {
        throw std::invalid_argument("poset too large: " + std::to_string(n) +
                                    " elements (limit " + std::to_string(kMaxElements) + ")");
    }
}

std::vector<ElementSet> above_from_below(const std::vector<ElementSet>& below) {
    std::vector<ElementSet> above(below.size(), 0);
    for (std::size_t v = 0; v < below.size(); ++v) {
        for (std::size_t u = 0; u < below.size(); ++u) {
            if ((below[v] >> u) & 1u) {
                above[u] |= ElementSet{1} << v;
            }
        }
    }
    return above;
}

}  // namespace

Poset::Poset(std::size_t size) : below_(size), above_(size) {
    check_size(size);
    for (std::size_t v = 0; v < size; ++v) {
        below_[v] = above_[v] = ElementSet{1} << v;
    }
}

Poset Poset::from_covers(std::size_t size, const std::vector<std::pair<int, int>>& covers) {
    check_size(size);
    std::vector<std::vector<int>> preds(size);
    std::vector<int> indegree(size, 0);
    for (const auto& [a, b] : covers) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size ||
            static_cast<std::size_t>(b) >= size) {
            throw std::invalid_argument("cover relation references an element out of range");
        }
        if (a == b) {
            throw std::invalid_argument("relation has a cycle");
        }
        preds[b].push_back(a);
        ++indegree[b];
    }

    // Kahn order over the cover digraph a -> b.
    std::vector<int> queue;
    for (std::size_t v = 0; v < size; ++v) {
        if (indegree[v] == 0) {
            queue.push_back(static_cast<int>(v));
        }
    }
    std::vector<std::vector<int>> succs(size);
    for (const auto& [a, b] : covers) {
        succs[a].push_back(b);
    }
    std::vector<int> topo;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        topo.push_back(v);
        for (int w : succs[v]) {
            if (--indegree[w] == 0) {
                queue.push_back(w);
            }
        }
    }
    if (topo.size() != size) {
        throw std::invalid_argument("relation has a cycle");
    }

    std::vector<ElementSet> below(size, 0);
    for (int v : topo) {
        ElementSet acc = ElementSet{1} << v;
        for (int u : preds[v]) {
            acc |= below[u];
        }
        below[v] = acc;
    }
    auto above = above_from_below(below);
    return Poset(std::move(below), std::move(above));
}

Poset Poset::from_relation(std::vector<ElementSet> below) {
    const std::size_t n = below.size();
    check_size(n);
    const ElementSet universe = n == 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (below[v] & ~universe) {
            throw std::invalid_argument("relation references an element out of range");
        }
        if (!((below[v] >> v) & 1u)) {
            throw std::invalid_argument("relation is not reflexive");
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (u == v || !((below[v] >> u) & 1u)) {
                continue;
            }
            if ((below[u] >> v) & 1u) {
                throw std::invalid_argument("relation is not antisymmetric");
            }
            if ((below[u] | below[v]) != below[v]) {
                throw std::invalid_argument("relation is not transitive");
            }
        }
    }
    auto above = above_from_below(below);
    return Poset(std::move(below), std::move(above));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    const int n = static_cast<int>(size());
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            if (!less(a, b)) {
                continue;
            }
            // a covered by b iff nothing sits strictly between.
            const ElementSet between = (below_[b] & above_[a]) &
                                       ~((ElementSet{1} << a) | (ElementSet{1} << b));
            if (between == 0) {
                covers.emplace_back(a, b);
            }
        }
    }
    return covers;
}

std::string Poset::relation_bytes() const {
    const std::size_t n = size();
    std::string bytes(n * n, '0');
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (less_equal(static_cast<int>(a), static_cast<int>(b))) {
                bytes[a * n + b] = '1';
            }
        }
    }
    return bytes;
}

YoungShape::YoungShape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("shape parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("shape parts must be weakly decreasing");
        }
    }
}

std::vector<int> YoungShape::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(parts_[0], 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) {
            ++conj[j];
        }
    }
    return conj;
}

std::size_t YoungShape::box_count() const {
    std::size_t total = 0;
    for (int part : parts_) {
        total += static_cast<std::size_t>(part);
    }
    return total;
}

YoungShape YoungShape::parse(std::string_view comma_separated) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in{std::string(comma_separated)};
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        parts.push_back(std::stoi(token));
    }
    return YoungShape(std::move(parts));
}

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
    const int n = static_cast<int>(parent_.size());
    if (n == 0) {
        throw std::invalid_argument("tree must have at least one node");
    }
    for (int v = 0; v < n; ++v) {
        if (parent_[v] == -1) {
            if (root_ != -1) {
                throw std::invalid_argument("tree has more than one root");
            }
            root_ = v;
        } else if (parent_[v] < 0 || parent_[v] >= n) {
            throw std::invalid_argument("tree parent out of range");
        }
    }
    if (root_ == -1) {
        throw std::invalid_argument("tree has no root");
    }
    // Every node must reach the root without revisiting anything.
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        int u = v;
        while (u != root_) {
            u = parent_[u];
            if (++steps > n) {
                throw std::invalid_argument("tree parent map has a cycle");
            }
        }
    }
}

std::vector<int> RootedTree::subtree_sizes() const {
    const int n = static_cast<int>(size());
    std::vector<int> sizes(n, 1);
    // Accumulate child counts bottom-up by depth.
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v) {
        int u = v;
        while (u != root_) {
            u = parent_[u];
            ++depth[v];
        }
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
    for (int v : order) {
        if (v != root_) {
            sizes[parent_[v]] += sizes[v];
        }
    }
    return sizes;
}

IdealLattice::IdealLattice(const Poset& p, std::size_t max_ideals)
    : element_count_(p.size()) {
    const int n = static_cast<int>(p.size());

    // Elements in a linear extension order; then a depth-first sweep decides
    // in/out per element. Excluding an element forbids everything above it,
    // so every leaf is a distinct down-set.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ca = std::popcount(p.below(a));
        const int cb = std::popcount(p.below(b));
        return ca != cb ? ca < cb : a < b;
    });

    std::function<void(int, ElementSet, ElementSet)> sweep =
        [&](int pos, ElementSet ideal, ElementSet forbidden) {
            if (pos == n) {
                if (ideals_.size() >= max_ideals) {
                    throw std::runtime_error(
                        "ideal lattice exceeds the cap of " + std::to_string(max_ideals) +
                        " ideals; the poset is too wide for lattice-based counting");
                }
                ideals_.push_back(ideal);
                return;
            }
            const int v = order[pos];
            const ElementSet bit = ElementSet{1} << v;
            if (!(forbidden & bit)) {
                sweep(pos + 1, ideal | bit, forbidden);
            }
            sweep(pos + 1, ideal, forbidden | p.above(v));
        };
    sweep(0, 0, 0);

    std::sort(ideals_.begin(), ideals_.end(), [](ElementSet a, ElementSet b) {
        const int ca = std::popcount(a);
        const int cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
}

Poset poset_from_shape(const YoungShape& shape) {
    const auto& parts = shape.parts();
    std::vector<std::vector<int>> id(parts.size());
    int next = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        id[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j) {
            id[i][j] = next++;
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            if (j + 1 < parts[i]) {
                covers.emplace_back(id[i][j], id[i][j + 1]);
            }
            if (i + 1 < parts.size() && j < parts[i + 1]) {
                covers.emplace_back(id[i][j], id[i + 1][j]);
            }
        }
    }
    return Poset::from_covers(static_cast<std::size_t>(next), covers);
}

Poset poset_from_example21(unsigned ell) {
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    std::vector<std::pair<int, int>> covers;
    covers.reserve(ell);
    for (unsigned i = 1; i <= ell; ++i) {
        covers.emplace_back(0, static_cast<int>(i));
    }
    return Poset::from_covers(ell + 1, covers);
}

Poset poset_from_tree(const RootedTree& tree) {
    std::vector<std::pair<int, int>> covers;
    for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
        if (v != tree.root()) {
            covers.emplace_back(tree.parent(v), v);
        }
    }
    return Poset::from_covers(tree.size(), covers);
}

std::vector<Int> order_polynomial_values(const Poset& p, unsigned long t_max) {
    std::vector<Int> values;
    values.reserve(t_max + 1);
    values.emplace_back(1);  // only the zero map lands in {0}
    if (t_max == 0) {
        return values;
    }

    const IdealLattice lattice(p);
    const auto& ideals = lattice.ideals();
    const std::size_t m = ideals.size();

    // chains[i] counts multichains D_1 <= ... <= D_t ending at ideal i.
    std::vector<Int> chains(m, Int(1));
    Int total = static_cast<unsigned long>(m);
    values.push_back(total);
    for (unsigned long t = 2; t <= t_max; ++t) {
        std::vector<Int> next(m, Int(0));
        for (std::size_t i = 0; i < m; ++i) {
            const ElementSet upper = ideals[i];
            Int acc = 0;
            for (std::size_t j = 0; j <= i; ++j) {
                if ((ideals[j] & upper) == ideals[j]) {
                    acc += chains[j];
                }
            }
            next[i] = std::move(acc);
        }
        chains = std::move(next);
        total = 0;
        for (const auto& c : chains) {
            total += c;
        }
        values.push_back(total);
    }
    return values;
}

Int order_polynomial_value(const Poset& p, unsigned long t) {
    return order_polynomial_values(p, t).back();
}

UniPolynomial ehrhart_order_polytope(const Poset& p) {
    const unsigned long n = p.size();
    const auto values = order_polynomial_values(p, n);
    std::vector<std::pair<Int, Rat>> points;
    points.reserve(n + 1);
    for (unsigned long t = 0; t <= n; ++t) {
        points.emplace_back(Int(t), Rat(values[t]));
    }
    return interpolate_polynomial(points);
}

Int linear_extensions(const Poset& p) {
    const IdealLattice lattice(p);
    const auto& ideals = lattice.ideals();
    const int n = static_cast<int>(p.size());
    const ElementSet full = n == 0 ? 0 : (n == 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1);

    std::unordered_map<ElementSet, std::size_t> index;
    index.reserve(ideals.size() * 2);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        index.emplace(ideals[i], i);
    }

    std::vector<Int> paths(ideals.size(), Int(0));
    paths[0] = 1;  // ideals[0] is the empty ideal (sorted by popcount)
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (paths[i] == 0) {
            continue;
        }
        const ElementSet ideal = ideals[i];
        for (int v = 0; v < n; ++v) {
            const ElementSet bit = ElementSet{1} << v;
            if (ideal & bit) {
                continue;
            }
            if ((p.below(v) & ~bit & ~ideal) == 0) {
                paths[index.at(ideal | bit)] += paths[i];
            }
        }
    }
    return paths[index.at(full)];
}

HookMultiset hook_multiset_shape(const YoungShape& shape) {
    const auto& parts = shape.parts();
    const auto conj = shape.conjugate();
    HookMultiset hooks;
    hooks.reserve(shape.box_count());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            hooks.push_back(parts[i] + conj[j] - static_cast<int>(i) - j - 1);
        }
    }
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

HookMultiset hook_multiset_tree(const RootedTree& tree) {
    HookMultiset hooks = tree.subtree_sizes();
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

namespace {

Int hook_quotient(std::size_t n, const HookMultiset& hooks) {
    Int product = 1;
    for (int h : hooks) {
        product *= h;
    }
    return divide_exact(factorial(n), product);
}

}  // namespace

Int hook_formula_count(const YoungShape& shape) {
    return hook_quotient(shape.box_count(), hook_multiset_shape(shape));
}

Int hook_formula_count_tree(const RootedTree& tree) {
    return hook_quotient(tree.size(), hook_multiset_tree(tree));
}

Int slice_count(const Poset& p, unsigned long k) {
    if (k == 0) {
        return 1;
    }
    const int n = static_cast<int>(p.size());
    const IdealLattice lattice(p);

    // A map f with sum k corresponds to a multichain D_1 <= ... <= D_k of
    // down-sets with total deficit sum_j (n - |D_j|) equal to k, so only
    // ideals missing at most k elements can appear.
    std::vector<ElementSet> masks;
    std::vector<unsigned long> deficit;
    for (ElementSet ideal : lattice.ideals()) {
        const unsigned long d = n - std::popcount(ideal);
        if (d <= k) {
            masks.push_back(ideal);
            deficit.push_back(d);
        }
    }
    const std::size_t m = masks.size();
    const std::size_t width = k + 1;

    std::vector<Int> state(m * width, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        state[i * width + deficit[i]] = 1;
    }
    for (unsigned long level = 2; level <= k; ++level) {
        std::vector<Int> next(m * width, Int(0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if ((masks[i] & masks[j]) != masks[i]) {
                    continue;  // need D_level-1 = masks[i] contained in masks[j]
                }
                for (unsigned long s = 0; s + deficit[j] <= k; ++s) {
                    const Int& cur = state[i * width + s];
                    if (cur != 0) {
                        next[j * width + s + deficit[j]] += cur;
                    }
                }
            }
        }
        state = std::move(next);
    }

    Int total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        total += state[i * width + k];
    }
    return total;
}

Poset read_poset(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) {
        throw std::invalid_argument("empty poset file");
    }
    std::size_t n = 0;
    {
        std::istringstream head(lines[0]);
        if (!(head >> n)) {
            throw std::invalid_argument("poset file must start with the element count");
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream rel(lines[i]);
        int a = 0, b = 0;
        std::string op;
        if (!(rel >> a >> op >> b) || op != "<") {
            throw std::invalid_argument("malformed cover line: '" + lines[i] + "'");
        }
        covers.emplace_back(a - 1, b - 1);
    }
    return Poset::from_covers(n, covers);
}

RootedTree read_tree(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) {
        throw std::invalid_argument("empty tree file");
    }
    std::size_t n = 0;
    {
        std::istringstream head(lines[0]);
        if (!(head >> n)) {
            throw std::invalid_argument("tree file must start with the node count");
        }
    }
    std::vector<int> parent(n, -1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream rel(lines[i]);
        int child = 0, par = 0;
        if (!(rel >> child >> par)) {
            throw std::invalid_argument("malformed tree line: '" + lines[i] + "'");
        }
        if (child < 1 || par < 1 || static_cast<std::size_t>(child) > n ||
            static_cast<std::size_t>(par) > n) {
            throw std::invalid_argument("tree line references a node out of range");
        }
        if (parent[child - 1] != -1) {
            throw std::invalid_argument("node listed with two parents");
        }
        parent[child - 1] = par - 1;
    }
    return RootedTree(std::move(parent));
}

Poset read_poset_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return read_poset(in);
}

RootedTree read_tree_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return read_tree(in);
}

}  // namespace ehrlab
