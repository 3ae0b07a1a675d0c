#include "ehrlab/gt.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ehrlab/hull.hpp"
#include "ehrlab/matrix.hpp"
#include "ehrlab/text_io.hpp"

namespace ehrlab {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition parts must be non-negative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view comma_separated) {
    std::vector<long> parts;
    std::string token;
    std::istringstream in{std::string(comma_separated)};
    while (std::getline(in, token, ',')) {
        if (!token.empty()) {
            parts.push_back(std::stol(token));
        }
    }
    return Partition(std::move(parts));
}

Partition Partition::zero(std::size_t length) {
    return Partition(std::vector<long>(length, 0));
}

long Partition::sum() const {
    long total = 0;
    for (long p : parts_) {
        total += p;
    }
    return total;
}

bool Partition::contains(const Partition& mu) const {
    const std::size_t n = std::max(length(), mu.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (mu.part(i) > part(i)) {
            return false;
        }
    }
    return true;
}

Partition Partition::scaled(long factor) const {
    if (factor < 0) {
        throw std::invalid_argument("partition scale factor must be non-negative");
    }
    std::vector<long> parts = parts_;
    for (long& p : parts) {
        p *= factor;
    }
    return Partition(std::move(parts));
}

Partition Partition::padded(std::size_t length) const {
    if (length < parts_.size()) {
        for (std::size_t i = length; i < parts_.size(); ++i) {
            if (parts_[i] != 0) {
                throw std::invalid_argument("cannot truncate a partition with nonzero parts");
            }
        }
    }
    std::vector<long> parts(parts_.begin(),
                            parts_.begin() + static_cast<long>(std::min(length, parts_.size())));
    parts.resize(length, 0);
    return Partition(std::move(parts));
}

GTPattern::GTPattern(std::vector<std::vector<long>> rows_bottom_up)
    : rows_(std::move(rows_bottom_up)) {
    if (rows_.empty()) {
        throw std::invalid_argument("pattern needs at least one row");
    }
    for (const auto& row : rows_) {
        if (row.size() != rows_[0].size()) {
            throw std::invalid_argument("pattern rows of mixed width");
        }
    }
}

std::vector<long> GTPattern::row_sums() const {
    std::vector<long> sums;
    sums.reserve(rows_.size());
    for (const auto& row : rows_) {
        long s = 0;
        for (long v : row) {
            s += v;
        }
        sums.push_back(s);
    }
    return sums;
}

std::optional<std::string> pattern_violation(const GTPattern& pattern, const Partition& lambda,
                                             const Partition& mu) {
    const std::size_t w = pattern.width();
    if (lambda.length() > w || mu.length() > w) {
        throw std::invalid_argument("boundary partition wider than the pattern");
    }
    const auto top = lambda.padded(w);
    const auto bottom = mu.padded(w);

    std::ostringstream msg;
    for (std::size_t j = 0; j < w; ++j) {
        if (pattern.row(pattern.row_count() - 1)[j] != top.part(j)) {
            msg << "top row differs from lambda at column " << j + 1;
            return msg.str();
        }
    }
    for (std::size_t j = 0; j < w; ++j) {
        if (pattern.row(0)[j] != bottom.part(j)) {
            msg << "bottom row differs from mu at column " << j + 1;
            return msg.str();
        }
    }
    for (std::size_t i = 0; i + 1 < pattern.row_count(); ++i) {
        const auto& lower = pattern.row(i);
        const auto& upper = pattern.row(i + 1);
        for (std::size_t j = 0; j < w; ++j) {
            if (upper[j] < lower[j]) {
                msg << "rows " << i + 1 << "/" << i + 2
                    << " (from bottom) break interlacing at column " << j + 1 << ": " << upper[j]
                    << " < " << lower[j];
                return msg.str();
            }
        }
        for (std::size_t j = 0; j + 1 < w; ++j) {
            if (lower[j] < upper[j + 1]) {
                msg << "rows " << i + 1 << "/" << i + 2
                    << " (from bottom) break interlacing at column " << j + 1 << ": " << lower[j]
                    << " < " << upper[j + 1];
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

bool validate_gt(const GTPattern& pattern, const Partition& lambda, const Partition& mu) {
    return !pattern_violation(pattern, lambda, mu).has_value();
}

std::optional<std::string> row_sums_violation(const GTPattern& pattern, const RowSums& w) {
    if (w.size() != pattern.row_count()) {
        std::ostringstream msg;
        msg << "row-sum vector has " << w.size() << " entries for " << pattern.row_count()
            << " rows";
        return msg.str();
    }
    const auto sums = pattern.row_sums();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (sums[i] != w[i]) {
            std::ostringstream msg;
            msg << "row " << i + 1 << " (from bottom) sums to " << sums[i] << ", expected "
                << w[i];
            return msg.str();
        }
    }
    return std::nullopt;
}

namespace {

// Walks every admissible row below `upper`: entry j ranges over
// [max(upper[j+1], mu_j), upper[j]]. Column monotonicity makes mu_j a valid
// lower bound in every row; weak decrease follows from y_j >= upper[j+1].
template <typename RowVisitor>
void for_each_row_below(const std::vector<long>& upper, const std::vector<long>& mu_floor,
                        const RowVisitor& visit) {
    const std::size_t w = upper.size();
    std::vector<long> row(w, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
        if (j == w) {
            visit(row);
            return;
        }
        const long lo = std::max(j + 1 < w ? upper[j + 1] : 0L, mu_floor[j]);
        for (long v = upper[j]; v >= lo; --v) {
            row[j] = v;
            fill(j + 1);
        }
    };
    fill(0);
}

bool interlaces_over(const std::vector<long>& upper, const std::vector<long>& lower) {
    const std::size_t w = upper.size();
    for (std::size_t j = 0; j < w; ++j) {
        if (upper[j] < lower[j]) {
            return false;
        }
    }
    for (std::size_t j = 0; j + 1 < w; ++j) {
        if (lower[j] < upper[j + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

Int enumerate_gt(const Partition& lambda, const Partition& mu, std::size_t rows) {
    if (rows < 2) {
        throw std::invalid_argument("a pattern needs at least the two boundary rows");
    }
    if (!lambda.contains(mu)) {
        throw std::invalid_argument("mu is not contained in lambda");
    }
    const std::size_t w = std::max(lambda.length(), mu.length());
    const auto top = lambda.padded(w).parts();
    const auto floor = mu.padded(w).parts();

    std::function<Int(const std::vector<long>&, std::size_t)> descend =
        [&](const std::vector<long>& upper, std::size_t below) -> Int {
        if (below == 1) {
            return interlaces_over(upper, floor) ? 1 : 0;
        }
        Int total = 0;
        for_each_row_below(upper, floor, [&](const std::vector<long>& row) {
            total += descend(row, below - 1);
        });
        return total;
    };
    return descend(top, rows - 1);
}

Int skew_schur_ones(const Partition& lambda, const Partition& mu, unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("variable count m must be positive");
    }
    const std::size_t len = std::max(lambda.length(), mu.length());
    if (len == 0) {
        return 1;
    }
    IntMatrix jt(len, len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long k =
                lambda.part(i) - mu.part(j) - static_cast<long>(i) + static_cast<long>(j);
            jt.at(i, j) = k < 0 ? Int(0) : binomial(Int(m - 1 + k), static_cast<unsigned long>(k));
        }
    }
    return jt.determinant();
}

Int weyl_dimension(const Partition& lambda, unsigned m) {
    for (std::size_t i = m; i < lambda.length(); ++i) {
        if (lambda.part(i) != 0) {
            throw std::invalid_argument("partition is longer than the variable count");
        }
    }
    Int num = 1, den = 1;
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = i + 1; j < m; ++j) {
            num *= lambda.part(i) - lambda.part(j) + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    }
    return divide_exact(num, den);
}

UniPolynomial ehrhart_gt(const Partition& lambda, const Partition& mu, unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("variable count m must be positive");
    }
    if (!lambda.contains(mu)) {
        throw std::invalid_argument("mu is not contained in lambda");
    }
    const std::size_t width = std::max(lambda.length(), mu.length());
    // Free cells of the (m+1)-row pattern bound the polytope dimension.
    const unsigned long degree_bound =
        static_cast<unsigned long>(m - 1) * static_cast<unsigned long>(width);

    std::vector<std::pair<Int, Rat>> points;
    points.reserve(degree_bound + 1);
    for (unsigned long n = 0; n <= degree_bound; ++n) {
        points.emplace_back(Int(n), Rat(skew_schur_ones(lambda.scaled(static_cast<long>(n)),
                                                        mu.scaled(static_cast<long>(n)), m)));
    }
    auto poly = interpolate_polynomial(points);

    const long extra = static_cast<long>(degree_bound) + 1;
    const Int check = skew_schur_ones(lambda.scaled(extra), mu.scaled(extra), m);
    if (poly(Int(extra)) != Rat(check)) {
        throw std::logic_error("pattern count failed the extra-sample consistency check");
    }
    return poly;
}

namespace {

template <typename PatternVisitor>
void enumerate_rowsum_patterns(const Partition& lambda, const Partition& mu, const RowSums& w,
                               const PatternVisitor& visit) {
    const std::size_t rows = w.size();
    if (rows < 2) {
        throw std::invalid_argument("a pattern needs at least the two boundary rows");
    }
    if (!lambda.contains(mu)) {
        throw std::invalid_argument("mu is not contained in lambda");
    }
    if (w.front() != mu.sum() || w.back() != lambda.sum()) {
        throw std::invalid_argument(
            "row sums disagree with the boundary: w must start at |mu| and end at |lambda|");
    }
    const std::size_t width = std::max(lambda.length(), mu.length());
    const auto top = lambda.padded(width).parts();
    const auto floor = mu.padded(width).parts();

    std::vector<std::vector<long>> grid(rows);
    grid[rows - 1] = top;
    grid[0] = floor;

    if (rows == 2) {
        if (interlaces_over(top, floor)) {
            visit(grid);
        }
        return;
    }

    // Fill rows top-down; within a row go left to right, pruning the residual
    // sum against what the remaining intervals can still carry.
    std::function<void(std::size_t)> fill_row = [&](std::size_t r) {
        if (r == 0) {
            if (interlaces_over(grid[1], floor)) {
                visit(grid);
            }
            return;
        }
        const auto& upper = grid[r + 1];
        auto& row = grid[r];
        row.assign(width, 0);

        std::vector<long> lo(width), hi(width);
        for (std::size_t j = 0; j < width; ++j) {
            lo[j] = std::max(j + 1 < width ? upper[j + 1] : 0L, floor[j]);
            hi[j] = upper[j];
        }
        std::vector<long> lo_suffix(width + 1, 0), hi_suffix(width + 1, 0);
        for (std::size_t j = width; j-- > 0;) {
            lo_suffix[j] = lo_suffix[j + 1] + lo[j];
            hi_suffix[j] = hi_suffix[j + 1] + hi[j];
        }

        std::function<void(std::size_t, long)> fill_col = [&](std::size_t j, long rest) {
            if (j == width) {
                if (rest == 0) {
                    fill_row(r - 1);
                }
                return;
            }
            for (long v = std::min(hi[j], rest - lo_suffix[j + 1]); v >= lo[j]; --v) {
                if (rest - v > hi_suffix[j + 1]) {
                    break;
                }
                row[j] = v;
                fill_col(j + 1, rest - v);
            }
        };
        fill_col(0, w[r]);
    };
    fill_row(rows - 2);
}

}  // namespace

std::vector<GTPattern> enumerate_gt_with_rowsums(const Partition& lambda, const Partition& mu,
                                                 const RowSums& w) {
    std::vector<GTPattern> out;
    enumerate_rowsum_patterns(
        lambda, mu, w, [&](const std::vector<std::vector<long>>& grid) { out.emplace_back(grid); });
    return out;
}

Int count_gt_with_rowsums(const Partition& lambda, const Partition& mu, const RowSums& w) {
    Int count = 0;
    enumerate_rowsum_patterns(lambda, mu, w,
                              [&](const std::vector<std::vector<long>>&) { ++count; });
    return count;
}

StretchedKostka stretched_kostka(const Partition& lambda, const Partition& mu, const RowSums& w,
                                 unsigned samples) {
    const std::size_t width = std::max(lambda.length(), mu.length());
    if (samples == 0) {
        // Dimension bound of the row-sum slice: free cells minus one sum
        // constraint per inner row.
        samples = static_cast<unsigned>((w.size() - 2) * (width > 0 ? width - 1 : 0));
    }

    const auto scaled_sums = [&](long n) {
        RowSums ws = w;
        for (long& s : ws) {
            s *= n;
        }
        return ws;
    };

    std::vector<std::pair<Int, Rat>> points;
    points.reserve(samples + 1);
    for (unsigned n = 0; n <= samples; ++n) {
        points.emplace_back(Int(n), Rat(count_gt_with_rowsums(lambda.scaled(n), mu.scaled(n),
                                                              scaled_sums(n))));
    }

    StretchedKostka result;
    result.polynomial = interpolate_polynomial(points);
    const long next = static_cast<long>(samples) + 1;
    const Rat fitted = result.polynomial(Int(next));
    result.actual_next =
        count_gt_with_rowsums(lambda.scaled(next), mu.scaled(next), scaled_sums(next));
    result.consistent = fitted == Rat(result.actual_next);
    result.fitted_next = fitted.get_num();  // meaningful when the fit is integral
    return result;
}

GTFaceSpec::GTFaceSpec(std::vector<std::vector<long>> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw std::invalid_argument("face layout needs at least one row");
    }
    long max_free = -1;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
        if (cells_[r].size() != cells_[0].size() - r) {
            throw std::invalid_argument("face layout rows must shrink by one");
        }
        for (long code : cells_[r]) {
            if (code < kShared) {
                throw std::invalid_argument("unknown cell code in face layout");
            }
            if (code >= 0 && code > max_free) {
                max_free = code;
            }
        }
    }
    free_cells_ = static_cast<std::size_t>(max_free + 1);
}

namespace {

std::size_t count_code(const std::vector<std::vector<long>>& cells, long code) {
    std::size_t total = 0;
    for (const auto& row : cells) {
        for (long c : row) {
            if (c == code) {
                ++total;
            }
        }
    }
    return total;
}

}  // namespace

std::size_t GTFaceSpec::pinned_top_cells() const {
    return count_code(cells_, kPinnedTop);
}

std::size_t GTFaceSpec::pinned_zero_cells() const {
    return count_code(cells_, kPinnedZero);
}

std::size_t GTFaceSpec::shared_cells() const {
    return count_code(cells_, kShared);
}

GTFaceSpec gt_face_spec(unsigned ell) {
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    const std::size_t top_width = 2 * static_cast<std::size_t>(ell) + 1;
    std::vector<std::vector<long>> code(top_width);
    for (std::size_t r = 0; r < top_width; ++r) {
        const std::size_t width = top_width - r;
        std::size_t pinned = ell - r / 2;
        const std::size_t zeros = r <= ell ? static_cast<std::size_t>(ell + 1 - r) : 0;
        const bool diagonal = r >= 2 && r % 2 == 0;
        if (ell == 1 && r == 1) {
            // Smallest family member: the shared region would otherwise be
            // empty and the stated bijection could not hold.
            pinned = 0;
        }
        code[r].assign(width, GTFaceSpec::kShared);
        for (std::size_t j = 0; j < pinned; ++j) {
            code[r][j] = GTFaceSpec::kPinnedTop;
        }
        if (diagonal) {
            code[r][pinned] = static_cast<long>(r / 2 - 1);
        }
        for (std::size_t j = width - zeros; j < width; ++j) {
            code[r][j] = GTFaceSpec::kPinnedZero;
        }
    }
    return GTFaceSpec(std::move(code));
}

Int face_lattice_points(const GTFaceSpec& spec, unsigned n) {
    const auto& code = spec.cells();
    const std::size_t top_width = code[0].size();

    double budget = 1;
    for (std::size_t i = 0; i <= spec.free_cell_count(); ++i) {
        budget *= n + 1;
    }
    if (budget > 5e7) {
        throw std::runtime_error("face enumeration too large for direct counting");
    }

    // Direct enumeration of the free values; every interlacing constraint of
    // the materialized triangle is checked, nothing about the region shapes
    // is assumed beyond the layout itself.
    std::vector<long> assignment(spec.free_cell_count() + 1, 0);  // [0] = shared value
    std::vector<std::vector<long>> cells(code.size());
    for (std::size_t r = 0; r < code.size(); ++r) {
        cells[r].resize(top_width - r);
    }

    const auto admissible = [&]() {
        for (std::size_t r = 0; r < code.size(); ++r) {
            for (std::size_t j = 0; j < code[r].size(); ++j) {
                const long c = code[r][j];
                if (c == GTFaceSpec::kPinnedTop) {
                    cells[r][j] = static_cast<long>(n);
                } else if (c == GTFaceSpec::kPinnedZero) {
                    cells[r][j] = 0;
                } else if (c == GTFaceSpec::kShared) {
                    cells[r][j] = assignment[0];
                } else {
                    cells[r][j] = assignment[1 + static_cast<std::size_t>(c)];
                }
            }
        }
        for (std::size_t r = 0; r + 1 < code.size(); ++r) {
            const auto& upper = cells[r];
            const auto& lower = cells[r + 1];
            for (std::size_t j = 0; j < lower.size(); ++j) {
                if (upper[j] < lower[j] || lower[j] < upper[j + 1]) {
                    return false;
                }
            }
        }
        return true;
    };

    Int count = 0;
    std::function<void(std::size_t)> sweep = [&](std::size_t idx) {
        if (idx == assignment.size()) {
            if (admissible()) {
                ++count;
            }
            return;
        }
        for (long v = 0; v <= static_cast<long>(n); ++v) {
            assignment[idx] = v;
            sweep(idx + 1);
        }
    };
    sweep(0);
    return count;
}

Int face_example_count(unsigned ell, unsigned n) {
    return face_lattice_points(gt_face_spec(ell), n);
}

GTPattern read_gt_pattern(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) {
        throw std::invalid_argument("empty pattern file");
    }
    std::size_t rows = 0, width = 0;
    {
        std::istringstream head(lines[0]);
        if (!(head >> rows >> width) || rows == 0 || width == 0) {
            throw std::invalid_argument("pattern file must start with 'rows width'");
        }
    }
    if (lines.size() - 1 != rows) {
        throw std::invalid_argument("pattern file has " + std::to_string(lines.size() - 1) +
                                    " rows, header says " + std::to_string(rows));
    }
    std::vector<std::vector<long>> grid;
    grid.reserve(rows);
    for (std::size_t i = 1; i <= rows; ++i) {
        std::istringstream row_in(lines[i]);
        std::vector<long> row;
        long v = 0;
        while (row_in >> v) {
            row.push_back(v);
        }
        if (row.size() != width) {
            throw std::invalid_argument("pattern row " + std::to_string(i) + " has " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(width));
        }
        grid.push_back(std::move(row));
    }
    return GTPattern(std::move(grid));
}

GTPattern read_gt_pattern_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return read_gt_pattern(in);
}

Partition counterexample36_lambda() {
    return Partition({4, 4, 4, 4, 3, 3, 2, 2, 2});
}

Partition counterexample36_mu() {
    return Partition({2, 0, 0, 0, 0, 0, 0, 0, 0});
}

RowSums counterexample36_row_sums() {
    return {2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20, 22, 23, 25, 27, 28};
}

bool CounterexampleReport::all_pass() const {
    for (const auto& check : checks) {
        if (!check.pass) {
            return false;
        }
    }
    return !checks.empty();
}

namespace {

template <typename Row>
std::string row_text(const Row& row) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? "," : "") << row[j];
    }
    out << ")";
    return out.str();
}

}  // namespace

CounterexampleReport verify_counterexample_36(const GTPattern& doubled,
                                              const std::vector<GTPattern>& summands,
                                              const Partition& lambda, const Partition& mu,
                                              const RowSums& w, long unit_row_sum) {
    CounterexampleReport report;

    const auto structural_check = [&](const std::string& name, const GTPattern& pattern,
                                      const Partition& top, const Partition& bottom,
                                      const RowSums& sums) {
        VerifierCheck check{name, false, ""};
        try {
            auto bad = pattern_violation(pattern, top, bottom);
            if (!bad) {
                bad = row_sums_violation(pattern, sums);
            }
            check.pass = !bad.has_value();
            check.detail = bad ? *bad : "boundary, interlacing and row sums verified";
        } catch (const std::exception& e) {
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    };

    RowSums doubled_sums = w;
    for (long& s : doubled_sums) {
        s *= 2;
    }
    structural_check("pattern G is a valid point of the doubled polytope", doubled,
                     lambda.scaled(2), mu.scaled(2), doubled_sums);
    for (std::size_t i = 0; i < summands.size(); ++i) {
        structural_check("summand G" + std::to_string(i + 1) + " is a valid pattern", summands[i],
                         lambda, mu, w);
    }

    {
        VerifierCheck check{"2*G equals the entrywise sum of the summands", false, ""};
        bool shapes_ok = !summands.empty();
        for (const auto& s : summands) {
            if (s.row_count() != doubled.row_count() || s.width() != doubled.width()) {
                shapes_ok = false;
            }
        }
        if (!shapes_ok) {
            check.detail = "summands and G disagree on pattern shape";
        } else {
            check.pass = true;
            check.detail = "exact equality on all " + std::to_string(doubled.row_count()) + "x" +
                           std::to_string(doubled.width()) + " entries";
            for (std::size_t r = 0; r < doubled.row_count() && check.pass; ++r) {
                for (std::size_t j = 0; j < doubled.width(); ++j) {
                    long sum = 0;
                    for (const auto& s : summands) {
                        sum += s.row(r)[j];
                    }
                    if (sum != 2 * doubled.row(r)[j]) {
                        std::ostringstream msg;
                        msg << "row " << r + 1 << " (from bottom) column " << j + 1
                            << ": 2*G = " << 2 * doubled.row(r)[j] << " but the summands give "
                            << sum;
                        check.pass = false;
                        check.detail = msg.str();
                        break;
                    }
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        VerifierCheck check{"distinguished row has no two-term split", false, ""};
        std::size_t located = w.size();
        bool unique = true;
        for (std::size_t r = 0; r < w.size(); ++r) {
            if (w[r] == unit_row_sum) {
                if (located != w.size()) {
                    unique = false;
                }
                located = r;
            }
        }
        if (located == w.size() || !unique) {
            check.detail = "no unique row with prescribed sum " + std::to_string(unit_row_sum);
        } else if (located >= doubled.row_count()) {
            check.detail = "row index out of range for G";
        } else {
            const auto& row = doubled.row(located);
            report.distinguished_row = row;
            LatticePoint point(row.begin(), row.end());
            const auto poly = partition_polytope(static_cast<unsigned>(unit_row_sum),
                                                 static_cast<unsigned>(doubled.width()));
            const auto search = decompose_as_sum(point, poly, 2);
            report.decompositions_examined = search.examined;

            if (search.terms) {
                const auto& t = *search.terms;
                check.detail = "row " + row_text(row) + " splits as " + row_text(t[0]) + " + " +
                               row_text(t[1]);
            } else {
                std::ostringstream msg;
                msg << "row " << row_text(row) << " admits no split into two partitions of "
                    << unit_row_sum << " with at most " << doubled.width() << " parts ("
                    << search.examined << " candidates examined)";
                check.pass = true;
                check.detail = msg.str();
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace ehrlab
