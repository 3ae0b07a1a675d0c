#include "ehrlab/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ehrlab {

UniPolynomial::UniPolynomial(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

UniPolynomial UniPolynomial::constant(const Rat& value) {
    return UniPolynomial({value});
}

UniPolynomial UniPolynomial::monomial(std::size_t degree, const Rat& coefficient) {
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coefficient;
    return UniPolynomial(std::move(c));
}

void UniPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rat UniPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat UniPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rat UniPolynomial::operator()(const Int& x) const {
    return (*this)(Rat(x));
}

Rat UniPolynomial::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPolynomial& UniPolynomial::operator*=(const UniPolynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

UniPolynomial& UniPolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

std::vector<std::string> UniPolynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(rat_string(c));
    }
    return out;
}

UniPolynomial UniPolynomial::from_strings(const std::vector<std::string>& coefficients) {
    std::vector<Rat> c;
    c.reserve(coefficients.size());
    for (const auto& s : coefficients) {
        c.push_back(parse_rat(s));
    }
    return UniPolynomial(std::move(c));
}

std::string UniPolynomial::pretty(std::string_view variable) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rat& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1) && k > 0;
        if (!unit) {
            out << mag.get_num().get_str();
            if (mag.get_den() != 1) out << "/" << mag.get_den().get_str();
        }
        if (k > 0) {
            if (!unit) out << "*";
            out << variable;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

UniPolynomial interpolate_polynomial(const std::vector<std::pair<Int, Rat>>& points) {
    if (points.empty()) {
        throw std::invalid_argument("interpolation needs at least one point");
    }
    std::set<Int> seen;
    for (const auto& [x, y] : points) {
        if (!seen.insert(x).second) {
            throw std::invalid_argument("degenerate interpolation nodes");
        }
    }

    // Newton divided differences, then expansion of the Newton basis.
    const std::size_t n = points.size();
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = points[i].second;
    }
    std::vector<Rat> coeffs(n);
    coeffs[0] = dd[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            dd[i] = (dd[i + 1] - dd[i]) / Rat(points[i + level].first - points[i].first);
        }
        coeffs[level] = dd[0];
    }

    UniPolynomial result;
    UniPolynomial basis = UniPolynomial::constant(Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        result += basis * coeffs[k];
        basis *= UniPolynomial({Rat(-points[k].first), Rat(1)});
    }
    return result;
}

UniPolynomial power_sum_polynomial(unsigned long ell) {
    std::vector<std::pair<Int, Rat>> points;
    points.reserve(ell + 2);
    Int running = 0;
    for (unsigned long n = 0; n <= ell + 1; ++n) {
        Int term;
        mpz_ui_pow_ui(term.get_mpz_t(), n + 1, ell);
        running += term;
        points.emplace_back(Int(n), Rat(running));
    }
    return interpolate_polynomial(points);
}

}  // namespace ehrlab
