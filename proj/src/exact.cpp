#include "ehrlab/exact.hpp"

#include <stdexcept>

namespace ehrlab {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

std::string rat_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_string(const Int& n) {
    return n.get_str();
}

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Int parse_int(std::string_view text) {
    Int n;
    if (text.empty() || mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), 10) != 0) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return n;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, unsigned long k) {
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= n - static_cast<long>(i);
    }
    return divide_exact(num, factorial(k));
}

Int divide_exact(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::runtime_error("exact division by zero");
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw std::runtime_error("division expected to be exact has remainder " + r.get_str());
    }
    return q;
}

}  // namespace ehrlab
