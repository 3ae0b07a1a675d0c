#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ehrlab {

// Arbitrary-precision integer and rational scalars. All arithmetic is exact;
// rationals are kept in lowest terms with positive denominator (gmp's
// canonical form, enforced on every construction path below).
using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument on zero denominator.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

bool is_integer(const Rat& q);

/// Renders "p/q" in lowest terms with q > 0; integers render as "p/1".
std::string rat_string(const Rat& q);
std::string int_string(const Int& n);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on junk.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

Int factorial(unsigned long n);

/// Generalized binomial via falling factorial / k!; zero when 0 <= n < k.
Int binomial(const Int& n, unsigned long k);

/// Exact quotient; throws std::runtime_error if den does not divide num.
Int divide_exact(const Int& num, const Int& den);

}  // namespace ehrlab
