#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exdiv {

/// Exact rational number. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Thrown when a textual rational does not match the "p/q" grammar.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown on integer overflow in checked arithmetic.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Parses "p", "-p", "+p", "p/q", "-p/q". No whitespace; q > 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Floor division and its non-negative residue: a = q*n + t, 0 <= t < n.
struct EuclidDivision {
    std::int64_t quotient;
    std::int64_t remainder;
};
EuclidDivision euclid_div(std::int64_t a, std::int64_t n);

/// t_n(a): the representative of a modulo n in {0, ..., n-1}.
std::int64_t residue(std::int64_t a, std::int64_t n);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// C(n, k) in exact int64; throws OverflowError instead of wrapping.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Integer power of a rational, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace exdiv
