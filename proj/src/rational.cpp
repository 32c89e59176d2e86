#include "exdiv/rational.hpp"

#include <limits>
#include <numeric>

namespace exdiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

EuclidDivision euclid_div(std::int64_t a, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("euclid_div: modulus must be positive");
    std::int64_t q = a / n;
    std::int64_t t = a % n;
    if (t < 0) {
        t += n;
        --q;
    }
    return {q, t};
}

std::int64_t residue(std::int64_t a, std::int64_t n) { return euclid_div(a, n).remainder; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 multiplication overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 addition overflow");
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // Multiplicative formula; each partial product C(n-k+i, i) is an integer.
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t factor = n - k + i;
        // result * factor / i without intermediate overflow where avoidable
        const std::int64_t g = std::gcd(result, i);
        const std::int64_t r = result / g;
        const std::int64_t ii = i / g;
        result = checked_mul(r, factor / ii);
        if (factor % ii != 0) throw OverflowError("binomial: non-integral step");
    }
    return result;
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace exdiv
