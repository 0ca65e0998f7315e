#include "spreadbound/exactmath.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace spreadbound {

void ensure(bool cond, std::string_view what) {
    if (!cond) throw InternalError(std::string(what));
}

BigInt q_pow(const BigInt& q, unsigned e) {
    if (q < 2) throw std::invalid_argument("q_pow: base must be at least 2");
    return boost::multiprecision::pow(q, e);
}

BigInt q_bracket(unsigned a, const BigInt& q) {
    return exact_div(q_pow(q, a) - 1, q - 1, "q_bracket");
}

BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q) {
    if (k > n) throw std::invalid_argument("gaussian_binomial: k exceeds n");
    BigInt result = 1;
    // after step i the accumulator equals the coefficient for dimension i+1
    for (unsigned i = 0; i < k; ++i) {
        result *= q_pow(q, n - i) - 1;
        result = exact_div(result, q_pow(q, i + 1) - 1, "gaussian_binomial");
    }
    return result;
}

BigInt isqrt(const BigInt& d) {
    if (d < 0) throw std::invalid_argument("isqrt: negative argument");
    if (d < 2) return d;
    // 2^(floor(msb/2)+1) > sqrt(d); Newton decreases strictly until it reaches the floor
    BigInt x = BigInt(1) << (boost::multiprecision::msb(d) / 2 + 1);
    for (;;) {
        BigInt y = (x + d / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

BigInt ceil_bound_term(const BigInt& lambda, const BigInt& d) {
    if (d < 0) throw std::invalid_argument("ceil_bound_term: negative discriminant");
    return lambda - ((1 + isqrt(d)) >> 1);
}

BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what) {
    ensure(b != 0, std::string(what) + ": division by zero");
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(a, b, quotient, remainder);
    if (remainder != 0) {
        throw InternalError(std::string(what) + ": " + to_decimal(b) + " does not divide " +
                            to_decimal(a));
    }
    return quotient;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    ensure(b > 0, "floor_div: divisor must be positive");
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(a, b, quotient, remainder);
    if (remainder < 0) --quotient;
    return quotient;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
    return a - floor_div(a, b) * b;
}

unsigned q_valuation(const BigInt& v, const BigInt& q) {
    ensure(v != 0, "q_valuation: zero has no finite valuation");
    ensure(q >= 2, "q_valuation: base must be at least 2");
    unsigned f = 0;
    BigInt rest = abs(v);
    while (rest % q == 0) {
        rest /= q;
        ++f;
    }
    return f;
}

std::string to_decimal(const BigInt& v) {
    return v.str();
}

BigInt parse_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

} // namespace spreadbound
