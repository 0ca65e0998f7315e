#pragma once

// Exact integer arithmetic for q-analogs and the bound formulas.
// Everything here is arbitrary precision; nothing in the bound pipeline
// touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadbound {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an internal invariant fails (a bug, never bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when an instance is too large for the finite-geometry layer.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws InternalError carrying `what` unless `cond` holds.
void ensure(bool cond, std::string_view what);

BigInt q_pow(const BigInt& q, unsigned e);

/// (q^a - 1) / (q - 1): the number of points of the projective space of F_q^a.
BigInt q_bracket(unsigned a, const BigInt& q);

/// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q);

/// Largest s with s*s <= d (Newton iteration from an upper seed).
BigInt isqrt(const BigInt& d);

/// ceil(lambda - 1/2 - sqrt(d)/2), computed exactly as
/// lambda - floor((1 + isqrt(d)) / 2). The identity holds for every d >= 0:
/// writing sqrt(d) = s + e with s = isqrt(d) and 0 <= e < 1, the term
/// (1 + s + e) / 2 has the same floor as (1 + s) / 2 because e / 2 < 1/2.
BigInt ceil_bound_term(const BigInt& lambda, const BigInt& d);

/// a / b, failing loudly when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what);

/// Floor division and the matching non-negative remainder (b > 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

/// Largest f with q^f | v. Requires v != 0.
unsigned q_valuation(const BigInt& v, const BigInt& q);

std::string to_decimal(const BigInt& v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

} // namespace spreadbound
