#pragma once

#include "spreadbound/exactmath.hpp"

#include <string>

namespace spreadbound {

/// Field orders handled throughout: the prime powers up to 9.
bool is_supported_field_order(unsigned q);

/// A query (q, n, t) together with its decomposition n = k*t + r and
/// l = (q^(n-t) - q^r) / (q^t - 1). Only `decompose` builds one.
class SpreadInstance {
public:
    static SpreadInstance decompose(unsigned q, unsigned n, unsigned t);

    unsigned q() const { return q_; }
    unsigned n() const { return n_; }
    unsigned t() const { return t_; }
    unsigned k() const { return k_; }
    unsigned r() const { return r_; }
    const BigInt& l() const { return l_; }

    /// l * q^t, the part of every bound that the theorems leave untouched.
    BigInt base() const;

    std::string label() const;

    friend bool operator==(const SpreadInstance&, const SpreadInstance&) = default;

private:
    SpreadInstance() = default;

    unsigned q_ = 0;
    unsigned n_ = 0;
    unsigned t_ = 0;
    unsigned k_ = 0;
    unsigned r_ = 0;
    BigInt l_;
};

inline SpreadInstance decompose(unsigned q, unsigned n, unsigned t) {
    return SpreadInstance::decompose(q, n, t);
}

} // namespace spreadbound
