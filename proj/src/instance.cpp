#include "spreadbound/instance.hpp"

#include <array>
#include <algorithm>
#include <stdexcept>

namespace spreadbound {

bool is_supported_field_order(unsigned q) {
    constexpr std::array<unsigned, 7> orders{2, 3, 4, 5, 7, 8, 9};
    return std::find(orders.begin(), orders.end(), q) != orders.end();
}

SpreadInstance SpreadInstance::decompose(unsigned q, unsigned n, unsigned t) {
    if (!is_supported_field_order(q)) {
        throw std::invalid_argument("unsupported field order q=" + std::to_string(q) +
                                    " (expected one of 2,3,4,5,7,8,9)");
    }
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (n < t) {
        throw std::invalid_argument("n=" + std::to_string(n) + " is smaller than t=" + std::to_string(t));
    }
    SpreadInstance inst;
    inst.q_ = q;
    inst.n_ = n;
    inst.t_ = t;
    inst.k_ = n / t;
    inst.r_ = n % t;
    inst.l_ = exact_div(q_pow(q, n - t) - q_pow(q, inst.r_), q_pow(q, t) - 1, "decompose: l");
    return inst;
}

BigInt SpreadInstance::base() const {
    return l_ * q_pow(q_, t_);
}

std::string SpreadInstance::label() const {
    return "A_" + std::to_string(q_) + "(" + std::to_string(n_) + "," + std::to_string(2 * t_) + ";" +
           std::to_string(t_) + ")";
}

} // namespace spreadbound
