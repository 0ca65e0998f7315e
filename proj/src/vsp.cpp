#include "spreadbound/vsp.hpp"

#include <stdexcept>

namespace spreadbound::vsp {

namespace {

std::string dec(const BigInt& v) {
    return to_decimal(v);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

// F(m) = a m^2 + b m + c0 for the hole-type test.
struct Quadratic {
    BigInt a, b, c0;
};

Quadratic test_quadratic(unsigned q, unsigned n, const HoleType& type) {
    const BigInt delta = q_pow(q, type.s - 1);
    const BigInt scale = q_pow(q, n - 2 * type.s);
    const BigInt qm1 = q - 1;
    const BigInt dq = delta * q;
    Quadratic f;
    f.a = scale * dq * dq - 1;
    f.b = 1 - scale * (dq * dq + 2 * type.c * qm1 * dq);
    f.c0 = scale * type.c * qm1 * (dq + type.c * qm1 + 1);
    return f;
}

} // namespace

HoleType::HoleType(unsigned t_, unsigned s_, BigInt c_) : t(t_), s(s_), c(std::move(c_)) {
    require(s >= 2, "hole-type needs s >= 2");
    require(t >= s, "hole-type needs t >= s");
    require(c >= 0, "hole-type needs c >= 0");
}

BigInt tau(unsigned q, const BigInt& c, const BigInt& delta, const BigInt& m) {
    require(q >= 2, "tau: q must be at least 2");
    const BigInt qm1 = q - 1;
    return m * (m - 1) * delta * delta * q * q - c * (2 * m - 1) * qm1 * delta * q +
           c * qm1 * (c * qm1 + 1);
}

BigInt hyperplane_type_test(unsigned q, unsigned n, const HoleType& type, const BigInt& m) {
    require(n > type.t, "hyperplane_type_test: needs n > t");
    require(n >= 2 * type.s, "hyperplane_type_test: needs n - 2 >= 2(s - 1)");
    const BigInt delta = q_pow(q, type.s - 1);
    return tau(q, type.c, delta, m) * q_pow(q, n - 2 * type.s) - m * (m - 1);
}

FeasibilityVerdict exclude_hole_type(unsigned q, unsigned n, const HoleType& type) {
    require(n > type.t, "exclude_hole_type: needs n > t");
    require(n >= 2 * type.s, "exclude_hole_type: needs n - 2 >= 2(s - 1)");

    const Quadratic f = test_quadratic(q, n, type);
    ensure(f.a > 0, "exclude_hole_type: quadratic must open upwards");
    // vertex -b / 2a; the integer minimiser is its floor or floor + 1
    const BigInt lo = floor_div(-f.b, 2 * f.a);
    const BigInt hi = lo + 1;
    const BigInt f_lo = hyperplane_type_test(q, n, type, lo);
    const BigInt f_hi = hyperplane_type_test(q, n, type, hi);
    ensure(f_lo == f.a * lo * lo + f.b * lo + f.c0, "exclude_hole_type: quadratic mismatch");

    FeasibilityVerdict verdict;
    verdict.trace.push_back("hole-type (t=" + std::to_string(type.t) + ", s=" + std::to_string(type.s) +
                            ", c=" + dec(type.c) + ") in F_" + std::to_string(q) + "^" + std::to_string(n));
    verdict.trace.push_back("hyperplane type test F(m) = " + dec(f.a) + " m^2 + (" + dec(f.b) + ") m + " +
                            dec(f.c0) + ", vertex in [" + dec(lo) + ", " + dec(hi) + "]");
    verdict.trace.push_back("F(" + dec(lo) + ") = " + dec(f_lo) + ", F(" + dec(hi) + ") = " + dec(f_hi));

    const bool take_hi = f_hi < f_lo;
    const BigInt& m = take_hi ? hi : lo;
    const BigInt& value = take_hi ? f_hi : f_lo;
    if (value < 0) {
        verdict.status = Feasibility::Excluded;
        verdict.witness_m = m;
        verdict.f_value = value;
        verdict.trace.push_back("F(" + dec(m) + ") < 0 contradicts the hyperplane counting identities: excluded");
    } else {
        verdict.trace.push_back("min F >= 0 over the integers: undecided");
    }
    return verdict;
}

std::vector<std::pair<unsigned, BigInt>> excluded_hole_family(unsigned q, unsigned t, unsigned s) {
    require(s >= 2 && t >= s, "excluded_hole_family: needs t >= s >= 2");
    std::vector<std::pair<unsigned, BigInt>> family;
    const BigInt qs = q_pow(q, s);
    const BigInt bracket = q_bracket(s, q);
    for (unsigned i = 1; i + 1 <= s; ++i) {
        family.emplace_back(i, i * qs - bracket + (s - 1));
    }
    return family;
}

BigInt hyperplane_hole_residue(const BigInt& m1, const BigInt& x, unsigned q, unsigned s) {
    require(s >= 1, "hyperplane_hole_residue: needs s >= 1");
    const BigInt numerator = m1 + x - 1;
    require(floor_mod(numerator, q) == 0,
            "hyperplane_hole_residue: q=" + std::to_string(q) + " does not divide m1 + x - 1 = " + dec(numerator));
    return floor_mod(numerator / q, q_pow(q, s - 1));
}

DescentResult descend_holes(const BigInt& b, const BigInt& c, const BigInt& x, unsigned q, unsigned s,
                            unsigned j) {
    require(x >= 1, "descend_holes: needs x >= 1");
    // c = 0 is divisible by every power of q; the range bound then uses f = 0
    const unsigned f = c == 0 ? 0 : q_valuation(c, q);
    const unsigned floor_f = f > 1 ? f : 1;
    require(floor_f <= s && j <= s - floor_f,
            "descend_holes: j=" + std::to_string(j) + " outside [0, s - max(1, f)] with s=" + std::to_string(s) +
                ", f=" + std::to_string(f));
    const BigInt numerator = c + q_bracket(j, q) * (x - 1);
    const BigInt qj = q_pow(q, j);
    require(floor_mod(numerator, qj) == 0, "descend_holes: q^j does not divide c + [j]_q (x-1) = " + dec(numerator));

    DescentResult out;
    out.c_new = numerator / qj;
    out.b_new = b - j;
    out.residue_mod = q_pow(q, s - j);
    out.L_max = out.b_new * out.residue_mod + out.c_new;
    return out;
}

HoleBoundTrace spread_hole_bound(const SpreadInstance& inst, const BigInt& z, const BigInt& u, const BigInt& x,
                                 unsigned y) {
    const unsigned q = inst.q();
    const unsigned t = inst.t();
    const unsigned r = inst.r();
    const BigInt r_bracket = q_bracket(r, q);
    require(z >= 0 && u >= 0, "spread_hole_bound: z and u must be non-negative");
    require(BigInt(t) == r_bracket + 1 - z + u, "spread_hole_bound: t != [r]_q + 1 - z + u");
    require(t > r, "spread_hole_bound: needs t > r");
    require(x >= 2, "spread_hole_bound: needs x >= 2");
    const unsigned f = q_valuation(x - 1, q);
    require(y >= (f > 1 ? f : 1) && y <= t,
            "spread_hole_bound: y=" + std::to_string(y) + " outside [max(1,f), t] with f=" + std::to_string(f));

    const BigInt t_bracket = q_bracket(t, q);
    const BigInt qy = q_pow(q, y);

    HoleBoundTrace trace;
    trace.x = x;
    trace.y = y;
    trace.m1 = r_bracket * q_pow(q, t) - t_bracket * (x - 1);
    trace.w = -(x - 1) * q_bracket(y, q);
    trace.w_residue = floor_mod(trace.w, qy);
    trace.L_max = (z + y - 1) * qy + trace.w;
    trace.subspace_dim = inst.n() - t + y;

    // same bound via the generic descent with s = t, j = t - y, b = [r]_q
    const BigInt c = -t_bracket * (x - 1);
    const DescentResult d = descend_holes(r_bracket, c, x, q, t, t - y);
    ensure(d.c_new == trace.w, "spread_hole_bound: descent residue disagrees with w");
    ensure(d.residue_mod == qy, "spread_hole_bound: descent modulus disagrees with q^y");
    ensure(d.L_max <= trace.L_max, "spread_hole_bound: descent bound exceeds stated bound");
    ensure(floor_mod(trace.L_max - trace.w_residue, qy) == 0, "spread_hole_bound: L_max off residue class");

    trace.steps.push_back("assume a partial " + std::to_string(t) + "-spread of size l q^t + x = " +
                          dec(inst.base() + x) + " (x=" + dec(x) + ")");
    trace.steps.push_back("holes m1 = [r]_q q^t - [t]_q (x-1) = " + dec(r_bracket) + "*" + dec(q_pow(q, t)) +
                          " - " + dec(t_bracket) + "*" + dec(x - 1) + " = " + dec(trace.m1));
    trace.steps.push_back("hole descent with s=t=" + std::to_string(t) + ", j=t-y=" + std::to_string(t - y) +
                          ", b=[r]_q=" + dec(r_bracket) + ", c=" + dec(c) + ": c'=" + dec(d.c_new) +
                          ", bound " + dec(d.L_max));
    trace.steps.push_back("some " + std::to_string(trace.subspace_dim) + "-dimensional subspace has L <= (z+y-1) q^y + w = " +
                          dec(trace.L_max) + " holes, L = " + dec(trace.w_residue) + " (mod " + dec(qy) + "), w=" +
                          dec(trace.w));
    return trace;
}

} // namespace spreadbound::vsp
