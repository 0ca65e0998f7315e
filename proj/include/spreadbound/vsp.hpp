#pragma once

// Vector space partition arguments: the hyperplane double-counting quadratic,
// hole-type exclusion, hyperplane hole congruences and the hole descent.
// Every routine that feeds a certificate records its steps as plain strings.

#include "spreadbound/exactmath.hpp"
#include "spreadbound/instance.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spreadbound::vsp {

/// Shape of a vector space partition: members of dimension s..t plus c holes.
struct HoleType {
    HoleType(unsigned t, unsigned s, BigInt c);

    unsigned t;
    unsigned s;
    BigInt c;
};

enum class Feasibility { Excluded, Undecided };

struct FeasibilityVerdict {
    Feasibility status = Feasibility::Undecided;
    std::optional<BigInt> witness_m;
    std::optional<BigInt> f_value;
    std::vector<std::string> trace;

    bool excluded() const { return status == Feasibility::Excluded; }
};

struct DescentResult {
    BigInt b_new;
    BigInt c_new;
    BigInt residue_mod;
    BigInt L_max;
};

struct HoleBoundTrace {
    BigInt m1;
    BigInt x;
    unsigned y = 0;
    BigInt w;
    BigInt w_residue;  // w mod q^y, in [0, q^y)
    BigInt L_max;
    unsigned subspace_dim = 0;
    std::vector<std::string> steps;
};

/// tau_q(c, delta, m) = m(m-1) delta^2 q^2 - c(2m-1)(q-1) delta q + c(q-1)(c(q-1)+1)
BigInt tau(unsigned q, const BigInt& c, const BigInt& delta, const BigInt& m);

/// F(m) = tau_q(c, q^(s-1), m) * q^(n-2) / q^(2s-2) - m(m-1).
/// A partition of the given hole-type in F_q^n forces F(m) >= 0 for every
/// integer m, so a negative value rules the hole-type out.
BigInt hyperplane_type_test(unsigned q, unsigned n, const HoleType& type, const BigInt& m);

/// Minimises F over the integers (F is a convex quadratic in m) by probing the
/// two integers around its exact vertex.
FeasibilityVerdict exclude_hole_type(unsigned q, unsigned n, const HoleType& type);

/// Hole counts c = i q^s - [s]_q + s - 1 (1 <= i <= s-1) that no partition of
/// hole-type (t, s, c) can have.
std::vector<std::pair<unsigned, BigInt>> excluded_hole_family(unsigned q, unsigned t, unsigned s);

/// ((m1 + x - 1) / q) mod q^(s-1): the residue of every hyperplane's hole count
/// when the non-hole members number l q^s + x.
BigInt hyperplane_hole_residue(const BigInt& m1, const BigInt& x, unsigned q, unsigned s);

/// j descent steps from a partition with m1 = b q^s + c holes: some
/// (n-j)-subspace holds at most (b-j) q^(s-j) + c' holes, c' = (c + [j]_q (x-1)) / q^j,
/// and its hole count is congruent to c' modulo q^(s-j).
DescentResult descend_holes(const BigInt& b, const BigInt& c, const BigInt& x, unsigned q,
                            unsigned s, unsigned j);

/// Hole bound for a hypothetical partial spread of size l q^t + x, with
/// t = [r]_q + 1 - z + u: some (n - t + y)-subspace has L <= (z+y-1) q^y + w holes
/// with L = w (mod q^y), w = -(x-1) [y]_q.
HoleBoundTrace spread_hole_bound(const SpreadInstance& inst, const BigInt& z, const BigInt& u,
                                 const BigInt& x, unsigned y);

} // namespace spreadbound::vsp
