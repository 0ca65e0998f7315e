#pragma once

// Lower and upper bounds on A_q(n,2t;t), the largest size of a partial
// t-spread in F_q^n, each carrying the parameters that produced it and a
// human-readable certificate.

#include "spreadbound/exactmath.hpp"
#include "spreadbound/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spreadbound {

enum class Method { Construction, Packing, Theorem1, Theorem2, DrakeFreeman, Oracle };
enum class Direction { Lower, Upper };

std::string_view method_name(Method m);
std::string_view direction_name(Direction d);

/// Witness parameters; which fields are set depends on the method.
struct BoundParams {
    std::optional<BigInt> z;
    std::optional<BigInt> u;
    std::optional<BigInt> y;
    std::optional<BigInt> x;
    std::optional<BigInt> m;
    std::optional<std::string> witness_id;
};

struct BoundResult {
    BigInt value;
    Direction direction = Direction::Upper;
    Method method = Method::Packing;
    BoundParams params;
    std::vector<std::string> certificate;
};

/// l q^t + 1 from the known constructions (1 when n < 2t).
BoundResult lower_bound_construction(const SpreadInstance& inst);

/// floor([n]_q / [t]_q).
BoundResult packing_bound(const SpreadInstance& inst);

/// l q^t + 1 + z(q-1) at the least admissible z; absent unless k >= 2, r >= 1, t > r
/// and 2z <= [r]_q.
std::optional<BoundResult> theorem1_bound(const SpreadInstance& inst);

/// l q^t + min over y in [max(r,2), t] of ceil(q^y - 1/2 - sqrt(d_y)/2), with
/// z = [r]_q + 1 - t >= 0 and d_y = 1 + 4 q^y (q^y - (z+y-1)(q-1) - 1).
std::optional<BoundResult> theorem2_bound(const SpreadInstance& inst);

/// The y = t member of the theorem2 family.
std::optional<BoundResult> drake_freeman_bound(const SpreadInstance& inst);

struct BestBounds {
    SpreadInstance instance;
    BoundResult lower;
    BoundResult upper;
    bool exact = false;
    /// Other upper bounds reaching the same value as `upper`.
    std::vector<BoundResult> also_attaining;
};

BestBounds best_bounds(unsigned q, unsigned n, unsigned t);

/// Every method applicable to the instance, in the order Construction,
/// Packing, Theorem1, Theorem2, DrakeFreeman.
std::vector<BoundResult> all_bounds(const SpreadInstance& inst);

} // namespace spreadbound
