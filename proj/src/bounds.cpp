#include "spreadbound/bounds.hpp"

#include "spreadbound/vsp.hpp"

#include <algorithm>

namespace spreadbound {

namespace {

std::string dec(const BigInt& v) {
    return to_decimal(v);
}

// Case analyses with more branches than this are checked at both ends only.
constexpr std::size_t kCertifiedCases = 512;
// Per-case certificate lines kept before switching to a summary.
constexpr std::size_t kListedCases = 8;

std::string instance_line(const SpreadInstance& inst) {
    return inst.label() + ": n = k t + r with k=" + std::to_string(inst.k()) + ", r=" + std::to_string(inst.r()) +
           ", l = (q^(n-t) - q^r)/(q^t - 1) = " + dec(inst.l());
}

std::vector<BigInt> sampled_range(const BigInt& first, const BigInt& last, bool& truncated) {
    std::vector<BigInt> out;
    truncated = false;
    if (last < first) return out;
    const BigInt count = last - first + 1;
    if (count <= kCertifiedCases) {
        for (BigInt i = first; i <= last; ++i) out.push_back(i);
        return out;
    }
    truncated = true;
    const std::size_t half = kCertifiedCases / 2;
    for (std::size_t k = 0; k < half; ++k) out.push_back(first + k);
    for (std::size_t k = half; k > 0; --k) out.push_back(last - (k - 1));
    return out;
}

// Applies the hole-type test to each admissible hole count c = i q^y + w
// (i in [first_i, last_i]) of the (n-t+y)-subspace, appending lines to `cert`.
// Returns the number of cases the test left undecided.
std::size_t certify_hole_cases(const SpreadInstance& inst, const vsp::HoleBoundTrace& holes, const BigInt& first_i,
                               const BigInt& last_i, std::vector<std::string>& cert) {
    const unsigned q = inst.q();
    const BigInt qy = q_pow(q, holes.y);
    bool truncated = false;
    const auto cases = sampled_range(first_i, last_i, truncated);
    std::size_t excluded = 0;
    std::size_t undecided = 0;
    std::size_t negative = 0;
    for (const BigInt& i : cases) {
        const BigInt c = i * qy + holes.w;
        if (c < 0) {
            ++negative;
            continue;
        }
        const vsp::HoleType type(inst.t(), holes.y, c);
        const auto verdict = vsp::exclude_hole_type(q, holes.subspace_dim, type);
        if (verdict.excluded()) {
            ++excluded;
            if (excluded <= kListedCases) {
                cert.push_back("  L=" + dec(c) + ": hole-type (" + std::to_string(inst.t()) + "," +
                               std::to_string(holes.y) + "," + dec(c) + ") excluded, m=" + dec(*verdict.witness_m) +
                               ", F=" + dec(*verdict.f_value));
            }
        } else {
            ++undecided;
            cert.push_back("  L=" + dec(c) + ": hyperplane type test undecided");
        }
    }
    if (excluded > kListedCases) {
        cert.push_back("  ... " + std::to_string(excluded - kListedCases) + " further hole counts excluded");
    }
    if (negative > 0) {
        cert.push_back("  " + std::to_string(negative) + " residue-class members are negative (no such subspace)");
    }
    if (truncated) {
        cert.push_back("  checked the " + std::to_string(kCertifiedCases) + " outermost of " +
                       dec(last_i - first_i + 1) + " hole counts");
    }
    return undecided;
}

std::optional<BigInt> theorem2_term(const SpreadInstance& inst, const BigInt& z, unsigned y, BigInt* d_out = nullptr) {
    const BigInt lambda = q_pow(inst.q(), y);
    const BigInt d = 1 + 4 * lambda * (lambda - (z + y - 1) * (inst.q() - 1) - 1);
    if (d_out) *d_out = d;
    if (d < 1) return std::nullopt;
    return ceil_bound_term(lambda, d);
}

bool theorem2_applies(const SpreadInstance& inst) {
    if (inst.k() < 2 || inst.r() < 1 || inst.t() <= inst.r()) return false;
    return q_bracket(inst.r(), inst.q()) + 1 - inst.t() >= 0;
}

BoundResult theorem2_result(const SpreadInstance& inst, const BigInt& z, unsigned y, const BigInt& term, Method method,
                            std::vector<std::string> scan) {
    const unsigned q = inst.q();
    const BigInt x = term + 1;
    ensure(x >= 2, "theorem2: x < 2 for " + inst.label());
    const BigInt qy = q_pow(q, y);
    ensure(x - 1 <= qy && q_valuation(x - 1, q) <= y, "theorem2: q^f | x-1 with f > y for " + inst.label());

    BoundResult res;
    res.value = inst.base() + term;
    res.direction = Direction::Upper;
    res.method = method;
    res.params.z = z;
    res.params.y = BigInt(y);
    res.params.x = x;

    auto& cert = res.certificate;
    cert.push_back(instance_line(inst));
    cert.push_back("z = [r]_q + 1 - t = " + dec(z));
    for (auto& line : scan) cert.push_back(std::move(line));
    BigInt d;
    theorem2_term(inst, z, y, &d);
    cert.push_back("y=" + std::to_string(y) + ": lambda = q^y = " + dec(qy) + ", d = 1 + 4 lambda (lambda - (z+y-1)(q-1) - 1) = " +
                   dec(d) + ", ceil(lambda - 1/2 - sqrt(d)/2) = " + dec(term) + ", x = " + dec(x));

    const auto holes = vsp::spread_hole_bound(inst, z, 0, x, y);
    for (const auto& step : holes.steps) cert.push_back(step);
    cert.push_back("each admissible L = i q^y + w, 1 <= i <= z+y-1, is a hole-type (t, y, L) in dimension " +
                   std::to_string(holes.subspace_dim) + ":");
    const std::size_t undecided = certify_hole_cases(inst, holes, 1, z + y - 1, cert);
    if (undecided > 0) {
        cert.push_back("undecided cases fall into the tau = 0 equality case, which is excluded since t > r");
    }
    cert.push_back("no partial spread of size " + dec(inst.base() + x) + " (nor larger) exists, so " + inst.label() +
                   " <= " + dec(res.value));
    return res;
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
    case Method::Construction: return "Construction";
    case Method::Packing: return "Packing";
    case Method::Theorem1: return "Theorem1";
    case Method::Theorem2: return "Theorem2";
    case Method::DrakeFreeman: return "DrakeFreeman";
    case Method::Oracle: return "Oracle";
    }
    return "?";
}

std::string_view direction_name(Direction d) {
    return d == Direction::Lower ? "lower" : "upper";
}

BoundResult lower_bound_construction(const SpreadInstance& inst) {
    BoundResult res;
    res.direction = Direction::Lower;
    res.method = Method::Construction;
    res.value = inst.base() + 1;
    res.certificate.push_back(instance_line(inst));
    if (inst.k() < 2) {
        ensure(res.value == 1, "construction: k = 1 must give 1");
        res.certificate.push_back("n < 2t: any single t-subspace is a partial spread; two would meet nontrivially");
    } else if (inst.r() == 0) {
        ensure(res.value == exact_div(q_pow(inst.q(), inst.n()) - 1, q_pow(inst.q(), inst.t()) - 1, "spread size"),
               "construction: r = 0 must give a full spread");
        res.certificate.push_back("r = 0: a t-spread exists, size (q^n - 1)/(q^t - 1) = " + dec(res.value));
    } else {
        res.certificate.push_back("multilevel construction: l q^t + 1 = " + dec(inst.base()) + " + 1 = " + dec(res.value));
    }
    return res;
}

BoundResult packing_bound(const SpreadInstance& inst) {
    BoundResult res;
    res.direction = Direction::Upper;
    res.method = Method::Packing;
    const BigInt points = q_bracket(inst.n(), inst.q());
    const BigInt per_member = q_bracket(inst.t(), inst.q());
    res.value = points / per_member;
    res.certificate.push_back(instance_line(inst));
    res.certificate.push_back("members cover disjoint point sets: floor([n]_q / [t]_q) = floor(" + dec(points) + " / " +
                              dec(per_member) + ") = " + dec(res.value));
    return res;
}

std::optional<BoundResult> theorem1_bound(const SpreadInstance& inst) {
    if (inst.k() < 2 || inst.r() < 1 || inst.t() <= inst.r()) return std::nullopt;
    const unsigned q = inst.q();
    const BigInt r_bracket = q_bracket(inst.r(), q);
    BigInt z = r_bracket + 1 - inst.t();
    if (z < 0) z = 0;
    if (2 * z > r_bracket) return std::nullopt;
    const BigInt u = BigInt(inst.t()) - (r_bracket + 1 - z);
    ensure(u >= 0, "theorem1: u < 0");

    BoundResult res;
    res.direction = Direction::Upper;
    res.method = Method::Theorem1;
    res.value = inst.base() + 1 + z * (q - 1);
    res.params.z = z;
    res.params.u = u;

    auto& cert = res.certificate;
    cert.push_back(instance_line(inst));
    cert.push_back("least admissible z = max(0, [r]_q + 1 - t) = " + dec(z) + " (2z <= [r]_q = " + dec(r_bracket) +
                   "), u = " + dec(u));
    const BigInt x = 2 + z * (q - 1);
    const unsigned y = static_cast<unsigned>(z + 1);
    const auto holes = vsp::spread_hole_bound(inst, z, u, x, y);
    for (const auto& step : holes.steps) cert.push_back(step);
    if (z == 0) {
        ensure(holes.L_max < 0, "theorem1: z = 0 must give a negative hole bound");
        cert.push_back("L <= " + dec(holes.L_max) + " < 0: contradiction");
    } else {
        // L = i q^y + w is negative for i <= z; the rest are the excluded family for s = y
        const auto family = vsp::excluded_hole_family(q, inst.t(), y);
        const BigInt qy = q_pow(q, y);
        ensure(z * qy + holes.w < 0, "theorem1: i = z must give a negative hole count");
        for (BigInt i = z + 1; i <= 2 * z; ++i) {
            const BigInt c = i * qy + holes.w;
            ensure(family.at(static_cast<std::size_t>(i - z - 1)).second == c,
                   "theorem1: hole count outside excluded family");
        }
        cert.push_back("admissible L = i q^y + w, z < i <= 2z, are the excluded counts j q^s - [s]_q + s - 1, j = i - z, s = y = " +
                       std::to_string(y) + ":");
        const std::size_t undecided = certify_hole_cases(inst, holes, z + 1, 2 * z, cert);
        ensure(undecided == 0, "theorem1: excluded family member not excluded for " + inst.label());
    }
    cert.push_back("no partial spread of size " + dec(inst.base() + x) + " (nor larger) exists, so " + inst.label() +
                   " <= " + dec(res.value));
    return res;
}

std::optional<BoundResult> theorem2_bound(const SpreadInstance& inst) {
    if (!theorem2_applies(inst)) return std::nullopt;
    const BigInt z = q_bracket(inst.r(), inst.q()) + 1 - inst.t();
    const unsigned y_lo = std::max(inst.r(), 2u);

    std::optional<BigInt> best;
    unsigned best_y = 0;
    std::vector<std::string> scan;
    for (unsigned y = y_lo; y <= inst.t(); ++y) {
        const auto term = theorem2_term(inst, z, y);
        if (!term) {
            scan.push_back("y=" + std::to_string(y) + ": negative discriminant, skipped");
            continue;
        }
        scan.push_back("y=" + std::to_string(y) + ": term " + dec(*term));
        if (!best || *term < *best) {
            best = *term;
            best_y = y;
        }
    }
    if (!best) return std::nullopt;
    return theorem2_result(inst, z, best_y, *best, Method::Theorem2, std::move(scan));
}

std::optional<BoundResult> drake_freeman_bound(const SpreadInstance& inst) {
    if (!theorem2_applies(inst)) return std::nullopt;
    const BigInt z = q_bracket(inst.r(), inst.q()) + 1 - inst.t();
    const auto term = theorem2_term(inst, z, inst.t());
    if (!term) return std::nullopt;
    return theorem2_result(inst, z, inst.t(), *term, Method::DrakeFreeman, {"y fixed to t=" + std::to_string(inst.t())});
}

BestBounds best_bounds(unsigned q, unsigned n, unsigned t) {
    const auto inst = decompose(q, n, t);
    BestBounds out{inst, lower_bound_construction(inst), {}, false, {}};

    if (inst.k() < 2) {
        BoundResult trivial;
        trivial.value = 1;
        trivial.direction = Direction::Upper;
        trivial.method = Method::Packing;
        trivial.certificate.push_back(instance_line(inst));
        trivial.certificate.push_back("n < 2t: two t-subspaces satisfy dim(U) + dim(W) = 2t > n and meet nontrivially");
        out.upper = std::move(trivial);
    } else {
        // tie-break order: Theorem1, Theorem2, Packing
        std::vector<BoundResult> candidates;
        if (auto b = theorem1_bound(inst)) candidates.push_back(std::move(*b));
        if (auto b = theorem2_bound(inst)) candidates.push_back(std::move(*b));
        candidates.push_back(packing_bound(inst));
        std::size_t best = 0;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            if (candidates[i].value < candidates[best].value) best = i;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (i != best && candidates[i].value == candidates[best].value) {
                out.also_attaining.push_back(candidates[i]);
            }
        }
        out.upper = std::move(candidates[best]);
    }
    ensure(out.lower.value <= out.upper.value, "best_bounds: lower exceeds upper for " + inst.label());
    out.exact = out.lower.value == out.upper.value;
    return out;
}

std::vector<BoundResult> all_bounds(const SpreadInstance& inst) {
    std::vector<BoundResult> out;
    out.push_back(lower_bound_construction(inst));
    out.push_back(packing_bound(inst));
    if (auto b = theorem1_bound(inst)) out.push_back(std::move(*b));
    if (auto b = theorem2_bound(inst)) out.push_back(std::move(*b));
    if (auto b = drake_freeman_bound(inst)) out.push_back(std::move(*b));
    return out;
}

} // namespace spreadbound
