#pragma once

// Brute-force ground truth at desk scale: exact maximum partial spread search,
// and checks of the hyperplane counting identities on concrete partial spreads.

#include "spreadbound/bounds.hpp"
#include "spreadbound/galois.hpp"
#include "spreadbound/instance.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace spreadbound::oracle {

enum class SearchMode { Exact, Greedy };

struct SearchBudget {
    std::uint64_t max_nodes = 500'000'000;
    std::chrono::duration<double> max_seconds{60.0};
    SearchMode mode = SearchMode::Exact;
    std::uint64_t seed = 1;  // member order in greedy mode
    /// Stop as soon as the best upper bound is met. When false the search only
    /// uses the point-count bound, which keeps it independent of the bounds module.
    bool stop_at_upper_bound = true;
};

/// t-subspaces with pairwise disjoint point sets, plus the uncovered points.
struct PartialSpread {
    explicit PartialSpread(SpreadInstance inst) : instance(std::move(inst)) {}

    SpreadInstance instance;
    std::vector<galois::Subspace> members;
    galois::PointSet holes;

    std::uint64_t hole_count() const { return holes.count(); }
};

/// Throws InternalError unless the members are t-dimensional, pairwise
/// disjoint, and `holes` is exactly the uncovered point set.
void validate(const PartialSpread& spread);

/// Builds a PartialSpread (holes filled in) and validates it.
PartialSpread make_partial_spread(const SpreadInstance& inst, std::vector<galois::Subspace> members);

struct SearchResult {
    std::uint64_t size = 0;
    PartialSpread witness;
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Branch and bound on the lowest uncovered point: cover it with a disjoint
/// t-subspace or leave it as a hole. The first member is fixed to the span of
/// the first t unit vectors.
SearchResult max_partial_spread(unsigned q, unsigned n, unsigned t, const SearchBudget& budget = {});

/// a[i] = number of hyperplanes holding exactly i holes.
struct HoleDistribution {
    unsigned q = 0;
    unsigned n = 0;
    std::uint64_t c = 0;
    std::map<std::uint64_t, std::uint64_t> a;
};

HoleDistribution hole_distribution(const PartialSpread& spread);

struct StandardEquationReport {
    bool ok = false;
    std::array<BigInt, 3> residuals;
    std::vector<std::string> lines;
};

/// Checks sum a_i = [n]_q, sum i a_i = c [n-1]_q and sum i(i-1) a_i = c(c-1) [n-2]_q.
StandardEquationReport verify_standard_equations(const HoleDistribution& dist);

struct CongruenceReport {
    bool ok = false;
    BigInt x;
    BigInt modulus;
    BigInt residue;
    std::size_t hyperplanes_checked = 0;
    std::vector<std::size_t> violations;  // hyperplane positions in enumeration order
    std::vector<std::string> lines;
};

/// Every hyperplane's hole count must be congruent to (m1 + x - 1)/q modulo q^(t-1).
CongruenceReport verify_hyperplane_congruences(const PartialSpread& spread);

struct CrossCheckReport {
    bool passed = false;
    SearchResult search;
    BestBounds bounds;
    BoundResult oracle_bound;
    std::vector<std::string> lines;
};

/// Runs the search and checks it against the bounds and the counting identities.
CrossCheckReport cross_check(unsigned q, unsigned n, unsigned t, const SearchBudget& budget = {});

/// A random maximal-or-truncated greedy partial spread, for fuzzing the verifiers.
PartialSpread random_greedy_partial_spread(unsigned q, unsigned n, unsigned t, std::mt19937_64& rng);

/// Text form: '#' comment lines, then one member per line as its RREF rows,
/// each row a run of hex digits (one per coordinate), rows separated by spaces.
std::string format_witness(const PartialSpread& spread);
PartialSpread parse_witness(std::istream& in, unsigned q, unsigned n, unsigned t);

} // namespace spreadbound::oracle
