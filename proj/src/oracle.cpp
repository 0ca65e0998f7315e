#include "spreadbound/oracle.hpp"

#include "spreadbound/vsp.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace spreadbound::oracle {

using galois::PointSet;
using galois::Subspace;

namespace {

std::string dec(const BigInt& v) {
    return to_decimal(v);
}

std::uint64_t to_u64(const BigInt& v) {
    ensure(v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()), "value does not fit 64 bits");
    return static_cast<std::uint64_t>(v);
}

class Search {
public:
    Search(const std::vector<Subspace>& subspaces, std::size_t point_total, std::uint64_t per_member,
           std::uint64_t upper, const SearchBudget& budget)
        : subspaces_(subspaces),
          point_total_(point_total),
          per_member_(per_member),
          upper_(upper),
          budget_(budget),
          start_(std::chrono::steady_clock::now()),
          containing_(point_total) {
        for (std::uint32_t s = 0; s < subspaces_.size(); ++s)
            for (std::size_t p = 0; p < point_total_; ++p)
                if (subspaces_[s].points.test(p)) containing_[p].push_back(s);
    }

    void run(std::uint32_t first_member) {
        stack_.push_back(first_member);
        const PointSet& covered = subspaces_[first_member].points;
        descend(covered, point_total_ - covered.count());
    }

    const std::vector<std::uint32_t>& best() const { return best_; }
    bool exhausted() const { return !aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void descend(const PointSet& covered, std::size_t free_points) {
        if (done_ || aborted_) return;
        if (++nodes_ > budget_.max_nodes) {
            aborted_ = true;
            return;
        }
        if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_seconds) {
            aborted_ = true;
            return;
        }
        if (stack_.size() > best_.size()) {
            best_ = stack_;
            if (best_.size() >= upper_) {
                done_ = true;
                return;
            }
        }
        if (stack_.size() + free_points / per_member_ <= best_.size()) return;

        // Branch on the undecided point with the fewest disjoint candidates.
        // Points with none are holes in every completion, which tightens the count bound.
        std::size_t pick = point_total_;
        std::size_t pick_count = std::numeric_limits<std::size_t>::max();
        std::size_t stranded = 0;
        for (std::size_t p = covered.first_unset(point_total_); p < point_total_; ++p) {
            if (covered.test(p)) continue;
            std::size_t count = 0;
            for (std::uint32_t s : containing_[p]) {
                if (subspaces_[s].points.disjoint(covered) && ++count >= pick_count) break;
            }
            if (count == 0) ++stranded;
            if (count < pick_count) {
                pick = p;
                pick_count = count;
            }
        }
        if (pick == point_total_) return;
        if (stack_.size() + (free_points - stranded) / per_member_ <= best_.size()) return;

        for (std::uint32_t s : containing_[pick]) {
            const PointSet& pts = subspaces_[s].points;
            if (!pts.disjoint(covered)) continue;
            stack_.push_back(s);
            descend(covered | pts, free_points - per_member_);
            stack_.pop_back();
            if (done_ || aborted_) return;
        }
        PointSet with_hole = covered;
        with_hole.set(pick);
        descend(with_hole, free_points - 1);
    }

    const std::vector<Subspace>& subspaces_;
    std::size_t point_total_;
    std::uint64_t per_member_;
    std::uint64_t upper_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::vector<std::uint32_t>> containing_;

    std::vector<std::uint32_t> stack_;
    std::vector<std::uint32_t> best_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    bool aborted_ = false;
};

std::vector<std::uint32_t> greedy_pick(const std::vector<Subspace>& subspaces, std::vector<std::uint32_t> order,
                                       std::uint64_t cap) {
    std::vector<std::uint32_t> picked;
    PointSet covered;
    for (std::uint32_t s : order) {
        if (picked.size() >= cap) break;
        if (!subspaces[s].points.disjoint(covered)) continue;
        covered |= subspaces[s].points;
        picked.push_back(s);
    }
    return picked;
}

std::vector<Subspace> select(const std::vector<Subspace>& subspaces, const std::vector<std::uint32_t>& idx) {
    std::vector<Subspace> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(subspaces[i]);
    return out;
}

char hex_digit(unsigned v) {
    return "0123456789abcdef"[v];
}

} // namespace

void validate(const PartialSpread& spread) {
    const auto& inst = spread.instance;
    const std::uint64_t points = galois::point_count(inst.q(), inst.n());
    const std::uint64_t per_member = galois::point_count(inst.q(), inst.t());
    PointSet covered;
    for (const auto& m : spread.members) {
        ensure(m.dim == inst.t(), "partial spread member has wrong dimension");
        ensure(m.points.count() == per_member, "partial spread member has wrong point count");
        ensure(m.points.disjoint(covered), "partial spread members intersect nontrivially");
        covered |= m.points;
    }
    ensure(spread.holes == covered.complement(points), "hole set differs from the uncovered points");
    ensure(spread.hole_count() == points - spread.members.size() * per_member, "hole count arithmetic mismatch");
}

PartialSpread make_partial_spread(const SpreadInstance& inst, std::vector<Subspace> members) {
    PartialSpread spread(inst);
    PointSet covered;
    for (const auto& m : members) covered |= m.points;
    spread.members = std::move(members);
    spread.holes = covered.complement(galois::point_count(inst.q(), inst.n()));
    validate(spread);
    return spread;
}

SearchResult max_partial_spread(unsigned q, unsigned n, unsigned t, const SearchBudget& budget) {
    const auto inst = decompose(q, n, t);
    const auto field = galois::Field::make(q);
    const auto subspaces = galois::enumerate_subspaces(field, n, t);
    const std::size_t points = galois::point_count(q, n);
    const std::uint64_t per_member = galois::point_count(q, t);
    const std::uint64_t upper = budget.stop_at_upper_bound ? to_u64(best_bounds(q, n, t).upper.value)
                                                           : to_u64(packing_bound(inst).value);

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::uint32_t> chosen;
    bool proven = false;
    std::uint64_t nodes = 0;
    if (budget.mode == SearchMode::Greedy) {
        std::vector<std::uint32_t> order(subspaces.size());
        std::iota(order.begin(), order.end(), 0u);
        std::mt19937_64 rng(budget.seed);
        std::shuffle(order.begin(), order.end(), rng);
        chosen = greedy_pick(subspaces, std::move(order), upper);
        proven = chosen.size() == upper;
        nodes = chosen.size();
    } else {
        // enumeration starts with the span of the first t unit vectors
        ensure(subspaces.front().basis.size() == t && subspaces.front().basis[0][0] == 1,
               "first enumerated subspace is not the canonical one");
        Search search(subspaces, points, per_member, upper, budget);
        search.run(0);
        chosen = search.best();
        proven = search.exhausted();
        nodes = search.nodes();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return SearchResult{chosen.size(), make_partial_spread(inst, select(subspaces, chosen)), proven, nodes, seconds};
}

HoleDistribution hole_distribution(const PartialSpread& spread) {
    const auto& inst = spread.instance;
    const auto field = galois::Field::make(inst.q());
    HoleDistribution dist;
    dist.q = inst.q();
    dist.n = inst.n();
    dist.c = spread.hole_count();
    for (const auto& h : galois::hyperplanes(field, inst.n())) {
        ++dist.a[(h.points & spread.holes).count()];
    }
    return dist;
}

StandardEquationReport verify_standard_equations(const HoleDistribution& dist) {
    if (dist.n < 2) throw std::invalid_argument("verify_standard_equations: needs n >= 2");
    BigInt s0 = 0, s1 = 0, s2 = 0;
    for (const auto& [i, count] : dist.a) {
        const BigInt bi = i;
        s0 += count;
        s1 += bi * count;
        s2 += bi * (bi - 1) * count;
    }
    const BigInt c = dist.c;
    const BigInt rhs0 = q_bracket(dist.n, dist.q);
    const BigInt rhs1 = c * q_bracket(dist.n - 1, dist.q);
    const BigInt rhs2 = c * (c - 1) * q_bracket(dist.n - 2, dist.q);

    StandardEquationReport report;
    report.residuals = {s0 - rhs0, s1 - rhs1, s2 - rhs2};
    report.ok = report.residuals[0] == 0 && report.residuals[1] == 0 && report.residuals[2] == 0;
    report.lines.push_back("sum a_i = " + dec(s0) + " vs [n]_q = " + dec(rhs0));
    report.lines.push_back("sum i a_i = " + dec(s1) + " vs c [n-1]_q = " + dec(rhs1));
    report.lines.push_back("sum i(i-1) a_i = " + dec(s2) + " vs c(c-1) [n-2]_q = " + dec(rhs2));
    return report;
}

CongruenceReport verify_hyperplane_congruences(const PartialSpread& spread) {
    const auto& inst = spread.instance;
    const unsigned q = inst.q();
    const unsigned t = inst.t();
    const BigInt members = spread.members.size();
    const BigInt block = q_pow(q, t);
    const BigInt base = inst.base();

    CongruenceReport report;
    // any split members = l' q^t + x with x >= 0 gives the same residue
    report.x = members >= base ? BigInt(members - base) : floor_mod(members, block);
    report.modulus = q_pow(q, t - 1);
    report.residue = vsp::hyperplane_hole_residue(spread.hole_count(), report.x, q, t);

    const auto field = galois::Field::make(q);
    const auto hs = galois::hyperplanes(field, inst.n());
    report.hyperplanes_checked = hs.size();
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const BigInt holes_in_h = (hs[i].points & spread.holes).count();
        if (floor_mod(holes_in_h, report.modulus) != report.residue) report.violations.push_back(i);
    }
    report.ok = report.violations.empty();
    report.lines.push_back("members = " + dec(members) + ", x = " + dec(report.x) + ", holes m1 = " +
                           std::to_string(spread.hole_count()));
    report.lines.push_back("every hyperplane: holes = (m1 + x - 1)/q = " + dec(report.residue) + " (mod " +
                           dec(report.modulus) + "); " + std::to_string(report.violations.size()) + " of " +
                           std::to_string(hs.size()) + " hyperplanes violate");
    return report;
}

CrossCheckReport cross_check(unsigned q, unsigned n, unsigned t, const SearchBudget& budget) {
    auto search = max_partial_spread(q, n, t, budget);
    auto bounds = best_bounds(q, n, t);
    BoundResult oracle_bound;
    oracle_bound.value = search.size;
    oracle_bound.direction = Direction::Lower;
    oracle_bound.method = Method::Oracle;
    oracle_bound.params.witness_id = "oracle/q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                                     ",t=" + std::to_string(t) + "/size=" + std::to_string(search.size);
    oracle_bound.certificate.push_back("explicit partial spread found by search (" + std::to_string(search.nodes) +
                                       " nodes)");

    CrossCheckReport report{false, std::move(search), std::move(bounds), std::move(oracle_bound), {}};
    auto& lines = report.lines;
    bool ok = true;
    const auto check = [&](bool cond, const std::string& what) {
        lines.push_back(std::string(cond ? "pass" : "FAIL") + "  " + what);
        ok = ok && cond;
    };
    const BigInt size = report.search.size;
    const auto& lower = report.bounds.lower.value;
    const auto& upper = report.bounds.upper.value;

    lines.push_back("search: size " + dec(size) + (report.search.proven_optimal ? ", proven optimal" : ", budget exhausted") +
                    ", " + std::to_string(report.search.nodes) + " nodes");
    check(size <= upper, "size " + dec(size) + " <= upper bound " + dec(upper) + " (" +
                             std::string(method_name(report.bounds.upper.method)) + ")");
    if (report.search.proven_optimal) {
        check(lower <= size, "construction lower bound " + dec(lower) + " <= size");
        if (report.bounds.exact) check(size == upper, "size equals the exact value " + dec(upper));
    }

    const auto& witness = report.search.witness;
    try {
        validate(witness);
        check(true, "witness is a valid partial spread");
    } catch (const InternalError& e) {
        check(false, std::string("witness invalid: ") + e.what());
    }
    if (n >= 2) {
        const auto eq = verify_standard_equations(hole_distribution(witness));
        check(eq.ok, "standard equations on hyperplane hole counts");
        for (const auto& l : eq.lines) lines.push_back("      " + l);
        const auto cong = verify_hyperplane_congruences(witness);
        check(cong.ok, "hyperplane hole congruences");
        for (const auto& l : cong.lines) lines.push_back("      " + l);
    }
    if (t >= 2 && n > t && !witness.members.empty()) {
        const BigInt c = witness.hole_count();
        bool avoids = true;
        for (const auto& [i, excluded] : vsp::excluded_hole_family(q, t, t)) avoids = avoids && excluded != c;
        check(avoids, "hole count " + dec(c) + " avoids the excluded hole-type family for s = t");
    }
    report.passed = ok;
    return report;
}

PartialSpread random_greedy_partial_spread(unsigned q, unsigned n, unsigned t, std::mt19937_64& rng) {
    const auto inst = decompose(q, n, t);
    const auto field = galois::Field::make(q);
    const auto subspaces = galois::enumerate_subspaces(field, n, t);
    std::vector<std::uint32_t> order(subspaces.size());
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    const std::uint64_t packing = galois::point_count(q, n) / galois::point_count(q, t);
    std::uniform_int_distribution<std::uint64_t> cap_dist(0, packing);
    const auto picked = greedy_pick(subspaces, std::move(order), cap_dist(rng));
    return make_partial_spread(inst, select(subspaces, picked));
}

std::string format_witness(const PartialSpread& spread) {
    const auto& inst = spread.instance;
    std::ostringstream out;
    out << "# partial " << inst.t() << "-spread in F_" << inst.q() << "^" << inst.n() << "\n";
    out << "# q=" << inst.q() << " n=" << inst.n() << " t=" << inst.t() << " size=" << spread.members.size()
        << " holes=" << spread.hole_count() << "\n";
    out << "# one member per line: RREF basis rows, one hex digit per coordinate\n";
    for (const auto& m : spread.members) {
        for (std::size_t r = 0; r < m.basis.size(); ++r) {
            if (r) out << ' ';
            for (auto e : m.basis[r]) out << hex_digit(e);
        }
        out << '\n';
    }
    return out.str();
}

PartialSpread parse_witness(std::istream& in, unsigned q, unsigned n, unsigned t) {
    const auto inst = decompose(q, n, t);
    const auto field = galois::Field::make(q);
    std::vector<Subspace> members;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::vector<galois::Vector> rows;
        std::string token;
        while (tokens >> token) {
            if (token.size() != n) {
                throw std::invalid_argument("witness line " + std::to_string(line_no) + ": row '" + token +
                                            "' does not have " + std::to_string(n) + " coordinates");
            }
            galois::Vector row;
            for (char ch : token) {
                const auto pos = std::string_view("0123456789abcdef").find(static_cast<char>(std::tolower(ch)));
                if (pos == std::string_view::npos || pos >= q) {
                    throw std::invalid_argument("witness line " + std::to_string(line_no) + ": bad field element '" +
                                                std::string(1, ch) + "'");
                }
                row.push_back(static_cast<galois::Element>(pos));
            }
            rows.push_back(std::move(row));
        }
        auto member = galois::span_of(field, n, std::move(rows));
        if (member.dim != t) {
            throw std::invalid_argument("witness line " + std::to_string(line_no) + ": member has dimension " +
                                        std::to_string(member.dim) + ", expected " + std::to_string(t));
        }
        members.push_back(std::move(member));
    }
    PointSet covered;
    for (const auto& m : members) {
        if (!m.points.disjoint(covered)) throw std::invalid_argument("witness members intersect nontrivially");
        covered |= m.points;
    }
    return make_partial_spread(inst, std::move(members));
}

} // namespace spreadbound::oracle
