// Acceptance suite: one PASS/FAIL line per criterion, with pinned time limits.
// Exit status is the number of failed criteria.
#include "spreadbound/bounds.hpp"
#include "spreadbound/oracle.hpp"
#include "spreadbound/vsp.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace spreadbound;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && secs >= limit_seconds) out.fail("time limit exceeded");
    if (!out.ok) ++failures;
    std::printf("%s criterion %-3s %-48s %8.3f s (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                limit_seconds, out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

// [a]_q by summing powers, kept apart from the library's closed form.
BigInt bracket_sum(unsigned a, unsigned q) {
    BigInt s = 0, p = 1;
    for (unsigned i = 0; i < a; ++i, p *= q) s += p;
    return s;
}

constexpr unsigned kFields[] = {2, 3, 4, 5, 7, 8, 9};

} // namespace

int main() {
    run("1", "published comparison triple", 1.0, [] {
        Outcome o;
        struct Row {
            unsigned q, n, t;
            const char* t2;
            const char* df;
        };
        for (const Row& r : {Row{2, 15, 6, "515", "516"}, Row{2, 17, 7, "1026", "1028"},
                             Row{9, 18, 8, "3486784420", "3486784442"}}) {
            const auto inst = decompose(r.q, r.n, r.t);
            const auto t2 = theorem2_bound(inst);
            const auto df = drake_freeman_bound(inst);
            if (!t2 || t2->value != BigInt(r.t2)) o.fail(inst.label() + " Theorem2 != " + r.t2);
            if (!df || df->value != BigInt(r.df)) o.fail(inst.label() + " DrakeFreeman != " + r.df);
        }
        return o;
    });

    run("2", "Theorem1 tightness sweep", 5.0, [] {
        Outcome o;
        int count = 0;
        for (unsigned q : kFields) {
            for (unsigned r = 1; r <= 2; ++r) {
                const unsigned rb = static_cast<unsigned>(bracket_sum(r, q));
                for (unsigned t = rb + 1; t <= rb + 3; ++t) {
                    for (unsigned k = 2; k <= 3; ++k) {
                        const auto best = best_bounds(q, k * t + r, t);
                        const auto& inst = best.instance;
                        const BigInt expect = inst.l() * q_pow(q, t) + 1;
                        if (!best.exact || best.upper.value != expect || best.lower.value != expect)
                            o.fail(inst.label() + " not exact at l q^t + 1");
                        ++count;
                    }
                }
            }
        }
        o.detail = o.ok ? std::to_string(count) + " instances" : o.detail;
        return o;
    });

    struct OracleCase {
        const char* id;
        unsigned q, n, t;
        std::uint64_t size;
    };
    for (const OracleCase& c : {OracleCase{"3a", 2, 4, 2, 5}, OracleCase{"3b", 2, 5, 2, 9},
                                OracleCase{"3c", 2, 6, 2, 21}, OracleCase{"3d", 3, 4, 2, 10}}) {
        const std::string title = "oracle ground truth A_" + std::to_string(c.q) + "(" + std::to_string(c.n) + "," +
                                  std::to_string(2 * c.t) + ";" + std::to_string(c.t) + ") = " + std::to_string(c.size);
        run(c.id, title.c_str(), 60.0, [&] {
            Outcome o;
            oracle::SearchBudget budget;
            budget.stop_at_upper_bound = false;  // independent of the bounds module
            budget.max_seconds = std::chrono::duration<double>(60.0);
            const auto res = oracle::max_partial_spread(c.q, c.n, c.t, budget);
            oracle::validate(res.witness);
            const auto best = best_bounds(c.q, c.n, c.t);
            if (!res.proven_optimal) o.fail("search not exhausted");
            if (res.size != c.size) o.fail("size " + std::to_string(res.size));
            if (!best.exact || best.upper.value != res.size) o.fail("best_bounds exact value differs");
            return o;
        });
    }

    run("4", "known sharper bounds, one-sided", 5.0, [] {
        Outcome o;
        // (q, n, t, d, value): known results l q^t + 1 <= A <= l q^t + d = value
        struct Known {
            unsigned q, n, t, d;
            std::uint64_t example;
        };
        const Known known[] = {
            {2, 11, 4, 4, 132},          {2, 16, 6, 8, 1032},         {2, 17, 6, 18, 2066},
            {3, 11, 4, 14, 2201},        {3, 13, 5, 13, 6574},        {3, 14, 5, 44, 19727},
            {3, 16, 6, 41, 59090},       {3, 17, 6, 133, 177280},     {3, 18, 7, 40, 177187},
            {4, 13, 5, 32, 65568},       {4, 15, 6, 30, 262174},      {4, 17, 6, 548, 4194852},
            {4, 18, 7, 128, 4194432},    {5, 12, 5, 7, 78132},        {5, 14, 5, 329, 1953454},
            {7, 14, 5, 1246, 40354853},  {8, 11, 4, 264, 2097416},    {8, 12, 5, 25, 2097177},
            {8, 14, 6, 21, 16777237},    {9, 8, 3, 41, 59090},        {9, 13, 5, 365, 43047086},
        };
        for (const auto& b : known) {
            const auto inst = decompose(b.q, b.n, b.t);
            const BigInt lower = BigInt(b.example) - b.d + 1;
            const auto t2 = theorem2_bound(inst);
            const auto df = drake_freeman_bound(inst);
            if (lower_bound_construction(inst).value != lower) o.fail(inst.label() + " construction differs");
            if (!t2 || !df) {
                o.fail(inst.label() + " Theorem2 absent");
                continue;
            }
            if (t2->value < b.example) o.fail(inst.label() + " Theorem2 below the known bound");
            if (t2->value > df->value) o.fail(inst.label() + " Theorem2 above DrakeFreeman");
        }
        o.detail = o.ok ? std::to_string(std::size(known)) + " instances" : o.detail;
        return o;
    });

    std::vector<oracle::PartialSpread> corpus;
    {
        std::mt19937_64 rng(20240601);
        const std::tuple<unsigned, unsigned, unsigned> shapes[] = {{2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {2, 6, 3},
                                                                   {2, 5, 3}, {3, 4, 2}, {3, 3, 2}, {2, 4, 3}};
        for (int i = 0; i < 200; ++i) {
            const auto [q, n, t] = shapes[i % std::size(shapes)];
            corpus.push_back(oracle::random_greedy_partial_spread(q, n, t, rng));
        }
    }
    run("5a", "standard equations on 200 random spreads", 30.0, [&] {
        Outcome o;
        for (const auto& s : corpus)
            if (!oracle::verify_standard_equations(oracle::hole_distribution(s)).ok)
                o.fail(s.instance.label() + " identity violated");
        return o;
    });
    run("5b", "hyperplane congruences on the same corpus", 30.0, [&] {
        Outcome o;
        std::size_t checked = 0;
        for (const auto& s : corpus) {
            if (s.members.empty()) continue;
            ++checked;
            if (!oracle::verify_hyperplane_congruences(s).ok) o.fail(s.instance.label() + " congruence violated");
        }
        if (o.ok) o.detail = std::to_string(checked) + " non-empty spreads";
        return o;
    });
    run("5c", "excluded family confirmed by the type test", 30.0, [] {
        Outcome o;
        int members = 0;
        for (unsigned q : kFields) {
            for (unsigned s = 2; s <= 4; ++s) {
                for (const auto& [i, c] : vsp::excluded_hole_family(q, s, s)) {
                    if (!vsp::exclude_hole_type(q, 2 * s + 2, vsp::HoleType(s, s, c)).excluded())
                        o.fail("q=" + std::to_string(q) + " s=" + std::to_string(s) + " i=" + std::to_string(i));
                    ++members;
                }
            }
        }
        if (o.ok) o.detail = std::to_string(members) + " members";
        return o;
    });
    run("5d", "tau second-difference identity", 30.0, [] {
        Outcome o;
        std::mt19937_64 rng(77);
        for (int k = 0; k < 1000; ++k) {
            const unsigned q = kFields[rng() % 7];
            const BigInt delta = q_pow(q, 1 + static_cast<unsigned>(rng() % 8));
            const BigInt c = BigInt(rng() % 100000000);
            const BigInt m = BigInt(static_cast<long long>(rng() % 20000001) - 10000000);
            const BigInt lhs = vsp::tau(q, c, delta, m + 1) - 2 * vsp::tau(q, c, delta, m) + vsp::tau(q, c, delta, m - 1);
            if (lhs != 2 * delta * delta * q * q) o.fail("mismatch at m=" + to_decimal(m));
        }
        return o;
    });

    run("6", "hole-count identity over a grid", 5.0, [] {
        Outcome o;
        // the first 500 instances (q ascending, then t, k, r) with q^t <= 4096, k in 2..4
        int instances = 0;
        std::uint64_t evaluations = 0;
        for (unsigned q : kFields) {
            for (unsigned t = 1; instances < 500 && q_pow(q, t) <= 4096; ++t) {
                for (unsigned k = 2; k <= 4 && instances < 500; ++k) {
                    for (unsigned r = 0; r < t && instances < 500; ++r) {
                        const auto inst = decompose(q, k * t + r, t);
                        const BigInt n_b = bracket_sum(inst.n(), q);
                        const BigInt t_b = bracket_sum(t, q);
                        const BigInt r_b = bracket_sum(r, q);
                        const BigInt qt = q_pow(q, t);
                        for (BigInt x = 1; x <= qt; ++x) {
                            if (n_b - (inst.base() + x) * t_b != r_b * qt - t_b * (x - 1))
                                o.fail(inst.label() + " x=" + to_decimal(x));
                            ++evaluations;
                        }
                        ++instances;
                    }
                }
            }
        }
        if (instances != 500) o.fail("grid has only " + std::to_string(instances) + " instances");
        if (o.ok) o.detail = std::to_string(instances) + " instances, " + std::to_string(evaluations) + " (instance, x) pairs";
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
