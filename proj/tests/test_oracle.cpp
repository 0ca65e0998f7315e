#include "spreadbound/oracle.hpp"
#include "spreadbound/vsp.hpp"

#include <doctest.h>

#include <sstream>

using namespace spreadbound;
using namespace spreadbound::oracle;

namespace {

SearchBudget independent() {
    SearchBudget b;
    b.stop_at_upper_bound = false;  // only the point-count bound prunes
    b.max_seconds = std::chrono::duration<double>(60.0);
    return b;
}

PartialSpread best_witness(unsigned q, unsigned n, unsigned t) {
    return max_partial_spread(q, n, t, independent()).witness;
}

} // namespace

TEST_CASE("exhaustive search without the bounds module") {
    struct Case {
        unsigned q, n, t;
        std::uint64_t size;
    };
    for (const Case& c : {Case{2, 4, 2, 5}, Case{2, 5, 2, 9}, Case{3, 4, 2, 10}, Case{2, 6, 2, 21}, Case{2, 6, 3, 9},
                          Case{2, 3, 2, 1}, Case{2, 5, 3, 1}}) {
        CAPTURE(c.q);
        CAPTURE(c.n);
        CAPTURE(c.t);
        const auto r = max_partial_spread(c.q, c.n, c.t, independent());
        CHECK(r.proven_optimal);
        CHECK(r.size == c.size);
        CHECK(r.witness.members.size() == c.size);
        validate(r.witness);
        // same answer when the bounds module may stop the search early
        CHECK(max_partial_spread(c.q, c.n, c.t).size == c.size);
    }
}

TEST_CASE("search is deterministic and respects budgets") {
    const auto a = max_partial_spread(2, 5, 2, independent());
    const auto b = max_partial_spread(2, 5, 2, independent());
    CHECK(a.size == b.size);
    CHECK(a.nodes == b.nodes);

    SearchBudget tiny = independent();
    tiny.max_nodes = 3;
    const auto c = max_partial_spread(3, 5, 2, tiny);
    CHECK_FALSE(c.proven_optimal);
    validate(c.witness);
    CHECK(c.size <= 28);

    CHECK_THROWS_AS(max_partial_spread(2, 8, 2), CapacityError);

    // with the bounds module's stopping rule the 28-line partial spread of F_3^5 is quick
    const auto d = max_partial_spread(3, 5, 2);
    CHECK(d.size == 28);
    CHECK(d.proven_optimal);
}

TEST_CASE("greedy mode") {
    SearchBudget g;
    g.mode = SearchMode::Greedy;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        g.seed = seed;
        const auto r = max_partial_spread(2, 6, 2, g);
        validate(r.witness);
        CHECK(r.size >= 1);
        CHECK(r.size <= 21);
    }
}

TEST_CASE("hole distribution of the maximum partial 2-spread in F_2^5") {
    const auto w = best_witness(2, 5, 2);
    REQUIRE(w.members.size() == 9);
    const auto dist = hole_distribution(w);
    CHECK(dist.c == 4);
    // frozen regression value; forced by the three identities once every count is even
    CHECK(dist.a == std::map<std::uint64_t, std::uint64_t>{{0, 4}, {2, 24}, {4, 3}});
    const auto eq = verify_standard_equations(dist);
    CHECK(eq.ok);
    CHECK(eq.residuals[0] == 0);

    HoleDistribution broken = dist;
    ++broken.a[0];
    const auto bad = verify_standard_equations(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.residuals[0] == 1);
    CHECK(bad.residuals[1] == 0);

    const auto cong = verify_hyperplane_congruences(w);
    CHECK(cong.ok);
    CHECK(cong.x == 1);
    CHECK(cong.residue == 0);
    CHECK(cong.modulus == 2);
    CHECK(cong.hyperplanes_checked == 31);
}

TEST_CASE("hole distribution edge cases") {
    const auto spread = best_witness(2, 4, 2);
    const auto full = hole_distribution(spread);
    CHECK(full.c == 0);
    CHECK(full.a == std::map<std::uint64_t, std::uint64_t>{{0, 15}});
    CHECK(verify_standard_equations(full).ok);
    const auto cong = verify_hyperplane_congruences(spread);
    CHECK(cong.ok);
    CHECK(cong.x == 1);
    CHECK(cong.residue == 0);

    const auto empty = make_partial_spread(decompose(2, 3, 2), {});
    const auto d = hole_distribution(empty);
    CHECK(d.c == 7);
    CHECK(d.a == std::map<std::uint64_t, std::uint64_t>{{3, 7}});
    CHECK(verify_standard_equations(d).ok);

    const auto inst = decompose(2, 4, 2);
    const auto one = make_partial_spread(inst, {spread.members.front()});
    const auto c1 = verify_hyperplane_congruences(one);
    CHECK(c1.ok);
    CHECK(c1.hyperplanes_checked == 15);
}

TEST_CASE("counting checks on random greedy partial spreads") {
    std::mt19937_64 rng(99);
    struct Inst {
        unsigned q, n, t;
    };
    std::size_t spreads = 0;
    for (int round = 0; round < 10; ++round) {
        for (const Inst& in : {Inst{2, 4, 2}, Inst{2, 5, 2}, Inst{2, 6, 2}, Inst{2, 6, 3}, Inst{3, 4, 2}, Inst{2, 5, 3},
                               Inst{3, 3, 2}}) {
            const auto s = random_greedy_partial_spread(in.q, in.n, in.t, rng);
            validate(s);
            CHECK(verify_standard_equations(hole_distribution(s)).ok);
            if (!s.members.empty()) {
                CHECK(verify_hyperplane_congruences(s).ok);
                for (const auto& [i, c] : vsp::excluded_hole_family(in.q, in.t, in.t)) CHECK(s.hole_count() != c);
            }
            ++spreads;
        }
    }
    CHECK(spreads == 70);
}

TEST_CASE("validate rejects broken spreads") {
    auto s = best_witness(2, 4, 2);
    auto dup = s;
    dup.members.push_back(dup.members.front());
    CHECK_THROWS_AS(validate(dup), InternalError);
    auto wrong_holes = s;
    wrong_holes.holes.set(0);
    CHECK_THROWS_AS(validate(wrong_holes), InternalError);
}

TEST_CASE("witness text round-trip") {
    for (const auto& [q, n, t] : {std::tuple{2u, 5u, 2u}, std::tuple{3u, 4u, 2u}, std::tuple{2u, 6u, 3u}}) {
        const auto w = best_witness(q, n, t);
        const std::string text = format_witness(w);
        CHECK(text.rfind("# ", 0) == 0);
        std::istringstream in(text);
        const auto back = parse_witness(in, q, n, t);
        REQUIRE(back.members.size() == w.members.size());
        for (std::size_t i = 0; i < w.members.size(); ++i) CHECK(back.members[i].basis == w.members[i].basis);
        CHECK(back.holes == w.holes);
        CHECK(format_witness(back) == text);
    }
}

TEST_CASE("witness parse errors") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_witness(in, 2, 4, 2);
    };
    CHECK(parse("# nothing\n\n").members.empty());
    CHECK(parse("1000 0100\n0010 0001\n").members.size() == 2);
    CHECK_THROWS_AS(parse("1000 010\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("1000 0120\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("1000 1000\n"), std::invalid_argument);            // rank 1
    CHECK_THROWS_AS(parse("1000 0100\n1000 0010\n"), std::invalid_argument); // members meet
}

TEST_CASE("cross_check") {
    for (const auto& [q, n, t, size] :
         {std::tuple{2u, 5u, 2u, 9ull}, std::tuple{2u, 4u, 2u, 5ull}, std::tuple{2u, 6u, 2u, 21ull}}) {
        const auto rep = cross_check(q, n, t);
        CHECK(rep.passed);
        CHECK(rep.search.size == size);
        CHECK(rep.bounds.exact);
        CHECK(rep.bounds.upper.value == size);
        CHECK(rep.oracle_bound.method == Method::Oracle);
        CHECK(rep.oracle_bound.params.witness_id.has_value());
        CHECK_FALSE(rep.lines.empty());
    }
}
