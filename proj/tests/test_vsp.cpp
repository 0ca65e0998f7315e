#include "spreadbound/vsp.hpp"

#include <doctest.h>

#include <random>

using namespace spreadbound;
using namespace spreadbound::vsp;

namespace {

// F(m) written out directly from tau, independent of the quadratic coefficients.
BigInt direct_f(unsigned q, unsigned n, unsigned s, const BigInt& c, const BigInt& m) {
    const BigInt delta = q_pow(q, s - 1);
    return tau(q, c, delta, m) * q_pow(q, n - 2) / (delta * delta) - m * (m - 1);
}

} // namespace

TEST_CASE("tau") {
    CHECK(tau(2, 2, 2, 1) == -2);
    CHECK(tau(2, 2, 2, 0) == 14);
    for (unsigned q : {2u, 5u, 9u}) CHECK(tau(q, 0, q, 0) == 0);
    CHECK(tau(3, 6, 3, -4) == 1620 + 972 + 156);
}

TEST_CASE("tau has constant second difference") {
    std::mt19937_64 rng(11);
    const unsigned fields[] = {2, 3, 4, 5, 7, 8, 9};
    for (int i = 0; i < 1000; ++i) {
        const unsigned q = fields[rng() % 7];
        const unsigned s = 2 + static_cast<unsigned>(rng() % 6);
        const BigInt delta = q_pow(q, s - 1);
        const BigInt c = BigInt(rng() % 1000000);
        const BigInt m = BigInt(static_cast<long long>(rng() % 2000001) - 1000000);
        CHECK(tau(q, c, delta, m + 1) - 2 * tau(q, c, delta, m) + tau(q, c, delta, m - 1) ==
              2 * delta * delta * q * q);
    }
}

TEST_CASE("hyperplane_type_test") {
    CHECK(hyperplane_type_test(2, 5, HoleType(2, 2, 2), 1) == -4);
    CHECK(hyperplane_type_test(7, 9, HoleType(3, 3, 0), 0) == 0);
    CHECK(hyperplane_type_test(3, 6, HoleType(2, 2, 6), 2) < 0);
    CHECK_THROWS_AS(hyperplane_type_test(2, 5, HoleType(3, 3, 2), 1), std::invalid_argument);  // n < 2s
    CHECK_THROWS_AS(hyperplane_type_test(2, 4, HoleType(4, 2, 2), 1), std::invalid_argument);  // n <= t
    CHECK_THROWS_AS(HoleType(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(HoleType(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(HoleType(3, 2, -1), std::invalid_argument);
    for (unsigned q : {2u, 3u, 4u})
        for (BigInt m = -5; m <= 5; ++m) CHECK(hyperplane_type_test(q, 7, HoleType(3, 3, 5), m) == direct_f(q, 7, 3, 5, m));
}

TEST_CASE("exclude_hole_type examples") {
    const auto a = exclude_hole_type(2, 5, HoleType(2, 2, 2));
    CHECK(a.excluded());
    CHECK(*a.witness_m == 1);
    CHECK(*a.f_value == -4);
    const auto b = exclude_hole_type(2, 6, HoleType(2, 2, 3));
    CHECK_FALSE(b.excluded());
    CHECK_FALSE(b.witness_m);
    CHECK_FALSE(b.f_value);
    for (BigInt m = -10; m <= 10; ++m) CHECK(direct_f(2, 6, 2, 3, m) >= 0);
    const auto c = exclude_hole_type(3, 6, HoleType(2, 2, 6));
    CHECK(c.excluded());
    CHECK(*c.f_value < 0);
    CHECK_FALSE(c.trace.empty());
}

TEST_CASE("vertex probe agrees with a brute-force minimum") {
    std::size_t points = 0;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        for (unsigned s = 2; s <= 4; ++s) {
            const BigInt delta = q_pow(q, s - 1);
            const BigInt reach = 4 * q * delta;
            const BigInt c_max = 2 * q_pow(q, s);
            // all c for small q^s, a stride otherwise to stay quick
            const BigInt step = c_max <= 400 ? BigInt(1) : c_max / 397;
            for (unsigned n = 2 * s; n <= 2 * s + 6; ++n) {
                for (BigInt c = 0; c <= c_max; c += step) {
                    const HoleType type(s, s, c);
                    const auto verdict = exclude_hole_type(q, n, type);
                    // F is convex: walk down from m = 0 to the minimum
                    BigInt m = 0;
                    BigInt best = hyperplane_type_test(q, n, type, m);
                    for (int dir : {1, -1}) {
                        BigInt mm = m + dir;
                        while (mm >= -reach && mm <= reach) {
                            const BigInt f = hyperplane_type_test(q, n, type, mm);
                            if (f > best) break;
                            best = f;
                            mm += dir;
                        }
                    }
                    CHECK(verdict.excluded() == (best < 0));
                    if (verdict.excluded()) CHECK(*verdict.f_value == best);
                    ++points;
                }
            }
        }
    }
    CHECK(points > 10000);
}

TEST_CASE("vertex probe matches a full scan on small grids") {
    for (unsigned q : {2u, 3u}) {
        for (unsigned s = 2; s <= 3; ++s) {
            const BigInt reach = 4 * q * q_pow(q, s - 1);
            for (unsigned n = 2 * s; n <= 2 * s + 3; ++n) {
                for (BigInt c = 0; c <= 2 * q_pow(q, s); ++c) {
                    const HoleType type(s, s, c);
                    BigInt best = hyperplane_type_test(q, n, type, -reach);
                    for (BigInt m = -reach; m <= reach; ++m) best = std::min(best, hyperplane_type_test(q, n, type, m));
                    CHECK(exclude_hole_type(q, n, type).excluded() == (best < 0));
                }
            }
        }
    }
}

TEST_CASE("excluded_hole_family") {
    using Family = std::vector<std::pair<unsigned, BigInt>>;
    CHECK(excluded_hole_family(2, 2, 2) == Family{{1, 2}});
    CHECK(excluded_hole_family(3, 2, 2) == Family{{1, 6}});
    CHECK(excluded_hole_family(2, 3, 3) == Family{{1, 3}, {2, 11}});
    CHECK_THROWS_AS(excluded_hole_family(2, 2, 3), std::invalid_argument);
}

TEST_CASE("every family member is excluded") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        for (unsigned s = 2; s <= 4; ++s) {
            for (unsigned n = 2 * s; n <= 2 * s + 4; ++n) {
                for (const auto& [i, c] : excluded_hole_family(q, s, s)) {
                    const HoleType type(s, s, c);
                    const auto v = exclude_hole_type(q, n, type);
                    CAPTURE(q);
                    CAPTURE(s);
                    CAPTURE(n);
                    CAPTURE(i);
                    REQUIRE(v.excluded());
                    CHECK(*v.f_value <= hyperplane_type_test(q, n, type, BigInt(i) * (q - 1)));
                    CHECK(hyperplane_type_test(q, n, type, BigInt(i) * (q - 1)) < 0);
                }
            }
        }
    }
}

TEST_CASE("hyperplane_hole_residue") {
    CHECK(hyperplane_hole_residue(4, 1, 2, 2) == 0);
    for (unsigned q : {2u, 3u, 7u}) {
        CHECK(hyperplane_hole_residue(0, 1, q, 2) == 0);
        CHECK_THROWS_AS(hyperplane_hole_residue(1, 1, q, 2), std::invalid_argument);  // m1 + x - 1 = 1
    }
    CHECK(hyperplane_hole_residue(120, 1, 2, 4) == 4);  // 120/2 = 60 = 4 (mod 8)
    CHECK_THROWS_AS(hyperplane_hole_residue(120, 2, 2, 4), std::invalid_argument);  // 121 is odd
}

TEST_CASE("descend_holes") {
    const auto id = descend_holes(5, 3, 2, 2, 3, 0);
    CHECK(id.b_new == 5);
    CHECK(id.c_new == 3);
    CHECK(id.L_max == 5 * 8 + 3);
    const auto a = descend_holes(7, -63, 2, 2, 6, 3);
    CHECK(a.c_new == -7);
    CHECK(a.b_new == 4);
    CHECK(a.residue_mod == 8);
    CHECK(a.L_max == 25);
    const auto b = descend_holes(3, 0, 1, 2, 3, 1);
    CHECK(b.c_new == 0);
    CHECK(b.L_max == 8);
    CHECK_THROWS_AS(descend_holes(3, 1, 1, 2, 3, 4), std::invalid_argument);  // j > s - 1
    CHECK_THROWS_AS(descend_holes(3, 1, 1, 2, 3, 1), std::invalid_argument);  // 2 does not divide 1
    CHECK_THROWS_AS(descend_holes(3, 0, 0, 2, 3, 1), std::invalid_argument);  // x < 1
}

TEST_CASE("descend_holes composes") {
    // hole counts m1 = [r]_q q^t - [t]_q (x-1) as they arise from partial spreads
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        for (unsigned s = 3; s <= 7; ++s) {
            for (unsigned r = 1; r < s; ++r) {
                for (BigInt x = 2; x <= 2 + 2 * q; ++x) {
                    const BigInt b = q_bracket(r, q);
                    const BigInt c = -(x - 1) * q_bracket(s, q);
                    const unsigned f = q_valuation(x - 1, q);
                    if (f >= s) continue;
                    const unsigned j_max = s - std::max(1u, f);
                    for (unsigned j = 0; j <= j_max; ++j) {
                        const auto whole = descend_holes(b, c, x, q, s, j);
                        CHECK(whole.L_max == whole.b_new * q_pow(q, s - j) + whole.c_new);
                        for (unsigned j1 = 0; j1 <= j; ++j1) {
                            const auto first = descend_holes(b, c, x, q, s, j1);
                            const auto second = descend_holes(first.b_new, first.c_new, x, q, s - j1, j - j1);
                            CHECK(second.c_new == whole.c_new);
                            CHECK(second.b_new == whole.b_new);
                            CHECK(second.L_max == whole.L_max);
                            CHECK(second.residue_mod == whole.residue_mod);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("spread_hole_bound") {
    const auto a = spread_hole_bound(decompose(2, 15, 6), 2, 0, 3, 4);
    CHECK(a.w == -30);
    CHECK(a.L_max == 50);
    CHECK(a.subspace_dim == 13);
    CHECK(floor_mod(a.L_max - a.w_residue, 16) == 0);

    // z = 0, y = 1, x = 2: t = [r]_q + 1
    for (unsigned q : {2u, 3u, 5u}) {
        for (unsigned r = 1; r <= 2; ++r) {
            const unsigned t = static_cast<unsigned>(q_bracket(r, q)) + 1;
            const auto trace = spread_hole_bound(decompose(q, 2 * t + r, t), 0, 0, 2, 1);
            CHECK(trace.L_max == -1);
        }
    }

    const auto c = spread_hole_bound(decompose(9, 18, 8), 3, 0, 20, 2);
    CHECK(c.w == -190);
    CHECK(c.L_max == 134);
    CHECK(c.m1 == 10 * q_pow(9, 8) - q_bracket(8, 9) * 19);
    CHECK_FALSE(c.steps.empty());

    CHECK_THROWS_AS(spread_hole_bound(decompose(2, 15, 6), 2, 0, 1, 4), std::invalid_argument);  // x < 2
    CHECK_THROWS_AS(spread_hole_bound(decompose(2, 15, 6), 2, 0, 3, 7), std::invalid_argument);  // y > t
    CHECK_THROWS_AS(spread_hole_bound(decompose(2, 15, 6), 2, 1, 3, 4), std::invalid_argument);  // t mismatch
    CHECK_THROWS_AS(spread_hole_bound(decompose(2, 15, 6), 2, 0, 5, 1), std::invalid_argument);  // y < v_q(x-1)
}
