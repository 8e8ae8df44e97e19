#include <doctest.h>

#include <array>
#include <algorithm>

#include "covercraft/invariants.hpp"

using namespace covercraft;

namespace {

MinimalDegreeSurface fe(Int e, Int m) { return MinimalDegreeSurface::scroll(e, m); }
const MinimalDegreeSurface p2 = MinimalDegreeSurface::linear_p2();

// (2m-e+1)f + (4C0+(2e+2)f) tower candidate
CoverCandidate regular_z4(Int e, Int m) {
    return make_candidate(fe(e, m), GaloisGroup::Z4, {1, m + 1}, {2, e + 1});
}

// 2C0+(2m+2)f / 4C0+(2e+2)f fiber product candidate
CoverCandidate regular_bidouble(Int e, Int m) {
    return make_candidate(fe(e, m), GaloisGroup::Z2xZ2, {2, e + 1}, {1, m + 1});
}

}  // namespace

TEST_CASE("irregularity from the pushforward") {
    // (2m+4)f + 6C0 fiber product: q = m + 3
    auto c = make_candidate(fe(0, 4), GaloisGroup::Z2xZ2, {3, 0}, {0, 6});
    CHECK(irregularity(c) == 7);

    CHECK(irregularity(regular_bidouble(1, 3)) == 0);

    // (2m+4)f + 4C0 tower at m = 2: q = 1
    auto t = make_candidate(fe(0, 2), GaloisGroup::Z4, {1, 4}, {2, 0});
    CHECK(irregularity(t) == 1);

    // every P2 candidate is regular
    CHECK(irregularity(make_candidate(p2, GaloisGroup::Z4, {2, 0}, {2, 0})) == 0);
    CHECK(irregularity(make_candidate(p2, GaloisGroup::Z2xZ2, {2, 0}, {2, 0})) == 0);
}

TEST_CASE("geometric genus equals the hyperplane section count") {
    CHECK(geometric_genus(make_candidate(p2, GaloisGroup::Z4, {2, 0}, {2, 0})) == 3);
    CHECK(geometric_genus(regular_z4(1, 3)) == 7);  // 2m - e + 2

    // an f-multiple eigensheaf adds sections of (1,0): not a canonical cover
    auto bad = make_candidate(fe(0, 2), GaloisGroup::Z2xZ2, {0, 2}, {3, 2});
    CHECK_THROWS_AS(geometric_genus(bad), CanonicalMorphismViolated);
}

TEST_CASE("invariant sets, pinned values") {
    InvariantSet b1 = invariant_set(make_candidate(p2, GaloisGroup::Z4, {2, 0}, {2, 0}));
    CHECK(b1.p_g == 3);
    CHECK(b1.q == 0);
    CHECK(b1.chi == 4);
    CHECK(b1.K2 == 4);
    CHECK(b1.degW == 1);
    CHECK(b1.branch_product == 8);
    CHECK(b1.generic_A1 == 8);
    CHECK(b1.a1_note == A1Note::MildestPossible);

    InvariantSet t = invariant_set(regular_z4(0, 1));
    CHECK(t.degW == 2);
    CHECK(t.K2 == 8);
    CHECK(t.branch_product == 12);
    CHECK(t.generic_A1 == 12);

    // (2m+2)f + 6C0+2f fiber product at m = 1: q = m
    InvariantSet irr = invariant_set(make_candidate(fe(0, 1), GaloisGroup::Z2xZ2, {3, 1}, {0, 2}));
    CHECK(irr.q == 1);
    CHECK(irr.p_g == 4);
    CHECK(irr.chi == 4);
    CHECK(irr.generic_A1 == 0);
    CHECK(irr.a1_note == A1Note::Smoothable);
}

TEST_CASE("generic A1 counts") {
    // 6C0 + 4f tower on the quadric: exactly 4(r+4) = 24 nodes
    auto t36 = make_candidate(fe(0, 1), GaloisGroup::Z4, {3, 1}, {0, 2});
    A1Count c = generic_a1_count(t36);
    CHECK(c.value == 24);
    CHECK(c.note == A1Note::ExactCount);

    A1Count reg = generic_a1_count(regular_z4(2, 3));
    CHECK(reg.value == 20);  // 4(r+1), r = 4
    CHECK(reg.note == A1Note::MildestPossible);

    A1Count smooth = generic_a1_count(regular_bidouble(1, 2));
    CHECK(smooth.value == 0);
    CHECK(smooth.note == A1Note::Smoothable);
}

TEST_CASE("chi agreement and restriction profile across small families") {
    for (Int e = 0; e <= 2; ++e) {
        for (Int m = e + 1; m <= 8; ++m) {
            for (const auto& c : {regular_z4(e, m), regular_bidouble(e, m)}) {
                InvariantSet inv = invariant_set(c);  // asserts chi both ways
                CHECK(inv.chi == 1 - inv.q + inv.p_g);
                CHECK(inv.q == 0);
                Int r = c.W.degree();
                DivisorClass h = c.W.hyperplane_class();
                std::array<Int, 3> degs{c.W.intersection_number(c.L1, h),
                                        c.W.intersection_number(c.L2, h),
                                        c.W.intersection_number(c.L1 + c.L2, h)};
                std::sort(degs.begin(), degs.end());
                CHECK(degs == std::array<Int, 3>{r + 1, r + 1, 2 * r + 2});
            }
        }
    }
}

TEST_CASE("unbounded q and p_g along the classified families") {
    Int prev_q = -1;
    Int prev_pg = -1;
    for (Int m = 1; m <= 12; ++m) {
        // (2m+2)f + 6C0+2f family: q = m
        auto c = make_candidate(fe(0, m), GaloisGroup::Z2xZ2, {3, 1}, {0, m + 1});
        InvariantSet inv = invariant_set(c);
        CHECK(inv.q == m);
        CHECK(inv.q > prev_q);
        CHECK(inv.p_g == 2 * m + 2);
        CHECK(inv.p_g > prev_pg);
        prev_q = inv.q;
        prev_pg = inv.p_g;
    }
}
