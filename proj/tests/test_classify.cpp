#include <doctest.h>

#include <algorithm>
#include <vector>

#include "covercraft/classify.hpp"

using namespace covercraft;

namespace {

std::vector<std::string> labels(const std::vector<ClassificationCase>& cases) {
    std::vector<std::string> out;
    for (const auto& c : cases) out.push_back(c.label);
    return out;
}

const ClassificationCase* find_case(const std::vector<ClassificationCase>& cases,
                                    const std::string& label) {
    for (const auto& c : cases)
        if (c.label == label) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("bidouble scroll classification") {
    auto cases = classify_scroll(0, 3, GaloisGroup::Z2xZ2);
    CHECK(labels(cases) == std::vector<std::string>{"A.2.1", "A.2.2", "A.2.3", "A.2.4"});
    CHECK(find_case(cases, "A.2.1")->candidate.D1 == DivisorClass{2, 8});
    CHECK(find_case(cases, "A.2.1")->candidate.D2 == DivisorClass{4, 2});
    CHECK(find_case(cases, "A.2.2")->candidate.D1 == DivisorClass{0, 8});
    CHECK(find_case(cases, "A.2.2")->candidate.D2 == DivisorClass{6, 2});
    CHECK(find_case(cases, "A.2.3")->candidate.D1 == DivisorClass{0, 10});
    CHECK(find_case(cases, "A.2.3")->candidate.D2 == DivisorClass{6, 0});
    CHECK(find_case(cases, "A.2.4")->candidate.D1 == DivisorClass{2, 10});
    CHECK(find_case(cases, "A.2.4")->candidate.D2 == DivisorClass{4, 0});

    auto e2 = classify_scroll(2, 3, GaloisGroup::Z2xZ2);
    CHECK(labels(e2) == std::vector<std::string>{"A.2.1"});

    CHECK(classify_scroll(3, 4, GaloisGroup::Z2xZ2).empty());
}

TEST_CASE("Z4 scroll classification") {
    // e >= 1 supports only the regular tower family
    auto e1 = classify_scroll(1, 2, GaloisGroup::Z4);
    CHECK(labels(e1) == std::vector<std::string>{"B.2.1"});
    CHECK(e1[0].candidate.D1 == DivisorClass{0, 4});
    CHECK(e1[0].candidate.D2 == DivisorClass{4, 4});

    // e = 0 adds the irregular (2m+4)f + 4C0 family at every m
    auto e0 = classify_scroll(0, 2, GaloisGroup::Z4);
    CHECK(labels(e0) == std::vector<std::string>{"B.2.1", "B.2.2"});
    CHECK(find_case(e0, "B.2.1")->candidate.D1 == DivisorClass{0, 5});
    CHECK(find_case(e0, "B.2.1")->candidate.D2 == DivisorClass{4, 2});
    CHECK(find_case(e0, "B.2.2")->candidate.D1 == DivisorClass{0, 8});

    CHECK(classify_scroll(3, 4, GaloisGroup::Z4).empty());

    CHECK_THROWS_AS(classify_scroll(3, 2, GaloisGroup::Z4), InvalidBase);
    CHECK_THROWS_AS(classify_scroll(-1, 2, GaloisGroup::Z4), InvalidBase);
}

TEST_CASE("the quadric S(1,1) carries the swap doubles") {
    auto z4 = classify_scroll(0, 1, GaloisGroup::Z4);
    CHECK(labels(z4) ==
          std::vector<std::string>{"B.2.1", "B.2.2", "B.2.3", "Thm3.6-case2"});
    CHECK(find_case(z4, "B.2.3")->candidate.D1 == DivisorClass{3, 0});
    CHECK(find_case(z4, "B.2.3")->candidate.D2 == DivisorClass{2, 4});
    CHECK(find_case(z4, "B.2.3")->swap_duplicate_of == std::optional<std::string>("B.2.1"));
    CHECK(find_case(z4, "Thm3.6-case2")->candidate.D1 == DivisorClass{6, 0});
    CHECK(find_case(z4, "Thm3.6-case2")->swap_duplicate_of ==
          std::optional<std::string>("B.2.2"));
    CHECK_FALSE(find_case(z4, "B.2.1")->swap_duplicate_of.has_value());
    CHECK_FALSE(find_case(z4, "B.2.2")->swap_duplicate_of.has_value());

    auto bid = classify_scroll(0, 1, GaloisGroup::Z2xZ2);
    CHECK(labels(bid) == std::vector<std::string>{"A.2.1", "A.2.2", "A.2.3", "A.2.4"});
    CHECK(find_case(bid, "A.2.4")->swap_duplicate_of == std::optional<std::string>("A.2.2"));
    CHECK_FALSE(find_case(bid, "A.2.1")->swap_duplicate_of.has_value());  // self-swap

    // closure: the swap image of every case is again a case
    for (const auto& all : {z4, bid}) {
        for (const auto& c : all) {
            CoverCandidate sw = swapped_candidate(c.candidate);
            CHECK(std::any_of(all.begin(), all.end(), [&](const auto& other) {
                return other.candidate.D1 == sw.D1 && other.candidate.D2 == sw.D2;
            }));
        }
    }

    // the swap is an automorphism of S(1,1) only
    auto other = classify_scroll(0, 2, GaloisGroup::Z4);
    CHECK_THROWS_AS(swapped_candidate(other.front().candidate), InvalidBase);
}

TEST_CASE("P2 classification") {
    auto bid = classify_p2(GaloisGroup::Z2xZ2);
    REQUIRE(bid.size() == 1);
    CHECK(bid[0].label == "A.1");
    CHECK(bid[0].candidate.D1 == DivisorClass{4, 0});
    CHECK(bid[0].candidate.D2 == DivisorClass{4, 0});
    CHECK(bid[0].source == "Thm 2.11(2)");

    auto cyc = classify_p2(GaloisGroup::Z4);
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0].label == "B.1");
    CHECK(cyc[0].candidate.D1 == DivisorClass{2, 0});
    CHECK(cyc[0].candidate.D2 == DivisorClass{4, 0});
    CHECK(cyc[0].invariants.generic_A1 == 8);
}

TEST_CASE("no covers of the Veronese surface") {
    auto result = classify_veronese();
    CHECK(result.cases.empty());
    CHECK(result.witness.required_degree == 5);
    CHECK(result.witness.parity_modulus == 2);
    CHECK_FALSE(result.witness.solvable);

    // sanity: the same parity probe on linear P2 (r = 1) is solvable
    CHECK(restriction_parity_probe(2, 2).solvable);
}

TEST_CASE("simple cyclic non-existence") {
    CHECK(check_simple_cyclic_nonexistence(20, 6, 24).empty());

    // at n = 4 every divisibility-passing tuple dies on the section count:
    // h0(H - L) = m - (m+e+2)/3 + 1 > 0 exactly because 2m - e - 2 >= 0
    for (Int e = 0; e <= 6; ++e) {
        for (Int m = e + 1; m <= 24; ++m) {
            if ((m + e + 2) % 3 != 0) continue;
            auto w = MinimalDegreeSurface::scroll(e, m);
            DivisorClass l{1, (m + e + 2) / 3};
            CHECK(w.cohomology(w.hyperplane_class() - l).h0 > 0);
            CHECK(2 * m - e - 2 >= 0);
        }
    }

    // degree 2 sits outside the statement and genuinely admits covers
    CHECK_FALSE(probe_simple_cyclic_degree(2, 3, 10).empty());
    // degree 3 already fails the divisibility (n - 1 = 2 does not divide 3)
    CHECK(probe_simple_cyclic_degree(3, 3, 10).empty());
}

TEST_CASE("no Z4 case is simple cyclic") {
    CHECK(z4_no_simple_cyclic_property(4, 12));

    auto cases = classify_scroll(0, 1, GaloisGroup::Z4);
    CHECK(find_case(cases, "B.2.1")->candidate.D1 == DivisorClass{0, 3});
    CHECK_FALSE(has_simple_cyclic_case(cases));

    // a hand-built candidate with D1 = 0 is flagged by the predicate
    CoverCandidate fake{MinimalDegreeSurface::scroll(0, 1), GaloisGroup::Z4,
                        {1, 1},  {2, 2},  {0, 0}, {4, 4}, "fake"};
    std::vector<ClassificationCase> doctored{{"fake", fake, {}, std::nullopt, "", ""}};
    CHECK(has_simple_cyclic_case(doctored));
}

TEST_CASE("diffing against the shipped tables") {
    const ExpectedTables& tables = ExpectedTables::builtin();

    auto w = MinimalDegreeSurface::scroll(0, 5);
    auto cases = classify_scroll(0, 5, GaloisGroup::Z2xZ2);
    CHECK(diff_against_builtin(cases, w, GaloisGroup::Z2xZ2, tables).empty());

    auto w12 = MinimalDegreeSurface::scroll(1, 2);
    CHECK(diff_against_builtin(classify_scroll(1, 2, GaloisGroup::Z4), w12, GaloisGroup::Z4,
                               tables)
              .empty());

    // mutation self-test: a dropped record surfaces as an extra search result
    ExpectedTables mutated = tables.without("A.2.4");
    DiffReport diff = diff_against_builtin(cases, w, GaloisGroup::Z2xZ2, mutated);
    CHECK_FALSE(diff.empty());
    CHECK(diff.extra.size() == 1);
    CHECK(diff.extra.front().find("A.2.4") != std::string::npos);
    CHECK(diff.missing.empty());

    // every produced case follows its splitting profile
    for (const auto& c : cases) CHECK(matches_splitting_profile(c));
}

TEST_CASE("constraint report covers every enumerated tuple") {
    ScrollClassification result = classify_scroll_with_report(2, 3, GaloisGroup::Z2xZ2);
    CHECK(result.cases.size() == 1);
    CHECK(!result.report.tuples.empty());
    for (const TupleReport& t : result.report.tuples) {
        if (t.accepted) continue;
        CHECK(std::any_of(t.checks.begin(), t.checks.end(),
                          [](const ConstraintCheck& c) { return !c.pass; }));
    }
    // the e <= 2 exclusion is exactly the reduced-branch constraint
    ScrollClassification e3 = classify_scroll_with_report(3, 4, GaloisGroup::Z2xZ2);
    CHECK(e3.cases.empty());
    bool saw_reduced_failure = false;
    for (const TupleReport& t : e3.report.tuples)
        for (const ConstraintCheck& c : t.checks)
            if (c.name == "reduced-branch" && !c.pass) saw_reduced_failure = true;
    CHECK(saw_reduced_failure);
}

TEST_CASE("branch classes carry reduced-member certificates") {
    auto f2 = MinimalDegreeSurface::scroll(2, 3);
    CHECK(existence_note(f2, {0, 5}) == "union of fibers");
    CHECK(existence_note(f2, {4, 6}) == "C0 + base-point-free residual missing C0");
    CHECK(existence_note(f2, {2, 8}) == "base-point-free");
    CHECK(existence_note(f2, {-1, 2}) == "not effective");
    CHECK(existence_note(f2, {0, 0}) == "zero class");
    auto f0 = MinimalDegreeSurface::scroll(0, 1);
    CHECK(existence_note(f0, {6, 0}) == "union of lines of the C0 ruling");
    CHECK(existence_note(MinimalDegreeSurface::linear_p2(), {4, 0}) == "base-point-free");
    // (4, 2e+2) at e = 3 has 2C0 fixed: exactly the non-normal configurations
    // the search rejects
    auto f3 = MinimalDegreeSurface::scroll(3, 4);
    CHECK_FALSE(admits_reduced_member(branch_facts(f3, {4, 8})));

    for (const auto& c : classify_scroll(2, 3, GaloisGroup::Z2xZ2)) {
        CHECK(admits_reduced_member(branch_facts(c.candidate.W, c.candidate.D1)));
        CHECK(admits_reduced_member(branch_facts(c.candidate.W, c.candidate.D2)));
        CHECK(c.existence_note ==
              "D1 base-point-free; D2 C0 + base-point-free residual missing C0");
    }
}

TEST_CASE("exhaustive search beyond the acceptance grid") {
    // e >= 3 stays empty however large the base grows
    for (Int e = 3; e <= 5; ++e)
        for (Int m : {e + 1, e + 7})
            for (GaloisGroup g : {GaloisGroup::Z2xZ2, GaloisGroup::Z4})
                CHECK(classify_scroll(e, m, g).empty());

    // the family tables keep matching at m well past the pinned grid
    const ExpectedTables& tables = ExpectedTables::builtin();
    for (Int e = 0; e <= 2; ++e) {
        auto w = MinimalDegreeSurface::scroll(e, 30);
        for (GaloisGroup g : {GaloisGroup::Z2xZ2, GaloisGroup::Z4}) {
            auto cases = classify_scroll(e, 30, g);
            CHECK(diff_against_builtin(cases, w, g, tables).empty());
            for (const auto& c : cases) CHECK(c.label.rfind("unmatched", 0) == std::string::npos);
        }
    }
}

TEST_CASE("output ordering is deterministic") {
    for (int run = 0; run < 2; ++run) {
        auto cases = classify_scroll(0, 4, GaloisGroup::Z2xZ2);
        CHECK(std::is_sorted(cases.begin(), cases.end(),
                             [](const ClassificationCase& x, const ClassificationCase& y) {
                                 return x.label < y.label;
                             }));
    }
}
