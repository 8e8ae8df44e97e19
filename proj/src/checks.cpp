#include "covercraft/checks.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "covercraft/classify.hpp"
#include "covercraft/oracle.hpp"

namespace covercraft {

namespace {

constexpr Int kClassBound = 12;  // |a|, |b| (and |d|) for the cohomology grids
constexpr Int kScrollEMax = 5;   // e range for the cohomology grids
constexpr Int kTableEMax = 3;    // classification grid: e in 0..3 (e = 3 rows empty)
constexpr Int kTableMMax = 20;   // classification grid: m up to 20 (so r up to 40)

std::vector<MinimalDegreeSurface> cohomology_grid_surfaces() {
    std::vector<MinimalDegreeSurface> out{MinimalDegreeSurface::linear_p2(),
                                          MinimalDegreeSurface::veronese()};
    for (Int e = 0; e <= kScrollEMax; ++e) out.push_back(MinimalDegreeSurface::scroll(e, e + 1));
    return out;
}

std::vector<DivisorClass> grid_classes(const MinimalDegreeSurface& w, Int bound) {
    std::vector<DivisorClass> out;
    if (w.is_scroll()) {
        for (Int a = -bound; a <= bound; ++a)
            for (Int b = -bound; b <= bound; ++b) out.push_back({a, b});
    } else {
        for (Int d = -bound; d <= bound; ++d) out.push_back({d, 0});
    }
    return out;
}

struct CaseCollector {
    std::vector<ClassificationCase> cases;

    void collect_scrolls(GaloisGroup g, Int e_max = kTableEMax, Int m_max = kTableMMax) {
        for (Int e = 0; e <= e_max; ++e)
            for (Int m = e + 1; m <= m_max; ++m)
                for (auto& c : classify_scroll(e, m, g)) cases.push_back(std::move(c));
    }
    void collect_all() {
        for (GaloisGroup g : {GaloisGroup::Z2xZ2, GaloisGroup::Z4}) {
            for (auto& c : classify_p2(g)) cases.push_back(std::move(c));
            collect_scrolls(g);
        }
    }
};

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult check_cohomology_engine() {
    const std::string name = "cohomology-engine";
    Int checked = 0;
    for (const auto& w : cohomology_grid_surfaces()) {
        for (const DivisorClass& d : grid_classes(w, kClassBound)) {
            CohomologyDims dims = w.cohomology(d);
            Int oracle = section_count_oracle(w, d);
            if (dims.h0 != oracle)
                return fail(name, "h0 formula " + std::to_string(dims.h0) + " vs oracle " +
                                      std::to_string(oracle) + " at " + w.class_to_string(d) +
                                      " on " + w.name());
            CohomologyDims dual = w.cohomology(w.canonical_class() - d);
            if (dims.h0 != dual.h2 || dims.h1 != dual.h1 || dims.h2 != dual.h0)
                return fail(name, "Serre duality fails at " + w.class_to_string(d) + " on " +
                                      w.name());
            if (dims.euler() != w.euler_characteristic_rr(d))
                return fail(name, "Riemann-Roch fails at " + w.class_to_string(d) + " on " +
                                      w.name());
            if (w.is_effective(d) != (oracle > 0))
                return fail(name, "effectivity vs oracle mismatch at " + w.class_to_string(d) +
                                      " on " + w.name());
            ++checked;
        }
    }
    return pass(name, std::to_string(checked) + " classes checked");
}

CheckResult check_intersection_properties() {
    const std::string name = "intersection-bilinearity";
    for (const auto& w : cohomology_grid_surfaces()) {
        auto classes = grid_classes(w, 3);
        for (const DivisorClass& d : classes) {
            for (const DivisorClass& x : classes) {
                if (w.intersection_number(d, x) != w.intersection_number(x, d))
                    return fail(name, "not symmetric at " + w.class_to_string(d) + ", " +
                                          w.class_to_string(x) + " on " + w.name());
                for (const DivisorClass& y : {DivisorClass{1, 2}, DivisorClass{-2, 1}}) {
                    if (w.intersection_number(d + y, x) !=
                        w.intersection_number(d, x) + w.intersection_number(y, x))
                        return fail(name, "not bilinear at " + w.class_to_string(d) + " on " +
                                              w.name());
                }
            }
        }
    }
    return pass(name, "symmetry and bilinearity on all grids");
}

CheckResult check_base_point_free_properties() {
    const std::string name = "bpf-fixed-part";
    for (const auto& w : cohomology_grid_surfaces()) {
        for (const DivisorClass& d : grid_classes(w, kClassBound)) {
            if (!w.is_effective(d)) continue;
            if (w.is_base_point_free(d) && w.fixed_c0_multiplicity(d) != 0)
                return fail(name, "base-point-free class with fixed C0 at " +
                                      w.class_to_string(d) + " on " + w.name());
        }
    }
    return pass(name, "base-point-free classes have no fixed C0");
}

CheckResult check_algebra_embeddings() {
    const std::string name = "algebra-embeddings";
    CaseCollector all;
    all.collect_all();
    for (const ClassificationCase& c : all.cases) {
        const auto& w = c.candidate.W;
        if (cover_canonical_class(c.candidate) != w.hyperplane_class())
            return fail(name, "cover canonical class is not the hyperplane class for " + c.label);
        auto summands = pushforward_summands(c.candidate);
        if (!summands[0].is_zero() ||
            summands[3] != w.canonical_class() - w.hyperplane_class())
            return fail(name, "pushforward ends are not [O, .., K - H] for " + c.label);
        if (c.candidate.group == GaloisGroup::Z4) {
            Z4AlgebraData data = embed_z4(c.candidate);
            if (!validate_z4(w, data))
                return fail(name, "embedded Z4 data invalid for " + c.label + ": " +
                                      z4_violations(w, data).front());
            if (is_simple_cyclic(w, data) != c.candidate.D1.is_zero())
                return fail(name, "simple-cyclic criterion disagrees with D1 = 0 for " + c.label);
            Z4NormalForm nf = normalize_z4(w, data);
            if (nf.L1 != c.candidate.L1 || nf.L2 != c.candidate.L2 || nf.D1 != c.candidate.D1 ||
                nf.D2 != c.candidate.D2)
                return fail(name, "normal form does not round-trip for " + c.label);
            construction_plan(c.candidate);  // throws HalvingNotIntegral if 4L1 != 2D1 + D2
        } else {
            BidoubleAlgebraData data = embed_bidouble(c.candidate);
            if (!validate_bidouble(w, data))
                return fail(name, "embedded bidouble data invalid for " + c.label + ": " +
                                      bidouble_violations(w, data).front());
            if (!data.D3.is_zero()) return fail(name, "bidouble embedding has D3 != 0");
        }
    }
    return pass(name, std::to_string(all.cases.size()) + " candidates embedded and validated");
}

CheckResult check_p2_classification(const ExpectedTables& tables) {
    const std::string name = "p2-classification";
    auto p2 = MinimalDegreeSurface::linear_p2();
    auto bidouble = classify_p2(GaloisGroup::Z2xZ2);
    if (bidouble.size() != 1 || bidouble[0].label != "A.1" ||
        bidouble[0].candidate.D1 != DivisorClass{4, 0} ||
        bidouble[0].candidate.D2 != DivisorClass{4, 0})
        return fail(name, "Z2xZ2 over P2 is not exactly {A.1: two quartics}");
    auto cyclic = classify_p2(GaloisGroup::Z4);
    if (cyclic.size() != 1 || cyclic[0].label != "B.1" ||
        cyclic[0].candidate.D1 != DivisorClass{2, 0} ||
        cyclic[0].candidate.D2 != DivisorClass{4, 0})
        return fail(name, "Z4 over P2 is not exactly {B.1: conic + quartic}");
    if (cyclic[0].invariants.generic_A1 != 8)
        return fail(name, "B.1 generic A1 count is " +
                              std::to_string(cyclic[0].invariants.generic_A1) + ", want 8");
    for (GaloisGroup g : {GaloisGroup::Z2xZ2, GaloisGroup::Z4}) {
        DiffReport diff = diff_against_builtin(classify_p2(g), p2, g, tables);
        if (!diff.empty()) return fail(name, "P2 diff (" + to_string(g) + "): " + diff.str());
    }
    return pass(name, "A.1 and B.1 match, B.1 has 8 A1 points");
}

namespace {

CheckResult check_tables_grid(const std::string& name, GaloisGroup g,
                              const ExpectedTables& tables) {
    Int cells = 0;
    for (Int e = 0; e <= kTableEMax; ++e) {
        for (Int m = e + 1; m <= kTableMMax; ++m) {
            MinimalDegreeSurface w = MinimalDegreeSurface::scroll(e, m);
            auto cases = classify_scroll(e, m, g);
            DiffReport diff = diff_against_builtin(cases, w, g, tables);
            if (!diff.empty())
                return fail(name, "diff at e=" + std::to_string(e) + ", m=" + std::to_string(m) +
                                      ": " + diff.str());
            if (e == 3 && !cases.empty())
                return fail(name, "e = 3 row is not empty at m=" + std::to_string(m));
            ++cells;
        }
    }
    return pass(name, std::to_string(cells) + " grid cells match the tables");
}

}  // namespace

CheckResult check_bidouble_tables(const ExpectedTables& tables) {
    return check_tables_grid("scroll-bidouble-tables", GaloisGroup::Z2xZ2, tables);
}

CheckResult check_z4_tables(const ExpectedTables& tables) {
    CheckResult grid = check_tables_grid("scroll-z4-tables", GaloisGroup::Z4, tables);
    if (!grid.pass) return grid;
    // The S(1,1) doubles must carry their swap links.
    auto cases = classify_scroll(0, 1, GaloisGroup::Z4);
    std::map<std::string, std::optional<std::string>> links;
    for (const auto& c : cases) links[c.label] = c.swap_duplicate_of;
    if (links["B.2.3"] != std::optional<std::string>("B.2.1") ||
        links["Thm3.6-case2"] != std::optional<std::string>("B.2.2") ||
        links["B.2.1"] || links["B.2.2"])
        return fail(grid.name, "swap links at e=0, m=1 are wrong");
    return grid;
}

CheckResult check_irregularity_values() {
    const std::string name = "irregularity-values";
    CaseCollector all;
    all.collect_all();
    for (const ClassificationCase& c : all.cases) {
        Int m = c.candidate.W.is_scroll() ? c.candidate.W.m() : 0;
        Int expected;
        if (c.label == "A.2.2")
            expected = m;
        else if (c.label == "A.2.3")
            expected = m + 3;
        else if (c.label == "A.2.4" || c.label == "B.2.2" || c.label == "Thm3.6-case2")
            expected = 1;
        else
            expected = 0;  // A.1, A.2.1, B.1, B.2.1, B.2.3
        Int q = irregularity(c.candidate);
        if (q != expected || q != c.invariants.q)
            return fail(name, c.label + " at m=" + std::to_string(m) + ": q computed " +
                                  std::to_string(q) + ", want " + std::to_string(expected));
    }
    return pass(name, "q matches on every classified case, m up to " +
                          std::to_string(kTableMMax));
}

CheckResult check_a1_counts() {
    const std::string name = "a1-counts";
    CaseCollector z4;
    for (auto& c : classify_p2(GaloisGroup::Z4)) z4.cases.push_back(std::move(c));
    z4.collect_scrolls(GaloisGroup::Z4);
    for (const ClassificationCase& c : z4.cases) {
        Int product = c.candidate.W.intersection_number(c.candidate.D1, c.candidate.D2);
        if (c.invariants.generic_A1 != product)
            return fail(name, c.label + ": generic A1 is not D1.D2");
        if (c.candidate.W.is_scroll()) {
            Int r = c.candidate.W.degree();
            Int expected = c.invariants.q == 0 ? 4 * (r + 1) : 4 * (r + 4);
            if (c.invariants.generic_A1 != expected)
                return fail(name, c.label + " at r=" + std::to_string(r) + ": A1 count " +
                                      std::to_string(c.invariants.generic_A1) + ", want " +
                                      std::to_string(expected));
            if (c.invariants.a1_note !=
                (c.invariants.q == 0 ? A1Note::MildestPossible : A1Note::ExactCount))
                return fail(name, c.label + ": wrong attainability note");
        } else if (c.invariants.generic_A1 != 8) {
            return fail(name, "B.1 count is not 8");
        }
    }
    CaseCollector bidouble;
    for (auto& c : classify_p2(GaloisGroup::Z2xZ2)) bidouble.cases.push_back(std::move(c));
    bidouble.collect_scrolls(GaloisGroup::Z2xZ2);
    for (const ClassificationCase& c : bidouble.cases)
        if (c.invariants.generic_A1 != 0 || c.invariants.a1_note != A1Note::Smoothable)
            return fail(name, c.label + ": bidouble cases must be smoothable with count 0");
    return pass(name, "4(r+1) regular / 4(r+4) irregular, always D1.D2, r up to 40");
}

CheckResult check_nonexistence() {
    const std::string name = "nonexistence";
    auto violations = check_simple_cyclic_nonexistence(20, 10, 50);
    if (!violations.empty())
        return fail(name, "simple cyclic probe found a tuple at n=" +
                              std::to_string(violations.front().n));
    auto veronese = classify_veronese();
    if (!veronese.cases.empty()) return fail(name, "Veronese classification is not empty");
    if (veronese.witness.required_degree != 5 || veronese.witness.solvable)
        return fail(name, "Veronese parity witness is not {required 5, unsolvable mod 2}");
    if (!z4_no_simple_cyclic_property(10, 30))
        return fail(name, "a Z4 case with D1 = 0 appeared");
    return pass(name, "no simple cyclic tuples up to (20,10,50); Veronese witness 5; Z4 D1 != 0");
}

CheckResult check_global_consistency(const ExpectedTables& tables) {
    const std::string name = "global-consistency";
    (void)tables;
    CaseCollector all;
    all.collect_all();
    for (const ClassificationCase& c : all.cases) {
        const MinimalDegreeSurface& w = c.candidate.W;
        Int chi_sum = 0;
        for (const DivisorClass& s : pushforward_summands(c.candidate))
            chi_sum = checked_add(chi_sum, w.euler_characteristic_rr(s));
        if (chi_sum != 1 - c.invariants.q + c.invariants.p_g)
            return fail(name, c.label + ": chi disagrees between the two routes");
        if (cover_canonical_class(c.candidate) != w.hyperplane_class())
            return fail(name, c.label + ": canonical class of the cover is not H");
        if (!matches_splitting_profile(c))
            return fail(name, c.label + ": pushforward does not match its splitting profile");
        if (c.invariants.q == 0) {
            DivisorClass h = w.hyperplane_class();
            Int r = w.degree();
            std::array<Int, 3> degs{w.intersection_number(c.candidate.L1, h),
                                    w.intersection_number(c.candidate.L2, h),
                                    w.intersection_number(c.candidate.L1 + c.candidate.L2, h)};
            std::sort(degs.begin(), degs.end());
            if (degs != std::array<Int, 3>{r + 1, r + 1, 2 * r + 2})
                return fail(name, c.label + ": hyperplane restriction profile is not {r+1, r+1, 2r+2}");
        }
    }
    return pass(name, std::to_string(all.cases.size()) +
                          " cases: chi two ways, omega_X = phi*H, splitting and restriction "
                          "profiles");
}

CheckResult check_ruling_swap_closure() {
    const std::string name = "ruling-swap-closure";
    for (GaloisGroup g : {GaloisGroup::Z2xZ2, GaloisGroup::Z4}) {
        auto cases = classify_scroll(0, 1, g);
        for (const ClassificationCase& c : cases) {
            CoverCandidate sw = swapped_candidate(c.candidate);
            bool found = std::any_of(cases.begin(), cases.end(), [&](const auto& other) {
                return other.candidate.D1 == sw.D1 && other.candidate.D2 == sw.D2;
            });
            if (!found)
                return fail(name, "swap image of " + c.label + " is not classified (" +
                                      to_string(g) + ")");
        }
    }
    auto z4 = classify_scroll(0, 1, GaloisGroup::Z4);
    auto find = [&z4](const std::string& label) -> const ClassificationCase* {
        for (const auto& c : z4)
            if (c.label == label) return &c;
        return nullptr;
    };
    auto swaps_to = [](const ClassificationCase& from, const ClassificationCase& to) {
        CoverCandidate sw = swapped_candidate(from.candidate);
        return sw.D1 == to.candidate.D1 && sw.D2 == to.candidate.D2;
    };
    const auto* b21 = find("B.2.1");
    const auto* b23 = find("B.2.3");
    if (!b21 || !b23 || !swaps_to(*b21, *b23))
        return fail(name, "B.2.3 is not the swap image of B.2.1 at m=1");
    const auto* b22 = find("B.2.2");
    const auto* t36 = find("Thm3.6-case2");
    if (!b22 || !t36 || !swaps_to(*b22, *t36))
        return fail(name, "Thm3.6-case2 is not the swap image of B.2.2 at m=1");
    return pass(name, "S(1,1) output is closed under the ruling swap");
}

CheckResult check_unboundedness() {
    const std::string name = "unboundedness-witnesses";
    Int prev_q = -1;
    for (Int m = 1; m <= kTableMMax; ++m) {
        auto cases = classify_scroll(0, m, GaloisGroup::Z2xZ2);
        auto it = std::find_if(cases.begin(), cases.end(),
                               [](const auto& c) { return c.label == "A.2.2"; });
        if (it == cases.end()) return fail(name, "A.2.2 missing at m=" + std::to_string(m));
        if (it->invariants.q != m || it->invariants.q <= prev_q)
            return fail(name, "q(A.2.2) is not strictly increasing to m at m=" +
                                  std::to_string(m));
        prev_q = it->invariants.q;
    }
    for (Int e = 0; e <= 2; ++e) {
        Int prev_pg = -1;
        for (Int m = e + 1; m <= kTableMMax; ++m) {
            auto cases = classify_scroll(e, m, GaloisGroup::Z4);
            for (const auto& c : cases) {
                if (c.invariants.p_g != 2 * m - e + 2)
                    return fail(name, c.label + ": p_g != 2m - e + 2");
            }
            if (!cases.empty()) {
                if (cases.front().invariants.p_g <= prev_pg)
                    return fail(name, "p_g is not strictly increasing in m at e=" +
                                          std::to_string(e));
                prev_pg = cases.front().invariants.p_g;
            }
        }
    }
    return pass(name, "q(A.2.2) = m and p_g = 2m - e + 2 grow with m");
}

CheckResult check_branch_existence() {
    const std::string name = "branch-existence";
    CaseCollector all;
    all.collect_all();
    for (const ClassificationCase& c : all.cases) {
        for (const DivisorClass& d : {c.candidate.D1, c.candidate.D2}) {
            if (!admits_reduced_member(branch_facts(c.candidate.W, d)))
                return fail(name, c.label + ": no reduced-member certificate for " +
                                      c.candidate.W.class_to_string(d));
        }
        if (c.existence_note.empty() ||
            c.existence_note.find("no reduced-member certificate") != std::string::npos)
            return fail(name, c.label + ": existence note missing");
    }
    return pass(name, "every branch class is free, a union of ruling lines, or C0 + a free "
                      "residual missing C0");
}

CheckResult check_mutation_sensitivity(const ExpectedTables& tables) {
    const std::string name = "mutation-sensitivity";
    for (const ExpectedCaseTemplate& record : tables.records()) {
        ExpectedTables mutated = tables.without(record.label);
        MinimalDegreeSurface w = record.surface == SurfaceKind::Scroll
                                     ? MinimalDegreeSurface::scroll(
                                           record.e_min, record.m_exact
                                                             ? *record.m_exact
                                                             : record.m_min.eval(0, record.e_min))
                                     : MinimalDegreeSurface::linear_p2();
        auto cases = w.is_scroll() ? classify_scroll(w.e(), w.m(), record.group)
                                   : classify_p2(record.group);
        if (!diff_against_builtin(cases, w, record.group, tables).empty())
            return fail(name, "unmutated tables already diff at " + record.label);
        if (diff_against_builtin(cases, w, record.group, mutated).empty())
            return fail(name, "dropping " + record.label + " goes unnoticed");
    }
    return pass(name, "dropping any of the " + std::to_string(tables.records().size()) +
                          " records is detected");
}

std::vector<CheckResult> run_all_checks(const ExpectedTables& tables) {
    return {
        check_cohomology_engine(),
        check_intersection_properties(),
        check_base_point_free_properties(),
        check_algebra_embeddings(),
        check_p2_classification(tables),
        check_bidouble_tables(tables),
        check_z4_tables(tables),
        check_irregularity_values(),
        check_a1_counts(),
        check_nonexistence(),
        check_global_consistency(tables),
        check_ruling_swap_closure(),
        check_unboundedness(),
        check_branch_existence(),
        check_mutation_sensitivity(tables),
    };
}

}  // namespace covercraft
