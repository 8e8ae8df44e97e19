#include "covercraft/classify.hpp"

#include <algorithm>

namespace covercraft {

namespace {

struct LabelEntry {
    const char* label;
    const char* source;
};

// Case tags of the classification, keyed by (group, e, D1, D2) with the
// divisor classes written as linear forms in m. The same tags are transcribed
// independently into the expected-tables data file; diffing one against the
// other is the point of the tool.
std::string match_label(const MinimalDegreeSurface& w, GaloisGroup g, const DivisorClass& d1,
                        const DivisorClass& d2) {
    if (w.kind() == SurfaceKind::LinearP2) {
        if (g == GaloisGroup::Z2xZ2 && d1 == DivisorClass{4, 0} && d2 == DivisorClass{4, 0})
            return "A.1";
        if (g == GaloisGroup::Z4 && d1 == DivisorClass{2, 0} && d2 == DivisorClass{4, 0})
            return "B.1";
        return "";
    }
    if (!w.is_scroll()) return "";
    Int e = w.e();
    Int m = w.m();
    if (g == GaloisGroup::Z2xZ2) {
        if (d1 == DivisorClass{2, 2 * m + 2} && d2 == DivisorClass{4, 2 * e + 2}) return "A.2.1";
        if (e == 0) {
            if (d1 == DivisorClass{0, 2 * m + 2} && d2 == DivisorClass{6, 2}) return "A.2.2";
            if (d1 == DivisorClass{0, 2 * m + 4} && d2 == DivisorClass{6, 0}) return "A.2.3";
            if (d1 == DivisorClass{2, 2 * m + 4} && d2 == DivisorClass{4, 0}) return "A.2.4";
        }
        return "";
    }
    if (d1 == DivisorClass{0, 2 * m - e + 1} && d2 == DivisorClass{4, 2 * e + 2}) return "B.2.1";
    if (e == 0) {
        if (d1 == DivisorClass{0, 2 * m + 4} && d2 == DivisorClass{4, 0}) return "B.2.2";
        if (m == 1 && d1 == DivisorClass{3, 0} && d2 == DivisorClass{2, 4}) return "B.2.3";
        if (m == 1 && d1 == DivisorClass{6, 0} && d2 == DivisorClass{0, 4}) return "Thm3.6-case2";
    }
    return "";
}

constexpr LabelEntry kSources[] = {
    {"A.1", "Thm 2.11(2)"},   {"A.2.1", "Thm 3.8"},    {"A.2.2", "Thm 3.9(1)"},
    {"A.2.3", "Thm 3.9(2)"},  {"A.2.4", "Thm 3.9(3)"}, {"B.1", "Thm 2.11(1)"},
    {"B.2.1", "Thm 3.5(1)"},  {"B.2.2", "Thm 3.6(1)"}, {"B.2.3", "Thm 3.5(2)"},
    {"Thm3.6-case2", "Thm 3.6(2)"},
};

}  // namespace

std::string label_for(const MinimalDegreeSurface& w, GaloisGroup g, const DivisorClass& d1,
                      const DivisorClass& d2) {
    std::string label = match_label(w, g, d1, d2);
    if (!label.empty()) return label;
    return "unmatched(D1=" + w.class_to_string(d1) + ",D2=" + w.class_to_string(d2) + ")";
}

std::string source_for(const std::string& label) {
    for (const auto& entry : kSources)
        if (label == entry.label) return entry.source;
    return "";
}

BranchFacts branch_facts(const MinimalDegreeSurface& w, const DivisorClass& d) {
    BranchFacts facts;
    facts.effective = w.is_effective(d);
    if (!facts.effective) return facts;
    facts.zero = d.is_zero();
    facts.base_point_free = w.is_base_point_free(d);
    facts.fixed_c0 = w.fixed_c0_multiplicity(d);
    if (w.is_scroll() && !facts.zero) {
        facts.fiber_union = d.a == 0;
        facts.c0_ruling_union = w.e() == 0 && d.b == 0;
        if (facts.fixed_c0 == 1) {
            DivisorClass residual = d - DivisorClass{1, 0};
            facts.c0_plus_free_residual = w.is_effective(residual) &&
                                          w.is_base_point_free(residual) &&
                                          w.intersection_number(residual, {1, 0}) == 0;
        }
    }
    return facts;
}

bool admits_reduced_member(const BranchFacts& facts) {
    return facts.effective && (facts.zero || facts.base_point_free || facts.fiber_union ||
                               facts.c0_ruling_union || facts.c0_plus_free_residual);
}

std::string existence_note(const MinimalDegreeSurface& w, const DivisorClass& d) {
    BranchFacts facts = branch_facts(w, d);
    if (!facts.effective) return "not effective";
    if (facts.zero) return "zero class";
    if (facts.fiber_union) return "union of fibers";
    if (facts.c0_ruling_union) return "union of lines of the C0 ruling";
    if (facts.base_point_free) return "base-point-free";
    if (facts.c0_plus_free_residual) return "C0 + base-point-free residual missing C0";
    return "no reduced-member certificate";
}

namespace {

std::string case_existence_note(const CoverCandidate& c) {
    return "D1 " + existence_note(c.W, c.D1) + "; D2 " + existence_note(c.W, c.D2);
}

}  // namespace

CoverCandidate swapped_candidate(const CoverCandidate& c) {
    if (!c.W.is_scroll() || c.W.e() != 0 || c.W.m() != 1)
        throw InvalidBase("the ruling swap is an embedding symmetry of S(1,1) only");
    DivisorClass l1 = c.L1.swapped();
    DivisorClass l2 = c.L2.swapped();
    if (c.group == GaloisGroup::Z2xZ2 && l1.a < l2.a) std::swap(l1, l2);
    CoverCandidate sw = make_candidate(c.W, c.group, l1, l2);
    sw.label = label_for(c.W, c.group, sw.D1, sw.D2);
    return sw;
}

ScrollClassification classify_scroll_with_report(Int e, Int m, GaloisGroup g) {
    if (e < 0 || m < e + 1)
        throw InvalidBase("classify_scroll requires e >= 0 and m >= e+1 (smooth S(m-e,m)), got e=" +
                          std::to_string(e) + ", m=" + std::to_string(m));
    MinimalDegreeSurface w = MinimalDegreeSurface::scroll(e, m);
    DivisorClass h = w.hyperplane_class();
    ScrollClassification result;
    Int bsum = m + e + 2;
    for (Int a1 = 0; a1 <= 3; ++a1) {
        for (Int b1 = 0; b1 <= bsum; ++b1) {
            DivisorClass l1{a1, b1};
            DivisorClass l2{3 - a1, bsum - b1};
            TupleReport tr;
            tr.L1 = l1;
            tr.L2 = l2;
            if (g == GaloisGroup::Z2xZ2 && l1.a < l2.a) {
                // The fiber product is symmetric in its two factors; the
                // normal form puts the larger C0-coefficient first.
                tr.checks.push_back({"canonical-orientation", false,
                                     "factor swap duplicate of (L1,L2)=(" +
                                         w.class_to_string(l2) + "," + w.class_to_string(l1) + ")"});
                tr.accepted = false;
                result.report.tuples.push_back(std::move(tr));
                continue;
            }
            DivisorClass d1 = g == GaloisGroup::Z4 ? 2 * l1 - l2 : 2 * l2;
            DivisorClass d2 = g == GaloisGroup::Z4 ? 2 * l2 : 2 * l1;
            bool c1 = w.is_effective(d1) && w.is_effective(d2);
            tr.checks.push_back({"effective-branches", c1,
                                 !w.is_effective(d1) ? "D1=" + w.class_to_string(d1)
                                 : !w.is_effective(d2) ? "D2=" + w.class_to_string(d2)
                                                       : ""});
            bool c2 = true;
            std::string c2_witness;
            for (const DivisorClass& l : {l1, l2, l1 + l2}) {
                if (w.cohomology(h - l).h0 != 0) {
                    c2 = false;
                    c2_witness = "h0(H - " + w.class_to_string(l) + ") > 0";
                    break;
                }
            }
            tr.checks.push_back({"canonical-morphism", c2, c2_witness});
            bool c3 = true;
            std::string c3_witness;
            if (c1) {
                Int mult = w.fixed_c0_multiplicity(d1) + w.fixed_c0_multiplicity(d2);
                c3 = mult <= 1;
                if (!c3)
                    c3_witness = "C0 fixed multiplicity " + std::to_string(mult) + " in D1 + D2";
            }
            tr.checks.push_back({"reduced-branch", c3, c3_witness});
            tr.accepted = c1 && c2 && c3;
            if (tr.accepted) {
                CoverCandidate cand = make_candidate(w, g, l1, l2);
                cand.label = label_for(w, g, cand.D1, cand.D2);
                result.cases.push_back({cand.label, cand, invariant_set(cand), std::nullopt,
                                        source_for(cand.label), case_existence_note(cand)});
            }
            result.report.tuples.push_back(std::move(tr));
        }
    }
    // On S(1,1) the ruling swap is an automorphism of the embedding; mark the
    // doubles it produces, pointing at the earlier label.
    if (e == 0 && m == 1) {
        for (ClassificationCase& cc : result.cases) {
            CoverCandidate sw = swapped_candidate(cc.candidate);
            for (const ClassificationCase& other : result.cases) {
                if (other.candidate.D1 == sw.D1 && other.candidate.D2 == sw.D2 &&
                    other.label < cc.label) {
                    cc.swap_duplicate_of = other.label;
                    break;
                }
            }
        }
    }
    std::sort(result.cases.begin(), result.cases.end(),
              [](const ClassificationCase& x, const ClassificationCase& y) {
                  return x.label < y.label;
              });
    return result;
}

std::vector<ClassificationCase> classify_scroll(Int e, Int m, GaloisGroup g) {
    return classify_scroll_with_report(e, m, g).cases;
}

std::vector<ClassificationCase> classify_p2(GaloisGroup g) {
    MinimalDegreeSurface w = MinimalDegreeSurface::linear_p2();
    DivisorClass h = w.hyperplane_class();
    std::vector<ClassificationCase> out;
    for (Int l1 = 0; l1 <= 4; ++l1) {
        Int l2 = 4 - l1;
        if (g == GaloisGroup::Z2xZ2 && l1 < l2) continue;  // factor swap duplicate
        DivisorClass c1{l1, 0}, c2{l2, 0};
        if (w.cohomology(h - c1).h0 != 0 || w.cohomology(h - c2).h0 != 0) continue;
        DivisorClass d1 = g == GaloisGroup::Z4 ? 2 * c1 - c2 : 2 * c2;
        DivisorClass d2 = g == GaloisGroup::Z4 ? 2 * c2 : 2 * c1;
        if (!w.is_effective(d1) || !w.is_effective(d2)) continue;
        CoverCandidate cand = make_candidate(w, g, c1, c2);
        cand.label = label_for(w, g, cand.D1, cand.D2);
        out.push_back({cand.label, cand, invariant_set(cand), std::nullopt,
                       source_for(cand.label), case_existence_note(cand)});
    }
    std::sort(out.begin(), out.end(), [](const ClassificationCase& x, const ClassificationCase& y) {
        return x.label < y.label;
    });
    return out;
}

ParityWitness restriction_parity_probe(Int required, Int parity_modulus) {
    ParityWitness witness;
    witness.required_degree = required;
    witness.parity_modulus = parity_modulus;
    witness.solvable = parity_modulus != 0 && required % parity_modulus == 0;
    return witness;
}

VeroneseClassification classify_veronese() {
    MinimalDegreeSurface w = MinimalDegreeSurface::veronese();
    // Each eigensheaf must restrict to degree -(r+1) on a hyperplane curve,
    // but that curve is a conic, so restricted line-class degrees are even.
    Int required = checked_add(w.degree(), 1);
    return {{}, restriction_parity_probe(required, 2)};
}

std::vector<SimpleCyclicViolation> probe_simple_cyclic_degree(Int n, Int e_max, Int m_max) {
    std::vector<SimpleCyclicViolation> out;
    if (n < 2) return out;
    for (Int e = 0; e <= e_max; ++e) {
        for (Int m = e + 1; m <= m_max; ++m) {
            Int k = n - 1;
            if (3 % k != 0) continue;
            Int bsum = m + e + 2;
            if (bsum % k != 0) continue;
            DivisorClass l{3 / k, bsum / k};
            MinimalDegreeSurface w = MinimalDegreeSurface::scroll(e, m);
            if (w.cohomology(w.hyperplane_class() - l).h0 == 0) out.push_back({n, e, m, l});
        }
    }
    return out;
}

std::vector<SimpleCyclicViolation> check_simple_cyclic_nonexistence(Int n_max, Int e_max,
                                                                    Int m_max) {
    std::vector<SimpleCyclicViolation> out;
    for (Int n = 4; n <= n_max; ++n) {
        auto v = probe_simple_cyclic_degree(n, e_max, m_max);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

bool has_simple_cyclic_case(const std::vector<ClassificationCase>& cases) {
    return std::any_of(cases.begin(), cases.end(), [](const ClassificationCase& c) {
        return c.candidate.group == GaloisGroup::Z4 && c.candidate.D1.is_zero();
    });
}

bool z4_no_simple_cyclic_property(Int e_max, Int m_max) {
    for (Int e = 0; e <= e_max; ++e)
        for (Int m = e + 1; m <= m_max; ++m)
            if (has_simple_cyclic_case(classify_scroll(e, m, GaloisGroup::Z4))) return false;
    return true;
}

}  // namespace covercraft
