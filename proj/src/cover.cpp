#include "covercraft/cover.hpp"

#include <cctype>

namespace covercraft {

std::string to_string(GaloisGroup g) { return g == GaloisGroup::Z4 ? "Z4" : "Z2xZ2"; }

GaloisGroup parse_group(std::string_view s) {
    std::string t;
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "z4") return GaloisGroup::Z4;
    if (t == "z2z2" || t == "z2xz2") return GaloisGroup::Z2xZ2;
    throw UsageError("unknown group '" + std::string(s) + "' (expected z4 or z2z2)");
}

namespace {

void check_relation(std::vector<std::string>& out, const char* name, const DivisorClass& lhs,
                    const DivisorClass& rhs, const MinimalDegreeSurface& w) {
    if (lhs != rhs)
        out.push_back(std::string(name) + ": " + w.class_to_string(lhs) +
                      " != " + w.class_to_string(rhs));
}

void check_effective(std::vector<std::string>& out, const char* name, const DivisorClass& d,
                     const MinimalDegreeSurface& w) {
    if (!w.is_effective(d))
        out.push_back(std::string(name) + " not effective: " + w.class_to_string(d));
}

}  // namespace

std::vector<std::string> z4_violations(const MinimalDegreeSurface& w, const Z4AlgebraData& d) {
    std::vector<std::string> out;
    check_effective(out, "D11", d.D11, w);
    check_effective(out, "D12", d.D12, w);
    check_effective(out, "D23", d.D23, w);
    check_effective(out, "D33", d.D33, w);
    check_relation(out, "D11+D23 = D12+D33", d.D11 + d.D23, d.D12 + d.D33, w);
    check_relation(out, "2Li = Lm1 + D11", 2 * d.Li, d.Lm1 + d.D11, w);
    check_relation(out, "Li + Lm1 = Lmi + D12", d.Li + d.Lm1, d.Lmi + d.D12, w);
    check_relation(out, "Li + Lmi = D11 + D23", d.Li + d.Lmi, d.D11 + d.D23, w);
    check_relation(out, "2Lm1 = D12 + D23", 2 * d.Lm1, d.D12 + d.D23, w);
    check_relation(out, "Lm1 + Lmi = Li + D23", d.Lm1 + d.Lmi, d.Li + d.D23, w);
    check_relation(out, "2Lmi = Lm1 + D33", 2 * d.Lmi, d.Lm1 + d.D33, w);
    return out;
}

bool validate_z4(const MinimalDegreeSurface& w, const Z4AlgebraData& d) {
    return z4_violations(w, d).empty();
}

std::vector<std::string> bidouble_violations(const MinimalDegreeSurface& w,
                                             const BidoubleAlgebraData& d) {
    std::vector<std::string> out;
    check_effective(out, "D1", d.D1, w);
    check_effective(out, "D2", d.D2, w);
    check_effective(out, "D3", d.D3, w);
    check_relation(out, "2L1 = D2 + D3", 2 * d.L1, d.D2 + d.D3, w);
    check_relation(out, "2L2 = D1 + D3", 2 * d.L2, d.D1 + d.D3, w);
    check_relation(out, "2L3 = D1 + D2", 2 * d.L3, d.D1 + d.D2, w);
    check_relation(out, "L2 + L3 = L1 + D1", d.L2 + d.L3, d.L1 + d.D1, w);
    check_relation(out, "L1 + L3 = L2 + D2", d.L1 + d.L3, d.L2 + d.D2, w);
    check_relation(out, "L1 + L2 = L3 + D3", d.L1 + d.L2, d.L3 + d.D3, w);
    return out;
}

bool validate_bidouble(const MinimalDegreeSurface& w, const BidoubleAlgebraData& d) {
    return bidouble_violations(w, d).empty();
}

bool is_simple_cyclic(const MinimalDegreeSurface& w, const Z4AlgebraData& d) {
    auto bad = z4_violations(w, d);
    if (!bad.empty()) throw InvalidAlgebraData("is_simple_cyclic on invalid data: " + bad.front());
    bool first = d.D11.is_zero() && d.D12.is_zero() && d.D23 == d.D33;
    bool second = d.D23.is_zero() && d.D33.is_zero() && d.D11 == d.D12;
    return first || second;
}

CoverCandidate make_candidate(const MinimalDegreeSurface& w, GaloisGroup g,
                              const DivisorClass& l1, const DivisorClass& l2) {
    DivisorClass required = w.hyperplane_class() - w.canonical_class();
    if (l1 + l2 != required)
        throw SplittingConstraintViolated(
            "L1 + L2 = " + w.class_to_string(l1 + l2) + " but the splitting requires -K + H = " +
            w.class_to_string(required) + " on " + w.name());
    DivisorClass d1, d2;
    if (g == GaloisGroup::Z4) {
        d1 = 2 * l1 - l2;
        d2 = 2 * l2;
    } else {
        d1 = 2 * l2;
        d2 = 2 * l1;
    }
    if (!w.is_effective(d1))
        throw NonEffectiveBranch("D1 = " + w.class_to_string(d1) + " is not effective");
    if (!w.is_effective(d2))
        throw NonEffectiveBranch("D2 = " + w.class_to_string(d2) + " is not effective");
    return {w, g, l1, l2, d1, d2, ""};
}

std::array<DivisorClass, 4> pushforward_summands(const CoverCandidate& c) {
    return {DivisorClass{}, -c.L1, -c.L2, -(c.L1 + c.L2)};
}

DivisorClass cover_canonical_class(const CoverCandidate& c) {
    return c.W.canonical_class() + c.L1 + c.L2;
}

Z4AlgebraData embed_z4(const CoverCandidate& c) {
    if (c.group != GaloisGroup::Z4) throw InvalidAlgebraData("embed_z4 on a bidouble candidate");
    return {c.L1, c.L2, c.L1 + c.L2, c.D1, DivisorClass{}, c.D2, c.D1 + c.D2};
}

BidoubleAlgebraData embed_bidouble(const CoverCandidate& c) {
    if (c.group != GaloisGroup::Z2xZ2)
        throw InvalidAlgebraData("embed_bidouble on a cyclic candidate");
    return {c.L1, c.L2, c.L1 + c.L2, c.D1, c.D2, DivisorClass{}};
}

Z4NormalForm normalize_z4(const MinimalDegreeSurface& w, const Z4AlgebraData& d) {
    auto bad = z4_violations(w, d);
    if (!bad.empty()) throw InvalidAlgebraData("normalize_z4 on invalid data: " + bad.front());
    if (d.D12.is_zero()) return {d.Li, d.Lm1, d.D11, d.D23};
    // Swap to the presentation generated by the other primitive character.
    if (d.D23.is_zero()) return {d.Lmi, d.Lm1, d.D33, d.D12};
    throw InvalidAlgebraData("normalize_z4 requires D12 = 0 or D23 = 0");
}

ConstructionPlan construction_plan(const CoverCandidate& c) {
    ConstructionPlan plan;
    plan.group = c.group;
    plan.degenerate = c.D1.is_zero() || c.D2.is_zero();
    if (c.group == GaloisGroup::Z2xZ2) {
        plan.fiber_product = true;
        plan.p1 = {c.D2, -c.L1, false, false};
        plan.p2 = {c.D1, -c.L2, false, false};
        return plan;
    }
    // Tower: the trace-zero class of p2 is the pullback of -L1, which must
    // equal -(1/2 D1 + 1/4 D2); exactly, 4*L1 = 2*D1 + D2.
    if (4 * c.L1 != 2 * c.D1 + c.D2)
        throw HalvingNotIntegral("4*L1 = " + c.W.class_to_string(4 * c.L1) +
                                 " but 2*D1 + D2 = " + c.W.class_to_string(2 * c.D1 + c.D2));
    plan.fiber_product = false;
    plan.p1 = {c.D2, -c.L2, false, false};
    plan.p2 = {c.D1, -c.L1, true, true};
    return plan;
}

std::string describe(const ConstructionPlan& plan, const MinimalDegreeSurface& w) {
    std::string s;
    if (plan.group == GaloisGroup::Z2xZ2) {
        s = "fiber product over " + w.name() + " of p1 (branch " +
            w.class_to_string(plan.p1.branch) + ", trace zero " +
            w.class_to_string(plan.p1.trace_zero) + ") and p2 (branch " +
            w.class_to_string(plan.p2.branch) + ", trace zero " +
            w.class_to_string(plan.p2.trace_zero) + ")";
    } else {
        s = "tower over " + w.name() + ": p1 branched along " +
            w.class_to_string(plan.p1.branch) + " (trace zero " +
            w.class_to_string(plan.p1.trace_zero) + "), then p2 branched along the ramification of p1 plus the pullback of " +
            w.class_to_string(plan.p2.branch) + " (trace zero pullback of " +
            w.class_to_string(plan.p2.trace_zero) + ")";
    }
    if (plan.degenerate) s += " [degenerate: a branch class is zero]";
    return s;
}

}  // namespace covercraft
