#include "covercraft/invariants.hpp"

namespace covercraft {

std::string to_string(A1Note n) {
    switch (n) {
        case A1Note::MildestPossible: return "mildest";
        case A1Note::ExactCount: return "exact";
        case A1Note::Smoothable: return "smoothable";
        case A1Note::NotApplicable: return "n/a";
    }
    return {};
}

Int irregularity(const CoverCandidate& c) {
    Int q = 0;
    for (const DivisorClass& s : pushforward_summands(c))
        q = checked_add(q, c.W.cohomology(s).h1);
    return q;
}

Int geometric_genus(const CoverCandidate& c) {
    DivisorClass h = c.W.hyperplane_class();
    Int pg = 0;
    for (const DivisorClass& s : pushforward_summands(c))
        pg = checked_add(pg, c.W.cohomology(s + h).h0);
    Int expected = c.W.cohomology(h).h0;
    if (pg != expected)
        throw CanonicalMorphismViolated(
            "sections of the pulled-back hyperplane bundle: " + std::to_string(pg) +
            ", sections of O_W(1): " + std::to_string(expected) +
            " (extra sections, the cover map is not the canonical morphism)");
    return pg;
}

A1Count generic_a1_count(const CoverCandidate& c) {
    if (c.group == GaloisGroup::Z2xZ2) return {0, A1Note::Smoothable};
    Int v = c.W.intersection_number(c.D1, c.D2);
    return {v, irregularity(c) > 0 ? A1Note::ExactCount : A1Note::MildestPossible};
}

InvariantSet invariant_set(const CoverCandidate& c) {
    InvariantSet inv;
    inv.degW = c.W.degree();
    inv.K2 = checked_mul(4, inv.degW);
    inv.q = irregularity(c);
    inv.p_g = geometric_genus(c);
    inv.chi = checked_add(checked_sub(1, inv.q), inv.p_g);
    Int chi_pushforward = 0;
    for (const DivisorClass& s : pushforward_summands(c))
        chi_pushforward = checked_add(chi_pushforward, c.W.euler_characteristic_rr(s));
    if (chi_pushforward != inv.chi)
        throw CanonicalMorphismViolated("chi mismatch: sum over summands gives " +
                                        std::to_string(chi_pushforward) + ", 1 - q + p_g gives " +
                                        std::to_string(inv.chi));
    inv.branch_product = c.W.intersection_number(c.D1, c.D2);
    A1Count a1 = generic_a1_count(c);
    inv.generic_A1 = a1.value;
    inv.a1_note = a1.note;
    return inv;
}

}  // namespace covercraft
