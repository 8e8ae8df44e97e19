#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercraft/invariants.hpp"
#include "covercraft/tables.hpp"

namespace covercraft {

struct ClassificationCase {
    std::string label;  // A.1, A.2.1..A.2.4, B.1, B.2.1..B.2.3, Thm3.6-case2
    CoverCandidate candidate;
    InvariantSet invariants;
    std::optional<std::string> swap_duplicate_of;  // set on S(1,1) ruling-swap doubles
    std::string source;                            // originating theorem tag
    std::string existence_note;                    // reduced-member certificates for D1, D2
};

/// Class-level facts about a branch class, the inputs of the smooth-member
/// constructions: a moving family with reduced members (fibers, lines of a
/// ruling, or a base-point-free system), or C0 plus a free residual missing
/// C0.
struct BranchFacts {
    bool effective{false};
    bool base_point_free{false};
    Int fixed_c0{0};
    bool zero{false};
    bool fiber_union{false};              // a = 0: union of fibers
    bool c0_ruling_union{false};          // e = 0, b = 0: lines of the other ruling
    bool c0_plus_free_residual{false};    // fixed part C0, residual free with residual.C0 = 0
};

BranchFacts branch_facts(const MinimalDegreeSurface& w, const DivisorClass& d);

/// True when `facts` certifies a reduced member at class level.
bool admits_reduced_member(const BranchFacts& facts);

/// Short certificate string, e.g. "union of fibers" or "base-point-free".
std::string existence_note(const MinimalDegreeSurface& w, const DivisorClass& d);

struct ConstraintCheck {
    std::string name;
    bool pass{false};
    std::string witness;
};

struct TupleReport {
    DivisorClass L1, L2;
    std::vector<ConstraintCheck> checks;
    bool accepted{false};
};

/// One entry per enumerated (L1, L2) tuple; every rejected tuple carries at
/// least one failed check.
struct ConstraintReport {
    std::vector<TupleReport> tuples;
};

struct ScrollClassification {
    std::vector<ClassificationCase> cases;  // sorted by label
    ConstraintReport report;
};

/// Exhaustive search over L1 = (a1, b1), L2 = (a2, b2) with a1 + a2 = 3,
/// b1 + b2 = m + e + 2, a_i in [0, 3], b_i in [0, m+e+2]. A tuple is kept iff
///   (C1) both branch classes are effective (make_candidate succeeds),
///   (C2) h0(H - L) = 0 for L in {L1, L2, L1+L2},
///   (C3) the C0 fixed-part multiplicities of D1 and D2 sum to at most 1.
/// Bidouble tuples are canonicalized to a1 > a2 (factor swap gives the same
/// fiber product). Throws InvalidBase for m < e+1 or e < 0.
ScrollClassification classify_scroll_with_report(Int e, Int m, GaloisGroup g);
std::vector<ClassificationCase> classify_scroll(Int e, Int m, GaloisGroup g);

/// Solves l1 + l2 = 4 with h0(O(1 - l_i)) = 0; the unique solution
/// l1 = l2 = 2 gives A.1 (two quartics) or B.1 (conic + quartic).
std::vector<ClassificationCase> classify_p2(GaloisGroup g);

struct ParityWitness {
    Int required_degree{0};  // restriction degree r + 1 demanded of each eigensheaf
    Int parity_modulus{2};   // restricted eigensheaf degrees are multiples of this
    bool solvable{false};
};

struct VeroneseClassification {
    std::vector<ClassificationCase> cases;  // always empty
    ParityWitness witness;
};

/// No covers of the Veronese surface: the required restriction degree
/// r + 1 = 5 is odd while eigensheaf restrictions to a hyperplane conic have
/// even degree.
VeroneseClassification classify_veronese();

/// The parity equation parity_modulus * l = required over the integers.
ParityWitness restriction_parity_probe(Int required, Int parity_modulus);

struct SimpleCyclicViolation {
    Int n{0}, e{0}, m{0};
    DivisorClass L;
};

/// For n in 4..n_max, e in 0..e_max, m in e+1..m_max, report every tuple
/// admitting a simple cyclic canonical cover class: (n-1) | 3,
/// (n-1) | (m+e+2), and h0(H - L) = 0 for (n-1)*L = (3, m+e+2).
/// The classification predicts an empty result.
std::vector<SimpleCyclicViolation> check_simple_cyclic_nonexistence(Int n_max, Int e_max,
                                                                    Int m_max);

/// Same probe for one fixed degree, usable outside the theorem's range
/// (advisory: degree 2 genuinely admits covers).
std::vector<SimpleCyclicViolation> probe_simple_cyclic_degree(Int n, Int e_max, Int m_max);

bool has_simple_cyclic_case(const std::vector<ClassificationCase>& cases);

/// True iff no Z4 case over the grid has D1 = 0.
bool z4_no_simple_cyclic_property(Int e_max, Int m_max);

/// Case label from (surface, group, D1, D2); "unmatched(...)" if the tuple is
/// not in the classification.
std::string label_for(const MinimalDegreeSurface& w, GaloisGroup g, const DivisorClass& d1,
                      const DivisorClass& d2);
std::string source_for(const std::string& label);

/// Ruling-swap image of a candidate on S(1,1); bidouble factors are
/// re-canonicalized. Throws unless the base is F0 with m = 1.
CoverCandidate swapped_candidate(const CoverCandidate& c);

}  // namespace covercraft
