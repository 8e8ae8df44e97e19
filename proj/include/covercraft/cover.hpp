#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "covercraft/surface.hpp"

namespace covercraft {

enum class GaloisGroup { Z4, Z2xZ2 };

std::string to_string(GaloisGroup g);
GaloisGroup parse_group(std::string_view s);  // accepts "z4", "z2z2", "z2xz2"; throws UsageError

/// Eigensheaf data of a degree-4 cyclic cover in the character presentation:
/// classes L_i, L_{-1}, L_{-i} of the eigenspace duals, plus the branch
/// pieces D11, D12, D23, D33 tying their products together.
struct Z4AlgebraData {
    DivisorClass Li, Lm1, Lmi;
    DivisorClass D11, D12, D23, D33;
};

/// Eigensheaf data of a bidouble cover: L1, L2, L3 and branch pieces
/// D1, D2, D3 with 2*Li = Dj + Dk and Lj + Lk = Li + Di for all permutations.
struct BidoubleAlgebraData {
    DivisorClass L1, L2, L3;
    DivisorClass D1, D2, D3;
};

/// Empty result means the data satisfies every class relation, the
/// compatibility equation and effectivity of all branch pieces.
std::vector<std::string> z4_violations(const MinimalDegreeSurface& w, const Z4AlgebraData& d);
bool validate_z4(const MinimalDegreeSurface& w, const Z4AlgebraData& d);

std::vector<std::string> bidouble_violations(const MinimalDegreeSurface& w,
                                             const BidoubleAlgebraData& d);
bool validate_bidouble(const MinimalDegreeSurface& w, const BidoubleAlgebraData& d);

/// Simple cyclic iff one tower of branch pieces vanishes:
/// D11 = D12 = 0 with D23 = D33, or D23 = D33 = 0 with D11 = D12.
/// Throws InvalidAlgebraData unless validate_z4 passes.
bool is_simple_cyclic(const MinimalDegreeSurface& w, const Z4AlgebraData& d);

/// A degree-4 Galois cover candidate held at divisor-class level.
/// Branch classes follow the group:
///   Z4:    D1 = 2*L1 - L2,  D2 = 2*L2   (normal form with D12 = 0)
///   Z2xZ2: D1 = 2*L2,       D2 = 2*L1   (fiber product, D3 = 0)
/// Aggregate-init is allowed so degenerate data stays representable; only
/// make_candidate() performs the checks.
struct CoverCandidate {
    MinimalDegreeSurface W;
    GaloisGroup group;
    DivisorClass L1, L2;
    DivisorClass D1, D2;
    std::string label;
};

/// Checked factory. Enforces L1 + L2 = -K_W + H (the pushforward splitting
/// constraint) and effectivity of both branch classes.
/// Throws SplittingConstraintViolated / NonEffectiveBranch naming the class.
CoverCandidate make_candidate(const MinimalDegreeSurface& w, GaloisGroup g,
                              const DivisorClass& l1, const DivisorClass& l2);

/// [0, -L1, -L2, -(L1+L2)] in this fixed order.
std::array<DivisorClass, 4> pushforward_summands(const CoverCandidate& c);

/// The class on W pulling back to the canonical bundle of the cover:
/// K_W + L1 + L2. Equals the hyperplane class for every checked candidate.
DivisorClass cover_canonical_class(const CoverCandidate& c);

Z4AlgebraData embed_z4(const CoverCandidate& c);              // group must be Z4
BidoubleAlgebraData embed_bidouble(const CoverCandidate& c);  // group must be Z2xZ2

struct Z4NormalForm {
    DivisorClass L1, L2, D1, D2;
};

/// Reduce raw Z4 data to the normal form with D12 = 0, swapping to the other
/// presentation when instead D23 = 0. Requires valid data with D12 = 0 or
/// D23 = 0; throws InvalidAlgebraData otherwise.
Z4NormalForm normalize_z4(const MinimalDegreeSurface& w, const Z4AlgebraData& d);

struct DoubleCoverStep {
    DivisorClass branch;      // branch class (on W; pulled back for the Z4 second step)
    DivisorClass trace_zero;  // trace-zero class (likewise)
    bool pulled_back{false};
    bool includes_ramification{false};  // ramification of the first step joins the branch
};

struct ConstructionPlan {
    GaloisGroup group;
    bool fiber_product{false};  // Z2xZ2: X = X1 x_W X2; Z4: tower p2 after p1
    DoubleCoverStep p1, p2;
    bool degenerate{false};  // advisory: some branch class is zero
};

/// Z2xZ2: fiber product of the double cover p1 branched along D2 (trace zero
/// -L1) with p2 branched along D1 (trace zero -L2). Z4: tower where p1 is
/// branched along D2 (trace zero -L2) and p2 along the ramification of p1
/// plus the pullback of D1, with trace zero the pullback of -L1; the halving
/// identity 4*L1 = 2*D1 + D2 is verified exactly.
/// Throws HalvingNotIntegral when hand-built Z4 data breaks that identity.
ConstructionPlan construction_plan(const CoverCandidate& c);

std::string describe(const ConstructionPlan& plan, const MinimalDegreeSurface& w);

}  // namespace covercraft
