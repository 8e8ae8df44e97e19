#pragma once

#include <string>

#include "covercraft/cover.hpp"

namespace covercraft {

/// How the generic A1 count is to be read:
///   MildestPossible — the count is attained by the mildest configuration,
///   ExactCount      — every member of the family has exactly this count,
///   Smoothable      — a smooth member exists (count 0),
///   NotApplicable   — no statement.
enum class A1Note { MildestPossible, ExactCount, Smoothable, NotApplicable };

std::string to_string(A1Note n);

struct InvariantSet {
    Int p_g{0};
    Int q{0};
    Int chi{0};
    Int K2{0};
    Int degW{0};
    Int branch_product{0};  // D1.D2
    Int generic_A1{0};
    A1Note a1_note{A1Note::NotApplicable};

    friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// q = sum of h1 over the pushforward summands.
Int irregularity(const CoverCandidate& c);

/// p_g = sum of h0(summand + H); checked against h0(H) = deg W + 2, the
/// canonical-morphism identity. Throws CanonicalMorphismViolated when the two
/// differ (a Galois cover that is not a canonical cover).
Int geometric_genus(const CoverCandidate& c);

struct A1Count {
    Int value{0};
    A1Note note{A1Note::NotApplicable};
};

/// Z4: D1.D2, the A1 count of the mildest configuration (exact for the
/// irregular families). Z2xZ2: 0, a smooth member exists.
A1Count generic_a1_count(const CoverCandidate& c);

/// All invariants; chi is computed both as sum of chi(summands) and as
/// 1 - q + p_g and the two are asserted equal.
InvariantSet invariant_set(const CoverCandidate& c);

}  // namespace covercraft
