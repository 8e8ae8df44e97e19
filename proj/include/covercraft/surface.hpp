#pragma once

#include <string>

#include "covercraft/divisor.hpp"
#include "covercraft/errors.hpp"

namespace covercraft {

enum class SurfaceKind { LinearP2, Veronese, Scroll };

struct CohomologyDims {
    Int h0{0};
    Int h1{0};
    Int h2{0};

    Int euler() const { return checked_sub(checked_add(h0, h2), h1); }

    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// A smooth embedded surface of minimal degree: linear P2, the Veronese
/// surface, or a rational normal scroll S(m-e, m) carried by the Hirzebruch
/// surface F_e and embedded by |C0 + m f|.
///
/// Intersection form: on a scroll C0^2 = -e, C0.f = 1, f^2 = 0; on P2 the
/// product of line-class degrees. The Veronese surface is P2 with hyperplane
/// class twice the line class, and all of its divisor arithmetic is done in
/// line-class units.
class MinimalDegreeSurface {
public:
    static MinimalDegreeSurface linear_p2() { return {SurfaceKind::LinearP2, 0, 0}; }
    static MinimalDegreeSurface veronese() { return {SurfaceKind::Veronese, 0, 0}; }
    /// Requires e >= 0 and m >= e+1 (smoothness of S(m-e, m)).
    static MinimalDegreeSurface scroll(Int e, Int m);

    SurfaceKind kind() const { return kind_; }
    bool is_scroll() const { return kind_ == SurfaceKind::Scroll; }
    Int e() const;
    Int m() const;

    /// deg W = codimension + 1: 1 for P2, 4 for the Veronese, 2m - e for a
    /// scroll. Always equals hyperplane_class() squared.
    Int degree() const;

    /// K_W: -3 (line units) on P2/Veronese, -2*C0 - (e+2)*f on a scroll.
    DivisorClass canonical_class() const;

    /// O_W(1): 1 on P2, 2 on the Veronese, C0 + m f on a scroll.
    DivisorClass hyperplane_class() const;

    Int intersection_number(const DivisorClass& d, const DivisorClass& x) const;

    /// Effective cone test: d >= 0 on P2/Veronese, a >= 0 and b >= 0 on a
    /// scroll (the cone is spanned by C0 and f).
    bool is_effective(const DivisorClass& d) const;

    /// (h0, h1, h2) of O_W(d).
    ///
    /// Scroll, a >= 0: push down along the ruling to sum_{j=0..a} O_P1(b-je),
    /// so h0 = sum max(0, b-je+1) and h1 = sum max(0, je-b-1). a = -1: zero.
    /// a <= -2: Serre duality h^i(d) = h^{2-i}(K-d). P2: h0(d) = (d+1)(d+2)/2
    /// for d >= 0, h1 = 0, h2 = h0(-d-3).
    CohomologyDims cohomology(const DivisorClass& d) const;

    /// Riemann-Roch: d.(d - K)/2 + 1. Checked against cohomology() by the
    /// test suite, never assumed.
    Int euler_characteristic_rr(const DivisorClass& d) const;

    /// Multiplicity of C0 in the fixed part of |d|: the number of
    /// negative-degree summands of the pushforward to P1, i.e.
    /// max(0, a - floor(b/e)); 0 when e = 0 and on P2/Veronese, where no
    /// rigid curve exists. Throws NotEffective if d is not effective.
    Int fixed_c0_multiplicity(const DivisorClass& d) const;

    /// Scroll: a >= 0 and b >= a*e; P2/Veronese: d >= 0.
    /// Throws NotEffective if d is not effective.
    bool is_base_point_free(const DivisorClass& d) const;

    /// "(a,b)" on a scroll, the plain integer on P2/Veronese.
    std::string class_to_string(const DivisorClass& d) const;

    /// "P2", "Veronese" or "S(m-e,m)".
    std::string name() const;

    friend bool operator==(const MinimalDegreeSurface&, const MinimalDegreeSurface&) = default;

private:
    MinimalDegreeSurface(SurfaceKind k, Int e, Int m) : kind_(k), e_(e), m_(m) {}

    SurfaceKind kind_;
    Int e_;
    Int m_;
};

}  // namespace covercraft
