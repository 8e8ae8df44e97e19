#include "covercraft/surface.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace covercraft {

MinimalDegreeSurface MinimalDegreeSurface::scroll(Int e, Int m) {
    if (e < 0) throw InvalidSurface("scroll requires e >= 0, got e = " + std::to_string(e));
    if (m < e + 1)
        throw InvalidSurface("scroll S(m-e,m) requires m >= e+1 (smoothness), got e = " +
                             std::to_string(e) + ", m = " + std::to_string(m));
    return {SurfaceKind::Scroll, e, m};
}

Int MinimalDegreeSurface::e() const {
    if (!is_scroll()) throw InvalidSurface("e is defined for scrolls only");
    return e_;
}

Int MinimalDegreeSurface::m() const {
    if (!is_scroll()) throw InvalidSurface("m is defined for scrolls only");
    return m_;
}

Int MinimalDegreeSurface::degree() const {
    switch (kind_) {
        case SurfaceKind::LinearP2: return 1;
        case SurfaceKind::Veronese: return 4;
        case SurfaceKind::Scroll: return checked_sub(checked_mul(2, m_), e_);
    }
    return 0;  // unreachable
}

DivisorClass MinimalDegreeSurface::canonical_class() const {
    if (!is_scroll()) return {-3, 0};
    return {-2, checked_sub(0, checked_add(e_, 2))};
}

DivisorClass MinimalDegreeSurface::hyperplane_class() const {
    switch (kind_) {
        case SurfaceKind::LinearP2: return {1, 0};
        case SurfaceKind::Veronese: return {2, 0};
        case SurfaceKind::Scroll: return {1, m_};
    }
    return {};  // unreachable
}

Int MinimalDegreeSurface::intersection_number(const DivisorClass& d, const DivisorClass& x) const {
    if (!is_scroll()) return checked_mul(d.a, x.a);
    // (a1 C0 + b1 f).(a2 C0 + b2 f) = -e a1 a2 + a1 b2 + a2 b1
    Int v = checked_mul(checked_sub(0, e_), checked_mul(d.a, x.a));
    v = checked_add(v, checked_mul(d.a, x.b));
    return checked_add(v, checked_mul(x.a, d.b));
}

bool MinimalDegreeSurface::is_effective(const DivisorClass& d) const {
    if (!is_scroll()) return d.a >= 0;
    return d.a >= 0 && d.b >= 0;
}

CohomologyDims MinimalDegreeSurface::cohomology(const DivisorClass& d) const {
    if (!is_scroll()) {
        auto h0_p2 = [](Int n) -> Int {
            if (n < 0) return 0;
            return checked_mul(checked_add(n, 1), checked_add(n, 2)) / 2;
        };
        return {h0_p2(d.a), 0, h0_p2(checked_sub(-3, d.a))};
    }
    if (d.a <= -2) {
        // Serre duality; K - d has C0-coefficient -2 - a >= 0, so no recursion.
        CohomologyDims dual = cohomology(canonical_class() - d);
        return {dual.h2, dual.h1, dual.h0};
    }
    if (d.a == -1) return {0, 0, 0};
    Int h0 = 0;
    Int h1 = 0;
    for (Int j = 0; j <= d.a; ++j) {
        Int deg = checked_sub(d.b, checked_mul(j, e_));
        h0 = checked_add(h0, std::max<Int>(0, checked_add(deg, 1)));
        h1 = checked_add(h1, std::max<Int>(0, checked_sub(-1, deg)));
    }
    return {h0, h1, 0};
}

Int MinimalDegreeSurface::euler_characteristic_rr(const DivisorClass& d) const {
    Int p = intersection_number(d, d - canonical_class());
    assert(p % 2 == 0);
    return checked_add(p / 2, 1);
}

Int MinimalDegreeSurface::fixed_c0_multiplicity(const DivisorClass& d) const {
    if (!is_effective(d))
        throw NotEffective("fixed_c0_multiplicity requires an effective class, got " +
                           class_to_string(d));
    if (!is_scroll() || e_ == 0) return 0;
    // Summand O_P1(b - je) of the pushforward is negative iff j > floor(b/e).
    return std::max<Int>(0, checked_sub(d.a, d.b / e_));
}

bool MinimalDegreeSurface::is_base_point_free(const DivisorClass& d) const {
    if (!is_effective(d))
        throw NotEffective("is_base_point_free requires an effective class, got " +
                           class_to_string(d));
    if (!is_scroll()) return true;
    return d.b >= checked_mul(d.a, e_);
}

std::string MinimalDegreeSurface::class_to_string(const DivisorClass& d) const {
    if (!is_scroll()) return std::to_string(d.a);
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

std::string MinimalDegreeSurface::name() const {
    switch (kind_) {
        case SurfaceKind::LinearP2: return "P2";
        case SurfaceKind::Veronese: return "Veronese";
        case SurfaceKind::Scroll:
            return "S(" + std::to_string(m_ - e_) + "," + std::to_string(m_) + ")";
    }
    return {};
}

}  // namespace covercraft
