#pragma once

#include "covercraft/surface.hpp"

namespace covercraft {

/// Brute-force section count, the anti-regression oracle for
/// MinimalDegreeSurface::cohomology().h0. Counts monomials directly and
/// shares no code with the closed formulas.
///
/// Scroll: monomials x^i y^j s^k t^l of the Cox ring of F_e, where s, t have
/// degree (0,1), x has degree (1,0) and y has degree (1,e); the class (a,b)
/// collects i + j = a, k + l = b - e*j. P2 and Veronese (line units):
/// degree-d monomials in three variables.
Int section_count_oracle(const MinimalDegreeSurface& w, const DivisorClass& d);

}  // namespace covercraft
