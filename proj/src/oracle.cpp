#include "covercraft/oracle.hpp"

namespace covercraft {

Int section_count_oracle(const MinimalDegreeSurface& w, const DivisorClass& d) {
    Int count = 0;
    if (w.is_scroll()) {
        if (d.a < 0) return 0;  // i + j = a has no solution in nonnegative exponents
        for (Int i = 0; i <= d.a; ++i) {
            Int j = d.a - i;
            Int rem = checked_sub(d.b, checked_mul(w.e(), j));
            if (rem < 0) continue;
            for (Int k = 0; k <= rem; ++k) ++count;  // t-exponent is rem - k
        }
        return count;
    }
    if (d.a < 0) return 0;
    for (Int i = 0; i <= d.a; ++i)
        for (Int j = 0; i + j <= d.a; ++j) ++count;  // third exponent is d - i - j
    return count;
}

}  // namespace covercraft
