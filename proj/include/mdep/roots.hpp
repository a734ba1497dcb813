#pragma once

#include <vector>

#include "mdep/interval.hpp"
#include "mdep/poly.hpp"

namespace mdep {

struct RootBox {
    CInterval box;
    bool real = false;
};

// Certified isolating rectangles for all distinct complex roots of a
// squarefree polynomial. Each rectangle contains exactly one root; conjugate
// pairs get mirrored rectangles and real roots get an exactly-zero imaginary
// part. With canonical=true the order is: real roots ascending, then
// non-real roots by exact (re, im) lexicographic comparison; ties in re
// between non-conjugate roots are settled exactly through the pair-sum
// resultant. With canonical=false the order is deterministic but unspecified.
std::vector<RootBox> isolate_roots(const IntPoly& f, mpfr_prec_t prec = 128,
                                   bool canonical = true);

// Enclosure of the Mahler measure of a squarefree polynomial.
RInterval mahler_interval(const IntPoly& f, mpfr_prec_t prec = 128);

// Exact decision M(f) <= bound for irreducible f. Always terminates for
// degree <= 4 (boundary ties are resolved in closed form); for higher degree
// an exact tie at the boundary raises UndecidedError once the precision
// ladder is exhausted.
bool mahler_leq(const IntPoly& f, const Q& bound);

}  // namespace mdep
