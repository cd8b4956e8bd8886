#ifndef KUZVER_HYP2F1_HPP
#define KUZVER_HYP2F1_HPP

// Gauss hypergeometric function for complex parameters and real argument
// z < 1.  Evaluation: the defining series inside |z| <= 0.66 (upgraded to
// double-double accumulation when the term growth would eat the budget),
// Pfaff / Euler maps to shrink the argument, the 1-z connection with the
// full logarithmic case at integer c-a-b, and the 1/z connection for very
// negative arguments.  Non-convergent combinations throw.

#include "kuzver/numeric.hpp"

namespace kuzver::special {

cplx hyp2f1(cplx a, cplx b, cplx c, double z);

// F(a,b;c;z) / Gamma(c): finite for every c, including nonpositive integers.
cplx hyp2f1_reg(cplx a, cplx b, cplx c, double z);

// d/d eps F(a + da eps, b + db eps; c + dc eps; z) at eps = 0, series route;
// requires the dispatcher to reach a series-safe argument.
cplx hyp2f1_pencil_deriv(cplx a, cplx da, cplx b, cplx db, cplx c, cplx dc, double z);

// series-only evaluation, exposed for cross-validation tests
cplx hyp2f1_series_probe(cplx a, cplx b, cplx c, double z);

} // namespace kuzver::special

#endif
