#include "ilc/exactnum.hpp"

namespace ilc {

bool surd_le(SurdThreshold t, const ExactInt& b, const ExactInt& a)
{
    if (sgn(b) < 0)
        throw invalid_input("surd_le: b must be nonnegative");
    if (t.q < 0)
        throw invalid_input("surd_le: negative surd part unsupported");

    if (sgn(b) == 0)
        return sgn(a) >= 0;

    ExactInt x = 2 * a - t.p * b;
    if (sgn(x) < 0)
        return false;
    return x * x >= 5 * t.q * t.q * b * b;
}

bool surd_le(SurdThreshold t, const ExactRat& b, const ExactRat& a)
{
    if (sgn(b) < 0)
        throw invalid_input("surd_le: b must be nonnegative");

    ExactInt ap = a.get_num() * b.get_den();
    ExactInt bp = b.get_num() * a.get_den();
    return surd_le(t, bp, ap);
}

bool r0_factor_holds(const ExactRat& a_prev, const ExactRat& a, const ExactRat& a_next)
{
    if (sgn(a_prev) < 0 || sgn(a) < 0 || sgn(a_next) < 0)
        throw invalid_input("r0_factor_holds: inputs must be nonnegative");
    return surd_le(SurdThreshold::r0(), a_prev * a_next, a * a);
}

} // namespace ilc
