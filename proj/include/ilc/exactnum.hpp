#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ilc {

// Exact scalars. mpz_class/mpq_class already give us canonical form:
// mpq_class keeps gcd(|num|, den) = 1 and den > 0.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    ExactRat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_decimal(const ExactInt& z) { return z.get_str(); }

// Integers print as plain decimals, proper fractions as "p/q".
inline std::string to_decimal(const ExactRat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Half-integer quadratic surd (p + q*sqrt(5))/2.  The radicand is fixed at 5:
// the only thresholds we ever compare against are r0 = (3+sqrt(5))/2 and
// r1 = (1+sqrt(5))/2, with r1^2 = r0.
struct SurdThreshold {
    int p = 0;
    int q = 0;

    static constexpr SurdThreshold r0() { return {3, 1}; }
    static constexpr SurdThreshold r1() { return {1, 1}; }

    friend bool operator==(SurdThreshold a, SurdThreshold b)
    {
        return a.p == b.p && a.q == b.q;
    }
};

// Integer form of the comparison below, with denominators already cleared.
bool surd_le(SurdThreshold t, const ExactInt& b, const ExactInt& a);

// Decide a >= ((p + q*sqrt(5))/2) * b exactly, for b >= 0 and q >= 0.
//
// Clearing denominators reduces the test to 2a' >= (p + q*sqrt(5)) b' with
// integers a' = num(a) den(b), b' = num(b) den(a).  Let X = 2a' - p b'.
// For b' = 0 the test is a' >= 0; otherwise X < 0 fails immediately and
// X >= 0 squares to X^2 >= 5 q^2 b'^2.  The inequality is non-strict, so
// rational boundary cases (possible only when q = 0) are included.
bool surd_le(SurdThreshold t, const ExactRat& b, const ExactRat& a);

// a^2 >= r0 * a_prev * a_next, all inputs required nonnegative.
bool r0_factor_holds(const ExactRat& a_prev, const ExactRat& a, const ExactRat& a_next);

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ilc
