#include "ilc/region.hpp"

namespace ilc {

namespace {

ExactRat pow_rat(const ExactRat& base, const ExactInt& exp)
{
    if (sgn(exp) < 0)
        throw invalid_input("pow_rat: negative exponent");
    if (!exp.fits_ulong_p())
        throw resource_limit("pow_rat: exponent too large");
    unsigned long e = exp.get_ui();
    ExactInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return make_rat(num, den);
}

} // namespace

void RegionParams::validate() const
{
    if (m < 1)
        throw invalid_input("RegionParams: m must be >= 1");
    if (x < 1)
        throw invalid_input("RegionParams: x must be >= 1");
    if (static_cast<long>(d.size()) != m)
        throw invalid_input("RegionParams: need exactly m values d_1..d_m");
    if (d.front() != 1)
        throw invalid_input("RegionParams: d_1 must equal 1");
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (!(d[i] > d[i + 1]))
            throw invalid_input("RegionParams: d must be strictly decreasing");
    if (!(sgn(d.back()) > 0))
        throw invalid_input("RegionParams: d_m must be positive");
}

ExactRat r1_upper_bound()
{
    // ceil(10^6 r1)/10^6; checked exact-side in the unit tests.
    return make_rat(ExactInt(1618034), ExactInt(1000000));
}

bool in_region(const RegionPoint& p, Parity parity)
{
    long m = static_cast<long>(p.coords.size());
    if (m < 1)
        throw invalid_input("in_region: empty point");
    for (const ExactRat& a : p.coords)
        if (!(sgn(a) > 0))
            throw invalid_input("in_region: coordinates must be positive");

    auto coord = [&](long j) -> ExactRat {
        return j == 0 ? ExactRat(1) : p.coords[static_cast<size_t>(j - 1)];
    };

    // (a) increasing coordinates
    for (long j = 1; j <= m; ++j)
        if (!(coord(j - 1) < coord(j)))
            return false;
    // (b) r0-factor inequalities below the last coordinate
    for (long k = 1; k < m; ++k)
        if (!r0_factor_holds(coord(k - 1), coord(k), coord(k + 1)))
            return false;
    // (c) boundary condition at the last coordinate
    if (parity == Parity::even)
        return surd_le(SurdThreshold::r1(), coord(m - 1), coord(m));
    return coord(m) >= 2 * coord(m - 1);
}

RegionPoint sample_near_hypersurface(const RegionParams& params, long k, const ExactRat& bump)
{
    params.validate();
    if (k < 1 || k > params.m)
        throw invalid_input("sample_near_hypersurface: k out of range");
    if (bump < 1)
        throw invalid_input("sample_near_hypersurface: bump must be >= 1");

    // Common denominator of the d_i; exponents D*s_j are then integers and
    // the base is read as x^{1/D}.
    ExactInt den_lcm(1);
    for (const ExactRat& di : params.d)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), di.get_den().get_mpz_t());

    std::vector<ExactInt> exp(static_cast<size_t>(params.m) + 1);
    ExactRat s(0);
    for (long j = 1; j <= params.m; ++j) {
        s += params.d[static_cast<size_t>(j - 1)];
        ExactRat e = s * den_lcm;
        if (e.get_den() != 1)
            throw invalid_input("sample_near_hypersurface: non-integral exponent");
        exp[static_cast<size_t>(j)] = e.get_num();
    }

    RegionPoint p;
    p.coords.resize(static_cast<size_t>(params.m));
    for (long j = 1; j <= params.m; ++j) {
        ExactRat a;
        if (j < k) {
            a = pow_rat(params.x, exp[static_cast<size_t>(j)]);
        } else if (j == k) {
            if (k == params.m) {
                ExactRat c = params.parity == Parity::odd ? ExactRat(2) : r1_upper_bound();
                a = c * pow_rat(params.x, exp[static_cast<size_t>(params.m - 1)]) * bump;
            } else {
                a = r1_upper_bound() * pow_rat(params.x, exp[static_cast<size_t>(k)]) * bump;
            }
        } else {
            // shifted exponent s_j + d_k - d_{k+1}, scaled by D
            ExactRat shift = (params.d[static_cast<size_t>(k - 1)] - params.d[static_cast<size_t>(k)]) * den_lcm;
            if (shift.get_den() != 1)
                throw invalid_input("sample_near_hypersurface: non-integral exponent");
            a = pow_rat(params.x, exp[static_cast<size_t>(j)] + shift.get_num());
        }
        p.coords[static_cast<size_t>(j - 1)] = a;
    }
    return p;
}

Seq point_to_sequence(const RegionPoint& p, Parity parity)
{
    long m = static_cast<long>(p.coords.size());
    long n = parity == Parity::even ? 2 * m : 2 * m + 1;
    std::vector<ExactRat> out(static_cast<size_t>(n) + 1);
    out[0] = 1;
    for (long j = 1; j <= m; ++j)
        out[static_cast<size_t>(j)] = p.coords[static_cast<size_t>(j - 1)];
    for (long j = m + 1; j <= n; ++j)
        out[static_cast<size_t>(j)] = out[static_cast<size_t>(n - j)];
    return Seq(std::move(out));
}

} // namespace ilc
