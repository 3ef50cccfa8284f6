#include "ilc/seq.hpp"

#include <chrono>

namespace ilc {

namespace {

using clock_type = std::chrono::steady_clock;

std::chrono::duration<double> since(clock_type::time_point t0)
{
    return clock_type::now() - t0;
}

} // namespace

ExactInt binomial(long n, long k)
{
    ExactInt r;
    if (k < 0 || n < 0 || k > n)
        return r; // 0
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Seq l_step(const Seq& s)
{
    std::vector<ExactRat> out(static_cast<size_t>(s.size()));
    for (long k = 0; k < s.size(); ++k)
        out[static_cast<size_t>(k)] = s.at(k) * s.at(k) - s.at(k - 1) * s.at(k + 1);
    return Seq(std::move(out));
}

NonnegResult is_nonneg(const Seq& s)
{
    for (long k = 0; k < s.size(); ++k)
        if (sgn(s.at(k)) < 0)
            return {false, k};
    return {true, std::nullopt};
}

bool is_log_concave(const Seq& s)
{
    return is_nonneg(l_step(s)).ok;
}

bool is_r0_factor(const Seq& s)
{
    for (long k = 0; k < s.size(); ++k)
        if (sgn(s.at(k)) < 0)
            throw invalid_input("is_r0_factor: sequence must be nonnegative");
    // Boundary indices pass trivially: one neighbor is 0 by zero-extension.
    for (long k = 1; k + 1 < s.size(); ++k)
        if (!r0_factor_holds(s.at(k - 1), s.at(k), s.at(k + 1)))
            return false;
    return true;
}

Certificate certify_infinite_lc(const Seq& s, int max_depth, const std::string& target)
{
    auto t0 = clock_type::now();
    Certificate cert;
    cert.target = target;

    Seq cur = s;
    for (int level = 0;; ++level) {
        NonnegResult nn = is_nonneg(cur);
        if (!nn.ok) {
            cert.status = Status::refuted;
            cert.depth = level;
            cert.failure = Failure{level, *nn.first_negative};
            cert.note("negative_value", to_decimal(cur.at(*nn.first_negative)));
            break;
        }
        if (is_r0_factor(cur)) {
            cert.status = Status::certified;
            cert.depth = level;
            cert.r0_level = level;
            break;
        }
        if (level == max_depth) {
            cert.status = Status::inconclusive;
            cert.depth = max_depth;
            break;
        }
        cur = l_step(cur);
    }
    cert.elapsed = since(t0);
    return cert;
}

Certificate refute_truncated_lc(const Seq& s, int max_depth, const std::string& target)
{
    auto t0 = clock_type::now();
    Certificate cert;
    cert.target = target;

    Seq cur = s;
    long last = s.size() - 1; // rightmost trustworthy index at the current level
    for (int level = 0; level <= max_depth && last >= 0; ++level) {
        for (long k = 0; k <= last; ++k) {
            if (sgn(cur.at(k)) < 0) {
                cert.status = Status::refuted;
                cert.depth = level;
                cert.failure = Failure{level, k};
                cert.note("negative_value", to_decimal(cur.at(k)));
                cert.elapsed = since(t0);
                return cert;
            }
        }
        cur = l_step(cur);
        --last;
    }
    cert.status = Status::inconclusive;
    cert.depth = max_depth;
    cert.elapsed = since(t0);
    return cert;
}

Certificate certify_symmetric_odd(const Seq& s, const std::string& target)
{
    auto t0 = clock_type::now();
    Certificate cert;
    cert.target = target;

    long len = s.size();
    if (len < 2 || len % 2 != 0)
        throw invalid_input("certify_symmetric_odd: length must be even (support 0..2m+1)");
    for (long k = 0; k < len; ++k) {
        if (sgn(s.at(k)) < 0)
            throw invalid_input("certify_symmetric_odd: sequence must be nonnegative");
        if (s.at(k) != s.at(len - 1 - k))
            throw invalid_input("certify_symmetric_odd: sequence must be symmetric");
    }

    long m = len / 2 - 1; // support 0..2m+1

    // (i) r0-factor at interior indices k < m.
    for (long k = 1; k < m; ++k) {
        if (!r0_factor_holds(s.at(k - 1), s.at(k), s.at(k + 1))) {
            cert.status = Status::inconclusive;
            cert.depth = 0;
            cert.failure = Failure{0, k};
            cert.note("hypothesis", "r0_factor");
            cert.elapsed = since(t0);
            return cert;
        }
    }
    // (ii) a_m >= 2 a_{m-1}.
    if (!(s.at(m) >= 2 * s.at(m - 1))) {
        cert.status = Status::inconclusive;
        cert.depth = 0;
        cert.failure = Failure{0, m};
        cert.note("hypothesis", "midpoint_doubling");
        cert.elapsed = since(t0);
        return cert;
    }

    cert.status = Status::certified;
    cert.depth = 0;
    cert.r0_level = 0;
    cert.elapsed = since(t0);
    return cert;
}

Seq pascal_line(const LineSpec& spec)
{
    if (spec.u == 0 && spec.v == 0)
        throw invalid_input("pascal_line: u and v cannot both be zero");
    std::vector<ExactRat> out;
    out.reserve(static_cast<size_t>(spec.length));
    for (long m = 0; m < spec.length; ++m)
        out.emplace_back(binomial(spec.n + m * spec.u, m * spec.v));
    return Seq(std::move(out));
}

std::pair<ExactRat, ExactRat> column_closed_forms(long n, long k)
{
    if (n < 2 || k < 2)
        throw invalid_input("column_closed_forms: requires n >= 2 and k >= 2");
    ExactRat l1 = make_rat(binomial(n, k) * binomial(n, k - 1), ExactInt(n));
    ExactRat l2 = make_rat(2 * binomial(n, k) * binomial(n, k) * binomial(n, k - 1) * binomial(n, k - 2),
                           ExactInt(n) * n * (n - 1));
    return {l1, l2};
}

ExactInt l3_positivity_poly(long k, long n)
{
    ExactInt K(k), N(n);
    return (4 * K - 6) * N * N - (4 * K * K - 10 * K + 6) * N - K * K;
}

Seq boros_moll_coeffs(long m)
{
    if (m < 0)
        throw invalid_input("boros_moll_coeffs: m must be nonnegative");
    std::vector<ExactRat> out;
    out.reserve(static_cast<size_t>(m) + 1);
    for (long l = 0; l <= m; ++l) {
        ExactRat d(0);
        for (long j = l; j <= m; ++j) {
            // 2^{j-2m} C(2m-2j, m-j) C(m+j, m) C(j, l)
            ExactInt num = binomial(2 * m - 2 * j, m - j) * binomial(m + j, m) * binomial(j, l);
            ExactInt den = 1;
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * m - j));
            d += make_rat(num, den);
        }
        out.push_back(d);
    }
    return Seq(std::move(out));
}

bool vandermonde_refute(long u, long v)
{
    if (u <= v || v < 1)
        throw invalid_input("vandermonde_refute: requires u > v >= 1");
    ExactInt b = binomial(u, v);
    return b * b < binomial(2 * u, 2 * v);
}

} // namespace ilc
