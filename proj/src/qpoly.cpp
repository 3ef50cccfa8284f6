#include "ilc/qpoly.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace ilc {

namespace {

using clock_type = std::chrono::steady_clock;

// --- coefficient convolution ------------------------------------------------

size_t max_coeff_bits(const std::vector<ExactInt>& a)
{
    size_t bits = 1;
    for (const ExactInt& c : a)
        if (sgn(c) != 0)
            bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

std::vector<ExactInt> conv_schoolbook(const std::vector<ExactInt>& a,
                                      const std::vector<ExactInt>& b)
{
    std::vector<ExactInt> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

// Pack nonnegative coefficients into one big integer, digit width `bytes`.
ExactInt kron_pack(const std::vector<ExactInt>& a, size_t bytes)
{
    std::vector<unsigned char> buf(a.size() * bytes, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        size_t count = 0;
        mpz_export(buf.data() + i * bytes, &count, -1, 1, 0, 0, a[i].get_mpz_t());
    }
    ExactInt packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
    return packed;
}

std::vector<ExactInt> kron_unpack(const ExactInt& packed, size_t digits, size_t bytes)
{
    std::vector<unsigned char> buf(digits * bytes, 0);
    if (sgn(packed) != 0) {
        size_t count = 0;
        mpz_export(buf.data(), &count, -1, 1, 0, 0, packed.get_mpz_t());
    }
    std::vector<ExactInt> out(digits);
    for (size_t k = 0; k < digits; ++k)
        mpz_import(out[k].get_mpz_t(), bytes, -1, 1, 0, 0, buf.data() + k * bytes);
    return out;
}

// Signed convolution by Kronecker substitution: split into positive and
// negative parts, pack each as base-2^B digits, and let GMP's integer
// multiplication do the convolution.
std::vector<ExactInt> conv_kronecker(const std::vector<ExactInt>& a,
                                     const std::vector<ExactInt>& b)
{
    size_t min_len = std::min(a.size(), b.size());
    size_t digit_bits = max_coeff_bits(a) + max_coeff_bits(b) + 66;
    size_t bytes = (digit_bits + 7) / 8;
    size_t out_len = a.size() + b.size() - 1;

    auto split = [](const std::vector<ExactInt>& v) {
        std::pair<std::vector<ExactInt>, std::vector<ExactInt>> r;
        r.first.resize(v.size());
        r.second.resize(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) >= 0)
                r.first[i] = v[i];
            else
                r.second[i] = -v[i];
        }
        return r;
    };
    (void)min_len;

    auto [ap, an] = split(a);
    auto [bp, bn] = split(b);

    ExactInt fp = kron_pack(ap, bytes), fn = kron_pack(an, bytes);
    ExactInt gp = kron_pack(bp, bytes), gn = kron_pack(bn, bytes);

    ExactInt pos = fp * gp + fn * gn;
    ExactInt neg = fp * gn + fn * gp;

    std::vector<ExactInt> dp = kron_unpack(pos, out_len, bytes);
    std::vector<ExactInt> dn = kron_unpack(neg, out_len, bytes);
    for (size_t k = 0; k < out_len; ++k)
        dp[k] -= dn[k];
    return dp;
}

std::vector<ExactInt> convolve(const std::vector<ExactInt>& a,
                               const std::vector<ExactInt>& b)
{
    if (a.size() * b.size() <= 4096)
        return conv_schoolbook(a, b);
    return conv_kronecker(a, b);
}

} // namespace

// --- LPoly -------------------------------------------------------------------

LPoly::LPoly(ExactInt c, long exp)
{
    if (sgn(c) != 0) {
        min_exp_ = exp;
        coeffs_.push_back(std::move(c));
    }
}

LPoly LPoly::from_coeffs(long min_exp, std::vector<ExactInt> coeffs)
{
    LPoly f;
    f.min_exp_ = min_exp;
    f.coeffs_ = std::move(coeffs);
    f.normalize();
    return f;
}

void LPoly::normalize()
{
    size_t lo = 0, hi = coeffs_.size();
    while (lo < hi && sgn(coeffs_[lo]) == 0)
        ++lo;
    while (hi > lo && sgn(coeffs_[hi - 1]) == 0)
        --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0)
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
    coeffs_.resize(hi - lo);
    min_exp_ += static_cast<long>(lo);
}

ExactInt LPoly::eval_at_one() const
{
    ExactInt s(0);
    for (const ExactInt& c : coeffs_)
        s += c;
    return s;
}

ExactInt LPoly::eval_shifted(long t) const
{
    ExactInt s(0), x(t);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        s *= x;
        s += coeffs_[i];
    }
    return s;
}

LPoly lp_add(const LPoly& f, const LPoly& g)
{
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    long lo = std::min(f.min_exp(), g.min_exp());
    long hi = std::max(f.max_exp(), g.max_exp());
    std::vector<ExactInt> out(static_cast<size_t>(hi - lo + 1));
    for (long e = f.min_exp(); e <= f.max_exp(); ++e)
        out[static_cast<size_t>(e - lo)] = f.coeff(e);
    for (long e = g.min_exp(); e <= g.max_exp(); ++e)
        out[static_cast<size_t>(e - lo)] += g.coeff(e);
    return LPoly::from_coeffs(lo, std::move(out));
}

LPoly lp_sub(const LPoly& f, const LPoly& g)
{
    if (g.is_zero())
        return f;
    long lo = std::min(f.is_zero() ? g.min_exp() : f.min_exp(), g.min_exp());
    long hi = std::max(f.is_zero() ? g.max_exp() : f.max_exp(), g.max_exp());
    std::vector<ExactInt> out(static_cast<size_t>(hi - lo + 1));
    if (!f.is_zero())
        for (long e = f.min_exp(); e <= f.max_exp(); ++e)
            out[static_cast<size_t>(e - lo)] = f.coeff(e);
    for (long e = g.min_exp(); e <= g.max_exp(); ++e)
        out[static_cast<size_t>(e - lo)] -= g.coeff(e);
    return LPoly::from_coeffs(lo, std::move(out));
}

LPoly lp_mul(const LPoly& f, const LPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    return LPoly::from_coeffs(f.min_exp() + g.min_exp(), convolve(f.coeffs(), g.coeffs()));
}

LPoly lp_shift(const LPoly& f, long k)
{
    if (f.is_zero())
        return {};
    return LPoly::from_coeffs(f.min_exp() + k, f.coeffs());
}

LPoly lp_substitute_q2(const LPoly& f)
{
    if (f.is_zero())
        return {};
    std::vector<ExactInt> out(2 * (f.coeffs().size() - 1) + 1);
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        out[2 * i] = f.coeffs()[i];
    return LPoly::from_coeffs(2 * f.min_exp(), std::move(out));
}

std::string lp_to_string(const LPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) {
        const ExactInt& c = f.coeff(e);
        if (sgn(c) == 0)
            continue;
        ExactInt ac = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1)
                os << ac.get_str() << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

LPoly q_int(long n)
{
    if (n <= 0)
        return {};
    return LPoly::from_coeffs(0, std::vector<ExactInt>(static_cast<size_t>(n), ExactInt(1)));
}

namespace {

const LPoly& gauss_binom_cached(long n, long k)
{
    static const LPoly zero{};
    if (k < 0 || k > n || n < 0)
        return zero;
    thread_local std::map<std::pair<long, long>, LPoly> cache;
    // [n,k] = [n,n-k]; normalize to the cheaper half.
    if (k > n - k)
        k = n - k;
    auto it = cache.find({n, k});
    if (it != cache.end())
        return it->second;
    LPoly value;
    if (k == 0)
        value = LPoly::constant(1);
    else
        value = lp_add(gauss_binom_cached(n - 1, k - 1),
                       lp_shift(gauss_binom_cached(n - 1, k), k));
    return cache.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

} // namespace

LPoly gauss_binom(long n, long k)
{
    return gauss_binom_cached(n, k);
}

LPoly gauss_partition_oracle(long n, long k, long max_partitions)
{
    if (k < 0 || k > n)
        return {};
    long rows = n - k, width = k;
    std::vector<ExactInt> coeffs(static_cast<size_t>(rows * width) + 1);
    long seen = 0;
    // Enumerate partitions with at most `rows` parts, each part <= width.
    auto rec = [&](auto&& self, long rows_left, long bound, long weight) -> void {
        if (++seen > max_partitions)
            throw resource_limit("gauss_partition_oracle: too many partitions");
        coeffs[static_cast<size_t>(weight)] += 1;
        if (rows_left == 0)
            return;
        for (long v = 1; v <= bound; ++v)
            self(self, rows_left - 1, v, weight + v);
    };
    rec(rec, rows, width, 0);
    return LPoly::from_coeffs(0, std::move(coeffs));
}

LPoly quantum_binom(long n, long k)
{
    if (k < 0 || k > n)
        return {};
    return lp_shift(lp_substitute_q2(gauss_binom(n, k)), -k * (n - k));
}

QSeq gauss_row(long n)
{
    std::vector<LPoly> e;
    e.reserve(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        e.push_back(gauss_binom(n, k));
    return QSeq(std::move(e));
}

QSeq quantum_row(long n)
{
    std::vector<LPoly> e;
    e.reserve(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        e.push_back(quantum_binom(n, k));
    return QSeq(std::move(e));
}

QSeq gauss_line(long n, long u, long v, long length)
{
    std::vector<LPoly> e;
    e.reserve(static_cast<size_t>(length));
    for (long m = 0; m < length; ++m)
        e.push_back(gauss_binom(n + m * u, m * v));
    return QSeq(std::move(e));
}

QSeq quantum_line(long n, long u, long v, long length)
{
    std::vector<LPoly> e;
    e.reserve(static_cast<size_t>(length));
    for (long m = 0; m < length; ++m)
        e.push_back(quantum_binom(n + m * u, m * v));
    return QSeq(std::move(e));
}

QSeq ql_step(const QSeq& s)
{
    std::vector<LPoly> out(static_cast<size_t>(s.size()));
    for (long k = 0; k < s.size(); ++k)
        out[static_cast<size_t>(k)] =
            lp_sub(lp_mul(s.at(k), s.at(k)), lp_mul(s.at(k - 1), s.at(k + 1)));
    return QSeq(std::move(out));
}

std::optional<long> first_negative_exponent(const LPoly& f)
{
    for (long e = f.min_exp(); e <= f.max_exp(); ++e)
        if (sgn(f.coeff(e)) < 0)
            return e;
    return std::nullopt;
}

QNonnegResult is_q_nonneg(const QSeq& s)
{
    for (long k = 0; k < s.size(); ++k)
        if (auto e = first_negative_exponent(s.at(k)))
            return {false, k, e};
    return {};
}

MintTerm mint(const LPoly& f)
{
    if (f.is_zero())
        throw invalid_input("mint: zero polynomial");
    return {f.coeffs().front(), f.min_exp()};
}

namespace {

// a_k^2 >= r0 a_{k-1} a_{k+1} read coefficientwise through the q-order.
bool q_r0_pair_ok(const LPoly& sq, const LPoly& pr)
{
    for (long e = pr.min_exp(); e <= pr.max_exp(); ++e)
        if (!surd_le(SurdThreshold::r0(), pr.coeff(e), sq.coeff(e)))
            return false;
    return true;
}

} // namespace

bool is_q_r0_factor(const QSeq& s)
{
    if (!is_q_nonneg(s).ok)
        throw invalid_input("is_q_r0_factor: entries must be q-nonnegative");
    for (long k = 0; k < s.size(); ++k) {
        LPoly pr = lp_mul(s.at(k - 1), s.at(k + 1));
        if (pr.is_zero())
            continue;
        if (!q_r0_pair_ok(lp_mul(s.at(k), s.at(k)), pr))
            return false;
    }
    return true;
}

Certificate certify_q_infinite_lc(const QSeq& s, int max_depth, const std::string& target)
{
    auto t0 = clock_type::now();
    Certificate cert;
    cert.target = target;

    QSeq cur = s;
    for (int level = 0;; ++level) {
        QNonnegResult nn = is_q_nonneg(cur);
        if (!nn.ok) {
            cert.status = Status::refuted;
            cert.depth = level;
            cert.failure = Failure{level, *nn.first_negative_index};
            long e = *nn.first_negative_exponent;
            cert.note("negative_exponent", std::to_string(e));
            cert.note("negative_coefficient",
                      to_decimal(cur.at(*nn.first_negative_index).coeff(e)));
            break;
        }

        // One shared pass: the squares/products drive both the r0 test and,
        // if it fails, the next level.
        std::vector<LPoly> sq(static_cast<size_t>(cur.size()));
        std::vector<LPoly> pr(static_cast<size_t>(cur.size()));
        bool r0_ok = true;
        for (long k = 0; k < cur.size(); ++k) {
            sq[static_cast<size_t>(k)] = lp_mul(cur.at(k), cur.at(k));
            pr[static_cast<size_t>(k)] = lp_mul(cur.at(k - 1), cur.at(k + 1));
            if (r0_ok && !pr[static_cast<size_t>(k)].is_zero() &&
                !q_r0_pair_ok(sq[static_cast<size_t>(k)], pr[static_cast<size_t>(k)]))
                r0_ok = false;
        }
        if (r0_ok) {
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
        std::vector<LPoly> next(static_cast<size_t>(cur.size()));
        for (long k = 0; k < cur.size(); ++k)
            next[static_cast<size_t>(k)] =
                lp_sub(sq[static_cast<size_t>(k)], pr[static_cast<size_t>(k)]);
        cur = QSeq(std::move(next));
    }
    cert.elapsed = clock_type::now() - t0;
    return cert;
}

Certificate refute_truncated_qlc(const QSeq& s, int max_depth, const std::string& target)
{
    auto t0 = clock_type::now();
    Certificate cert;
    cert.target = target;

    QSeq cur = s;
    long last = s.size() - 1;
    for (int level = 0; level <= max_depth && last >= 0; ++level) {
        for (long k = 0; k <= last; ++k) {
            if (auto e = first_negative_exponent(cur.at(k))) {
                cert.status = Status::refuted;
                cert.depth = level;
                cert.failure = Failure{level, k};
                cert.note("negative_exponent", std::to_string(*e));
                cert.note("negative_coefficient", to_decimal(cur.at(k).coeff(*e)));
                cert.elapsed = clock_type::now() - t0;
                return cert;
            }
        }
        cur = ql_step(cur);
        --last;
    }
    cert.status = Status::inconclusive;
    cert.depth = max_depth;
    cert.elapsed = clock_type::now() - t0;
    return cert;
}

bool q_narayana_check(long n, long k)
{
    if (n < 1 || k < 1)
        throw invalid_input("q_narayana_check: requires n, k >= 1");
    LPoly lval = lp_sub(lp_mul(gauss_binom(n, k), gauss_binom(n, k)),
                        lp_mul(gauss_binom(n - 1, k), gauss_binom(n + 1, k)));
    LPoly lhs = lp_mul(q_int(n), lval);
    LPoly rhs = lp_shift(lp_mul(gauss_binom(n, k), gauss_binom(n, k - 1)), n - k);
    return lhs == rhs;
}

LlqReport llq_resolver(long n, long k)
{
    if (n < 2 || k < 2)
        throw invalid_input("llq_resolver: requires n, k >= 2");

    auto lstep_at = [&](long j) {
        return lp_sub(lp_mul(gauss_binom(j, k), gauss_binom(j, k)),
                      lp_mul(gauss_binom(j - 1, k), gauss_binom(j + 1, k)));
    };
    LPoly b_prev = lstep_at(n - 1), b_mid = lstep_at(n), b_next = lstep_at(n + 1);
    LPoly c = lp_sub(lp_mul(b_mid, b_mid), lp_mul(b_prev, b_next));

    LPoly qn = q_int(n);
    LPoly lhs = lp_mul(lp_mul(qn, qn), lp_mul(q_int(n - 1), c));

    LPoly nk = gauss_binom(n, k);
    LPoly common = lp_shift(lp_mul(q_int(2), lp_mul(lp_mul(nk, nk), gauss_binom(n, k - 1))),
                            3 * (n - k));
    LlqReport rep;
    rep.literal_matches = lhs == lp_mul(common, gauss_binom(n, k - 1));
    rep.corrected_matches = lhs == lp_mul(common, gauss_binom(n, k - 2));
    return rep;
}

} // namespace ilc
