#include "ilc/tnn.hpp"

#include <algorithm>
#include <random>

namespace ilc {

namespace {

// Rational Gaussian elimination with partial pivoting by first nonzero.
ExactRat det_rational(const std::vector<ExactRat>& entries, long n)
{
    std::vector<ExactRat> m = entries;
    auto at = [&](long i, long j) -> ExactRat& { return m[static_cast<size_t>(i * n + j)]; };
    ExactRat det(1);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (sgn(at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return ExactRat(0);
        if (pivot != col) {
            for (long j = col; j < n; ++j)
                swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (long r = col + 1; r < n; ++r) {
            if (sgn(at(r, col)) == 0)
                continue;
            ExactRat factor = at(r, col) / at(col, col);
            at(r, col) = 0;
            for (long j = col + 1; j < n; ++j)
                at(r, j) -= factor * at(col, j);
        }
    }
    return det;
}

// Fraction-free (Bareiss) elimination over __int128; caller guarantees the
// Hadamard bound fits.
__int128 det_bareiss_i128(std::vector<__int128>& m, long n)
{
    __int128 prev = 1;
    int sign = 1;
    auto at = [&](long i, long j) -> __int128& { return m[static_cast<size_t>(i * n + j)]; };
    for (long col = 0; col + 1 < n; ++col) {
        if (at(col, col) == 0) {
            long pivot = -1;
            for (long r = col + 1; r < n; ++r)
                if (at(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            for (long j = col; j < n; ++j)
                std::swap(at(pivot, j), at(col, j));
            sign = -sign;
        }
        for (long r = col + 1; r < n; ++r) {
            for (long j = col + 1; j < n; ++j)
                at(r, j) = (at(r, j) * at(col, col) - at(r, col) * at(col, j)) / prev;
            at(r, col) = 0;
        }
        prev = at(col, col);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

struct IntGrid {
    bool usable = false;
    long max_abs = 0;
    std::vector<long> v;
};

IntGrid to_int_grid(const ExactMatrix& a)
{
    IntGrid g;
    g.v.resize(static_cast<size_t>(a.rows() * a.cols()));
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            const ExactRat& x = a.at(i, j);
            if (x.get_den() != 1 || !x.get_num().fits_slong_p())
                return g;
            long val = x.get_num().get_si();
            g.v[static_cast<size_t>(i * a.cols() + j)] = val;
            g.max_abs = std::max(g.max_abs, std::abs(val));
        }
    g.usable = true;
    return g;
}

// Largest minor order whose Hadamard bound (k * M^2)^{k/2} stays well inside
// __int128.
long i128_safe_order(long max_abs)
{
    if (max_abs == 0)
        return 64;
    long double m2 = static_cast<long double>(max_abs) * max_abs;
    for (long k = 1; k <= 64; ++k) {
        long double bound = (k / 2.0L) * std::log2(k * m2);
        if (bound > 120.0L)
            return k - 1;
    }
    return 64;
}

bool next_combination(std::vector<long>& c, long n)
{
    long k = static_cast<long>(c.size());
    for (long i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (long j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

ExactInt count_minors(long rows, long cols, long max_order)
{
    ExactInt total(0);
    for (long k = 1; k <= max_order; ++k)
        total += binomial(rows, k) * binomial(cols, k);
    return total;
}

} // namespace

ExactMatrix toeplitz(const Seq& s, long size)
{
    if (size < 1)
        throw invalid_input("toeplitz: size must be >= 1");
    ExactMatrix a(size, size);
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j)
            a.at(i, j) = s.at(j - i);
    return a;
}

ExactRat determinant(const ExactMatrix& a)
{
    if (a.rows() != a.cols())
        throw invalid_input("determinant: matrix must be square");
    std::vector<ExactRat> entries;
    entries.reserve(static_cast<size_t>(a.rows() * a.cols()));
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            entries.push_back(a.at(i, j));
    return det_rational(entries, a.rows());
}

MinorScan all_minors_nonneg(const ExactMatrix& a, long max_order, long long minor_guard)
{
    if (max_order < 1 || max_order > std::min(a.rows(), a.cols()))
        throw invalid_input("all_minors_nonneg: bad max_order");
    if (count_minors(a.rows(), a.cols(), max_order) > minor_guard)
        throw resource_limit("all_minors_nonneg: minor count exceeds guard");

    IntGrid grid = to_int_grid(a);
    long fast_order = grid.usable ? i128_safe_order(grid.max_abs) : 0;

    std::vector<__int128> sub_i;
    std::vector<ExactRat> sub_q;

    for (long k = 1; k <= max_order; ++k) {
        std::vector<long> rs(static_cast<size_t>(k));
        for (long i = 0; i < k; ++i)
            rs[static_cast<size_t>(i)] = i;
        do {
            std::vector<long> cs(static_cast<size_t>(k));
            for (long i = 0; i < k; ++i)
                cs[static_cast<size_t>(i)] = i;
            do {
                bool negative;
                ExactRat value;
                if (grid.usable && k <= fast_order) {
                    sub_i.assign(static_cast<size_t>(k * k), 0);
                    for (long i = 0; i < k; ++i)
                        for (long j = 0; j < k; ++j)
                            sub_i[static_cast<size_t>(i * k + j)] =
                                grid.v[static_cast<size_t>(rs[static_cast<size_t>(i)] * a.cols() +
                                                           cs[static_cast<size_t>(j)])];
                    __int128 d = det_bareiss_i128(sub_i, k);
                    negative = d < 0;
                    if (negative) {
                        long long high = static_cast<long long>(d >> 64);
                        unsigned long long low =
                            static_cast<unsigned long long>(d & ~0ULL);
                        ExactInt z(high);
                        mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
                        ExactInt lowz;
                        mpz_import(lowz.get_mpz_t(), 1, -1, 8, 0, 0, &low);
                        value = ExactRat(z + lowz);
                    }
                } else {
                    sub_q.assign(static_cast<size_t>(k * k), ExactRat(0));
                    for (long i = 0; i < k; ++i)
                        for (long j = 0; j < k; ++j)
                            sub_q[static_cast<size_t>(i * k + j)] =
                                a.at(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
                    value = det_rational(sub_q, k);
                    negative = sgn(value) < 0;
                }
                if (negative)
                    return {false, MinorWitness{rs, cs, value}};
            } while (next_combination(cs, a.cols()));
        } while (next_combination(rs, a.rows()));
    }
    return {};
}

ExactMatrix l_matrix(const ExactMatrix& a)
{
    if (a.rows() < 2 || a.cols() < 2)
        throw invalid_input("l_matrix: need at least 2x2");
    ExactMatrix out(a.rows() - 1, a.cols() - 1);
    for (long i = 0; i + 1 < a.rows(); ++i)
        for (long j = 0; j + 1 < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) * a.at(i + 1, j + 1) - a.at(i, j + 1) * a.at(i + 1, j);
    return out;
}

ExactMatrix fallat_example(const ExactRat& t)
{
    if (sgn(t) < 0)
        throw invalid_input("fallat_example: t must be nonnegative");
    ExactRat t2 = t * t;
    ExactRat t3 = t2 * t;
    ExactRat t4 = t2 * t2;
    ExactMatrix a(5, 5);
    ExactRat z(0), one(1);

    a.at(0, 0) = one;      a.at(0, 1) = t;            a.at(0, 2) = z;            a.at(0, 3) = z;                a.at(0, 4) = z;
    a.at(1, 0) = t;        a.at(1, 1) = t2 + 1;       a.at(1, 2) = 2 * t;        a.at(1, 3) = t2;               a.at(1, 4) = z;
    a.at(2, 0) = t2;       a.at(2, 1) = t3 + 2 * t;   a.at(2, 2) = 1 + 4 * t2;   a.at(2, 3) = 2 * t3 + t;       a.at(2, 4) = z;
    a.at(3, 0) = z;        a.at(3, 1) = t2;           a.at(3, 2) = 2 * t3 + 2 * t; a.at(3, 3) = t4 + 2 * t2 + 1; a.at(3, 4) = t;
    a.at(4, 0) = z;        a.at(4, 1) = z;            a.at(4, 2) = t2;           a.at(4, 3) = t3 + t;           a.at(4, 4) = t2;
    return a;
}

ExactMatrix compound2(const ExactMatrix& a)
{
    if (a.rows() != a.cols() || a.rows() < 2)
        throw invalid_input("compound2: need a square matrix of order >= 2");
    long n = a.rows();
    std::vector<std::pair<long, long>> pairs;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    long m = static_cast<long>(pairs.size());
    ExactMatrix out(m, m);
    for (long r = 0; r < m; ++r)
        for (long c = 0; c < m; ++c) {
            auto [i1, i2] = pairs[static_cast<size_t>(r)];
            auto [j1, j2] = pairs[static_cast<size_t>(c)];
            out.at(r, c) = a.at(i1, j1) * a.at(i2, j2) - a.at(i1, j2) * a.at(i2, j1);
        }
    return out;
}

bool is_psd(const ExactMatrix& a)
{
    if (a.rows() != a.cols())
        throw invalid_input("is_psd: matrix must be square");
    long n = a.rows();
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (a.at(i, j) != a.at(j, i))
                throw invalid_input("is_psd: matrix must be symmetric");

    if (n <= 8) {
        // every principal minor, by subset enumeration
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<long> idx;
            for (long i = 0; i < n; ++i)
                if (mask & (1ul << i))
                    idx.push_back(i);
            long k = static_cast<long>(idx.size());
            std::vector<ExactRat> sub(static_cast<size_t>(k * k));
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    sub[static_cast<size_t>(i * k + j)] =
                        a.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
            if (sgn(det_rational(sub, k)) < 0)
                return false;
        }
        return true;
    }
    if (n > 16)
        throw resource_limit("is_psd: matrix too large");

    // Characteristic polynomial by Faddeev-LeVerrier: det(xI - A) =
    // sum_k (-1)^k p_k x^{n-k} with p_k the k-th principal minor sum.  The
    // spectrum is real (symmetry), so PSD <=> all p_k >= 0.
    std::vector<ExactRat> coeff(static_cast<size_t>(n) + 1);
    coeff[0] = 1;
    ExactMatrix b(n, n);
    ExactMatrix prev = a;
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            // prev = A * (prev_old + a_{k-1} I)
            ExactMatrix tmp = prev;
            for (long i = 0; i < n; ++i)
                tmp.at(i, i) += coeff[static_cast<size_t>(k - 1)];
            prev = mat_mul(a, tmp);
        }
        ExactRat trace(0);
        for (long i = 0; i < n; ++i)
            trace += prev.at(i, i);
        coeff[static_cast<size_t>(k)] = -trace / k; // a_k
    }
    for (long k = 1; k <= n; ++k) {
        ExactRat pk = (k % 2 == 0 ? 1 : -1) * coeff[static_cast<size_t>(k)];
        if (sgn(pk) < 0)
            return false;
    }
    return true;
}

ExactMatrix mat_mul(const ExactMatrix& x, const ExactMatrix& y)
{
    if (x.cols() != y.rows())
        throw invalid_input("mat_mul: dimension mismatch");
    ExactMatrix out(x.rows(), y.cols());
    for (long i = 0; i < x.rows(); ++i)
        for (long k = 0; k < x.cols(); ++k) {
            if (sgn(x.at(i, k)) == 0)
                continue;
            for (long j = 0; j < y.cols(); ++j)
                out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

ExactMatrix transpose(const ExactMatrix& a)
{
    ExactMatrix out(a.cols(), a.rows());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.at(j, i) = a.at(i, j);
    return out;
}

ExactMatrix random_tnn_matrix(long n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto small = [&](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    };

    ExactMatrix out(n, n);
    for (long i = 0; i < n; ++i)
        out.at(i, i) = small(1, 4); // positive diagonal core

    auto apply_lower = [&](long r, long val) {
        // out <- E * out with E = I + val * e_{r, r-1}
        for (long j = 0; j < n; ++j)
            out.at(r, j) += val * out.at(r - 1, j);
    };
    auto apply_upper = [&](long c, long val) {
        // out <- out * E with E = I + val * e_{c-1, c}
        for (long i = 0; i < n; ++i)
            out.at(i, c) += val * out.at(i, c - 1);
    };

    long factors = 2 * n;
    for (long f = 0; f < factors; ++f) {
        long idx = small(1, n - 1);
        long val = small(0, 3);
        if (rng() % 2 == 0)
            apply_lower(idx, val);
        else
            apply_upper(idx, val);
    }
    return out;
}

ExactMatrix random_psd_matrix(long n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    ExactMatrix b(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            b.at(i, j) = static_cast<long>(rng() % 7) - 3;
    return mat_mul(transpose(b), b);
}

AswReport asw_crosscheck(const Seq& s, long size)
{
    if (!is_nonneg(s).ok)
        throw invalid_input("asw_crosscheck: sequence must be nonnegative");

    AswReport rep;
    IntPoly p = poly_from_seq(s);
    if (p.is_zero())
        throw invalid_input("asw_crosscheck: zero sequence");
    rep.real_rooted_nonpos = is_real_rooted_nonpos(p);

    MinorScan scan = all_minors_nonneg(toeplitz(s, size), size);
    rep.toeplitz_tnn = scan.all_nonneg;
    rep.witness = scan.witness;
    rep.consistent = !rep.real_rooted_nonpos || rep.toeplitz_tnn;
    return rep;
}

} // namespace ilc
