#include "ilc/polyroots.hpp"

#include <chrono>
#include <random>

namespace ilc {

namespace {

using clock_type = std::chrono::steady_clock;

int sign_at_pos_inf(const IntPoly& p)
{
    return sgn(p.leading());
}

int sign_at_neg_inf(const IntPoly& p)
{
    int s = sgn(p.leading());
    return p.degree() % 2 == 0 ? s : -s;
}

int sign_at_zero(const IntPoly& p)
{
    return sgn(p.coeff(0));
}

long variations(const std::vector<IntPoly>& chain, int (*sign_of)(const IntPoly&))
{
    long v = 0;
    int prev = 0;
    for (const IntPoly& p : chain) {
        int s = sign_of(p);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

// Pseudo-remainder of f by g with a positive implied multiplier, so the sign
// matches the true remainder of the division over Q.
IntPoly prem_signed(const IntPoly& f, const IntPoly& g)
{
    std::vector<ExactInt> r = f.coeffs();
    const std::vector<ExactInt>& gc = g.coeffs();
    long dg = g.degree();
    const ExactInt& lg = g.leading();
    long mults = 0;

    long dr = static_cast<long>(r.size()) - 1;
    auto trim = [&]() {
        while (dr >= 0 && sgn(r[static_cast<size_t>(dr)]) == 0)
            --dr;
    };
    trim();
    while (dr >= dg) {
        ExactInt lr = r[static_cast<size_t>(dr)];
        for (long i = 0; i <= dr; ++i)
            r[static_cast<size_t>(i)] *= lg;
        ++mults;
        long shift = dr - dg;
        for (long i = 0; i <= dg; ++i)
            r[static_cast<size_t>(i + shift)] -= lr * gc[static_cast<size_t>(i)];
        --dr;
        trim();
    }
    r.resize(static_cast<size_t>(dr + 1));
    IntPoly out = IntPoly::from_coeffs(std::move(r));
    if (sgn(lg) < 0 && mults % 2 == 1) {
        // one more factor of lg makes the implied multiplier positive
        std::vector<ExactInt> fixed = out.coeffs();
        for (ExactInt& c : fixed)
            c *= lg;
        out = IntPoly::from_coeffs(std::move(fixed));
    }
    return out;
}

// Exact division in Z[x]; requires divisibility.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g)
{
    if (g.is_zero())
        throw invalid_input("divide_exact: division by zero polynomial");
    if (f.is_zero())
        return {};
    long df = f.degree(), dg = g.degree();
    if (df < dg)
        throw invalid_input("divide_exact: not divisible");
    std::vector<ExactInt> r = f.coeffs();
    std::vector<ExactInt> q(static_cast<size_t>(df - dg + 1));
    for (long i = df - dg; i >= 0; --i) {
        ExactInt& lead = r[static_cast<size_t>(i + dg)];
        ExactInt qi, rem;
        mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), lead.get_mpz_t(),
                    g.leading().get_mpz_t());
        if (sgn(rem) != 0)
            throw invalid_input("divide_exact: not divisible");
        q[static_cast<size_t>(i)] = qi;
        if (sgn(qi) != 0)
            for (long j = 0; j <= dg; ++j)
                r[static_cast<size_t>(i + j)] -= qi * g.coeff(j);
    }
    for (const ExactInt& c : r)
        if (sgn(c) != 0)
            throw invalid_input("divide_exact: not divisible");
    return IntPoly::from_coeffs(std::move(q));
}

std::vector<IntPoly> sturm_chain(const IntPoly& p)
{
    std::vector<IntPoly> chain;
    chain.push_back(primitive_part(p));
    IntPoly d = poly_derivative(p);
    if (d.is_zero())
        return chain;
    chain.push_back(primitive_part(d));
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain[chain.size() - 1];
        if (b.degree() == 0)
            break;
        IntPoly r = prem_signed(a, b);
        if (r.is_zero())
            break;
        std::vector<ExactInt> neg = r.coeffs();
        for (ExactInt& c : neg)
            c = -c;
        chain.push_back(primitive_part(IntPoly::from_coeffs(std::move(neg))));
    }
    return chain;
}

void require_squarefree(const IntPoly& p)
{
    if (p.is_zero())
        throw invalid_input("count_real_roots: zero polynomial");
    if (p.degree() == 0)
        return;
    IntPoly g = poly_gcd(p, poly_derivative(p));
    if (g.degree() != 0)
        throw invalid_input("count_real_roots: polynomial is not squarefree");
}

} // namespace

IntPoly IntPoly::from_coeffs(std::vector<ExactInt> coeffs)
{
    while (!coeffs.empty() && sgn(coeffs.back()) == 0)
        coeffs.pop_back();
    IntPoly p;
    p.c_ = std::move(coeffs);
    return p;
}

IntPoly poly_from_seq(const Seq& s)
{
    ExactInt den_lcm(1);
    for (const ExactRat& a : s.entries())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<ExactInt> c;
    c.reserve(static_cast<size_t>(s.size()));
    for (const ExactRat& a : s.entries()) {
        ExactRat scaled = a * den_lcm;
        c.push_back(scaled.get_num());
    }
    return IntPoly::from_coeffs(std::move(c));
}

IntPoly poly_derivative(const IntPoly& p)
{
    if (p.degree() <= 0)
        return {};
    std::vector<ExactInt> c(static_cast<size_t>(p.degree()));
    for (long i = 1; i <= p.degree(); ++i)
        c[static_cast<size_t>(i - 1)] = i * p.coeff(i);
    return IntPoly::from_coeffs(std::move(c));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<ExactInt> c(static_cast<size_t>(a.degree() + b.degree() + 1));
    for (long i = 0; i <= a.degree(); ++i)
        for (long j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return IntPoly::from_coeffs(std::move(c));
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero())
        return {};
    ExactInt content(0);
    for (const ExactInt& c : p.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (sgn(p.leading()) < 0)
        content = -content;
    std::vector<ExactInt> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), content.get_mpz_t());
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
    IntPoly f = primitive_part(a), g = primitive_part(b);
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    if (f.degree() < g.degree())
        std::swap(f, g);
    while (!g.is_zero() && g.degree() > 0) {
        IntPoly r = primitive_part(prem_signed(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    if (!g.is_zero())
        return IntPoly::from_coeffs({ExactInt(1)}); // nonzero constant remainder
    return f;
}

IntPoly squarefree_part(const IntPoly& p)
{
    if (p.is_zero())
        throw invalid_input("squarefree_part: zero polynomial");
    IntPoly pp = primitive_part(p);
    if (pp.degree() == 0)
        return pp;
    IntPoly g = poly_gcd(pp, poly_derivative(pp));
    if (g.degree() == 0)
        return pp;
    return primitive_part(divide_exact(pp, g));
}

long count_real_roots(const IntPoly& p)
{
    require_squarefree(p);
    if (p.degree() == 0)
        return 0;
    std::vector<IntPoly> chain = sturm_chain(p);
    return variations(chain, sign_at_neg_inf) - variations(chain, sign_at_pos_inf);
}

long count_real_roots_nonpos(const IntPoly& p)
{
    require_squarefree(p);
    if (p.degree() == 0)
        return 0;
    IntPoly g = p;
    long zero_root = 0;
    if (sgn(g.coeff(0)) == 0) {
        // squarefree, so x divides exactly once
        std::vector<ExactInt> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = IntPoly::from_coeffs(std::move(c));
        zero_root = 1;
        if (g.degree() == 0)
            return zero_root;
    }
    std::vector<IntPoly> chain = sturm_chain(g);
    return zero_root + variations(chain, sign_at_neg_inf) - variations(chain, sign_at_zero);
}

bool is_real_rooted(const IntPoly& p)
{
    if (p.is_zero())
        throw invalid_input("is_real_rooted: zero polynomial");
    IntPoly sf = squarefree_part(p);
    return count_real_roots(sf) == sf.degree();
}

bool is_real_rooted_nonpos(const IntPoly& p)
{
    if (p.is_zero())
        throw invalid_input("is_real_rooted_nonpos: zero polynomial");
    IntPoly sf = squarefree_part(p);
    return count_real_roots_nonpos(sf) == sf.degree();
}

Certificate check_pla_chain(const Seq& s, int depth, const std::string& target)
{
    auto t0 = clock_type::now();
    if (!is_nonneg(s).ok)
        throw invalid_input("check_pla_chain: sequence must be nonnegative");

    Certificate cert;
    cert.target = target;

    Seq cur = s;
    for (int level = 0; level <= depth; ++level) {
        IntPoly p = poly_from_seq(cur);
        if (p.is_zero()) {
            cert.status = Status::inconclusive;
            cert.depth = level;
            cert.note("zero_polynomial", std::to_string(level));
            cert.elapsed = clock_type::now() - t0;
            return cert;
        }
        if (!is_real_rooted(p)) {
            // outside the hypothesis at level 0, a counterexample afterwards
            cert.status = level == 0 ? Status::inconclusive : Status::refuted;
            cert.depth = level;
            cert.failure = Failure{level, -1};
            cert.note("non_real_rooted_level", std::to_string(level));
            cert.elapsed = clock_type::now() - t0;
            return cert;
        }
        if (level < depth)
            cur = l_step(cur);
    }
    cert.status = Status::certified;
    cert.depth = depth;
    cert.elapsed = clock_type::now() - t0;
    return cert;
}

Seq random_real_rooted(long deg, std::uint64_t seed)
{
    if (deg < 1)
        throw invalid_input("random_real_rooted: degree must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<long>(rng() % 12) + 1; };

    std::vector<ExactRat> coeffs{ExactRat(1)};
    for (long i = 0; i < deg; ++i) {
        ExactRat root = make_rat(ExactInt(draw()), ExactInt(draw()));
        std::vector<ExactRat> next(coeffs.size() + 1);
        for (size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];      // x * c_j
            next[j] += coeffs[j] * root;   // r * c_j
        }
        coeffs = std::move(next);
    }
    return Seq(std::move(coeffs));
}

} // namespace ilc
