#pragma once

#include <cstdint>
#include <vector>

#include "ilc/certificate.hpp"
#include "ilc/seq.hpp"

namespace ilc {

// Integer-coefficient polynomial, coefficient of x^i at index i.  Normalized:
// empty vector is the zero polynomial, otherwise the leading coefficient is
// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    static IntPoly from_coeffs(std::vector<ExactInt> coeffs);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const ExactInt& coeff(long i) const
    {
        static const ExactInt zero{0};
        if (i < 0 || i >= static_cast<long>(c_.size()))
            return zero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<ExactInt>& coeffs() const { return c_; }
    const ExactInt& leading() const { return c_.back(); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<ExactInt> c_;
};

// a_0 + a_1 x + ... with rational entries cleared to integers by the lcm of
// denominators (the root set is unchanged).
IntPoly poly_from_seq(const Seq& s);

IntPoly poly_derivative(const IntPoly& p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Content-free primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// gcd in Z[x] by a primitive pseudo-remainder sequence; primitive, positive
// leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), content-normalized.
IntPoly squarefree_part(const IntPoly& p);

// Distinct real roots of a squarefree polynomial by Sturm sign variations.
long count_real_roots(const IntPoly& p);

// Distinct real roots in (-inf, 0] of a squarefree polynomial.
long count_real_roots_nonpos(const IntPoly& p);

bool is_real_rooted(const IntPoly& p);

// Real-rooted with every root <= 0 (checked on the squarefree part).
bool is_real_rooted_nonpos(const IntPoly& p);

// Iterate L on a nonnegative sequence, requiring the coefficient polynomial
// of every iterate to stay real-rooted.  A level-0 failure falls outside the
// hypothesis (inconclusive); a later failure would be a counterexample and
// is reported as refuted.
Certificate check_pla_chain(const Seq& s, int depth, const std::string& target = {});

// Coefficients of prod (x + r_i) for random positive rationals r_i;
// deterministic per seed.
Seq random_real_rooted(long deg, std::uint64_t seed);

} // namespace ilc
