#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilc/certificate.hpp"
#include "ilc/exactnum.hpp"

namespace ilc {

// Integer-coefficient Laurent polynomial in q, stored as a dense coefficient
// window starting at min_exp.  Normalized: the stored window has nonzero
// first and last coefficients; the zero polynomial stores nothing.
class LPoly {
public:
    LPoly() = default;
    LPoly(ExactInt c, long exp); // monomial c*q^exp
    static LPoly constant(long c) { return LPoly(ExactInt(c), 0); }
    static LPoly from_coeffs(long min_exp, std::vector<ExactInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    long term_count() const { return static_cast<long>(coeffs_.size()); }

    const ExactInt& coeff(long e) const
    {
        static const ExactInt zero{0};
        long i = e - min_exp_;
        if (i < 0 || i >= static_cast<long>(coeffs_.size()))
            return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const std::vector<ExactInt>& coeffs() const { return coeffs_; }

    ExactInt eval_at_one() const;
    // Value of q^{-min_exp} f(q) at an integer point; exponent offsets add
    // under multiplication, so this suffices for product cross-checks.
    ExactInt eval_shifted(long t) const;

    friend bool operator==(const LPoly& a, const LPoly& b)
    {
        return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
    }

private:
    long min_exp_ = 0;
    std::vector<ExactInt> coeffs_;
    void normalize();
};

LPoly lp_add(const LPoly& f, const LPoly& g);
LPoly lp_sub(const LPoly& f, const LPoly& g);
LPoly lp_mul(const LPoly& f, const LPoly& g);
LPoly lp_shift(const LPoly& f, long k);     // multiply by q^k
LPoly lp_substitute_q2(const LPoly& f);     // f(q^2)
std::string lp_to_string(const LPoly& f);

// [n]_q = 1 + q + ... + q^{n-1}
LPoly q_int(long n);

// Gaussian binomial via the q-Pascal recurrence (division-free); zero
// polynomial outside 0 <= k <= n.
LPoly gauss_binom(long n, long k);

// Independent route: generating function of partitions in an (n-k) x k box,
// by explicit enumeration.  Guarded; only for oracle-sized inputs.
LPoly gauss_partition_oracle(long n, long k, long max_partitions = 1000000);

// Balanced quantum analogue q^{-k(n-k)} * gauss_binom(n,k) at q^2.
LPoly quantum_binom(long n, long k);

// Sequence of Laurent polynomials with zero-extension outside its window.
class QSeq {
public:
    QSeq() = default;
    explicit QSeq(std::vector<LPoly> entries) : entries_(std::move(entries)) {}

    long size() const { return static_cast<long>(entries_.size()); }

    const LPoly& at(long k) const
    {
        static const LPoly zero{};
        if (k < 0 || k >= size())
            return zero;
        return entries_[static_cast<size_t>(k)];
    }

    const std::vector<LPoly>& entries() const { return entries_; }

private:
    std::vector<LPoly> entries_;
};

QSeq gauss_row(long n);
QSeq quantum_row(long n);
QSeq gauss_line(long n, long u, long v, long length);
QSeq quantum_line(long n, long u, long v, long length);

QSeq ql_step(const QSeq& s);

struct QNonnegResult {
    bool ok = true;
    std::optional<long> first_negative_index;    // sequence position
    std::optional<long> first_negative_exponent; // within that entry
};
QNonnegResult is_q_nonneg(const QSeq& s);

// First negative exponent of a single polynomial, if any.
std::optional<long> first_negative_exponent(const LPoly& f);

struct MintTerm {
    ExactInt coeff;
    long exp = 0;
};
MintTerm mint(const LPoly& f);

// Coefficientwise r0-factor comparison: every coefficient of a_k^2 must
// dominate r0 times the matching coefficient of a_{k-1} a_{k+1}.
bool is_q_r0_factor(const QSeq& s);

Certificate certify_q_infinite_lc(const QSeq& s, int max_depth,
                                  const std::string& target = {});

// Truncation-aware refutation for infinite q-sequences (see refute_truncated_lc).
Certificate refute_truncated_qlc(const QSeq& s, int max_depth,
                                 const std::string& target = {});

// [n]_q * ([n,k]^2 - [n-1,k][n+1,k]) == q^{n-k} [n,k][n,k-1]
bool q_narayana_check(long n, long k);

// The second column L-value admits two readings of its product formula; we
// expand both sides exactly and report which one holds.
struct LlqReport {
    bool literal_matches = false;   // trailing factor [n,k-1]^2
    bool corrected_matches = false; // trailing factor [n,k-1][n,k-2]
};
LlqReport llq_resolver(long n, long k);

} // namespace ilc
