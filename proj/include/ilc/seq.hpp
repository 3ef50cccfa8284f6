#pragma once

#include <optional>
#include <vector>

#include "ilc/certificate.hpp"
#include "ilc/exactnum.hpp"

namespace ilc {

// Finite sequence a_0..a_n of exact rationals; entries outside the stored
// window read as 0 (the usual convention for sequences of finite support).
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<ExactRat> entries) : entries_(std::move(entries)) {}
    Seq(std::initializer_list<long> values)
    {
        entries_.reserve(values.size());
        for (long v : values)
            entries_.emplace_back(v);
    }

    long size() const { return static_cast<long>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // Zero-extended read.
    const ExactRat& at(long k) const
    {
        static const ExactRat zero{0};
        if (k < 0 || k >= size())
            return zero;
        return entries_[static_cast<size_t>(k)];
    }

    ExactRat& operator[](long k) { return entries_[static_cast<size_t>(k)]; }
    const ExactRat& operator[](long k) const { return entries_[static_cast<size_t>(k)]; }

    const std::vector<ExactRat>& entries() const { return entries_; }

    friend bool operator==(const Seq& a, const Seq& b) { return a.entries_ == b.entries_; }

private:
    std::vector<ExactRat> entries_;
};

// Line of Pascal's triangle: entry m is binom(n + m*u, m*v).
struct LineSpec {
    long n = 0;
    long u = 0;
    long v = 1;
    long length = 0;
};

ExactInt binomial(long n, long k);

// b_k = a_k^2 - a_{k-1} a_{k+1} over the same index window 0..n.
Seq l_step(const Seq& s);

// All entries >= 0; on failure reports the least offending index.
struct NonnegResult {
    bool ok = true;
    std::optional<long> first_negative;
};
NonnegResult is_nonneg(const Seq& s);

bool is_log_concave(const Seq& s);

// a_k^2 >= r0 a_{k-1} a_{k+1} at every interior index.  Requires a
// nonnegative sequence.
bool is_r0_factor(const Seq& s);

// Iterate L; refute on a negative entry, certify once an iterate is
// r0-factor log-concave, give up at max_depth.
Certificate certify_infinite_lc(const Seq& s, int max_depth,
                                const std::string& target = {});

// `s` holds the first entries of an infinite nonnegative sequence, so the
// right edge of each iterate is contaminated by the missing tail.  Only the
// shrinking prefix of trustworthy positions is inspected; a refutation found
// there is genuine.  Certification is impossible from a truncation, so the
// outcome is refuted or inconclusive.
Certificate refute_truncated_lc(const Seq& s, int max_depth,
                                const std::string& target = {});

// Symmetric odd-length-support certificate: for a symmetric nonnegative
// sequence a_0..a_{2m+1}, the two conditions
//   (i)  a_k^2 >= r0 a_{k-1} a_{k+1} for k < m, and
//   (ii) a_m >= 2 a_{m-1}
// are preserved by L and imply infinite log-concavity.  When a hypothesis
// fails the result is inconclusive (the criterion is only sufficient).
Certificate certify_symmetric_odd(const Seq& s, const std::string& target = {});

Seq pascal_line(const LineSpec& spec);

// The closed forms (1/n) C(n,k) C(n,k-1) for the first L-value of a column
// and 2/(n^2(n-1)) C(n,k)^2 C(n,k-1) C(n,k-2) for the second.
std::pair<ExactRat, ExactRat> column_closed_forms(long n, long k);

// (4k-6)n^2 - (4k^2-10k+6)n - k^2, whose sign matches the nontrivial factor
// of the third L-value of a column.
ExactInt l3_positivity_poly(long k, long n);

Seq boros_moll_coeffs(long m);

// True iff C(u,v)^2 < C(2u,2v), i.e. log-concavity of the n=0 diagonal-free
// line fails at its second term.  Requires u > v >= 1.
bool vandermonde_refute(long u, long v);

} // namespace ilc
