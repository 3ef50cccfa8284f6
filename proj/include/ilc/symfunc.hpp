#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ilc/exactnum.hpp"

namespace ilc {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<long>;

long partition_weight(const Partition& p);
bool is_partition(const Partition& p);
Partition repeated_part(long k, long r); // k^r, dropping k = 0

// Prefix-sum (dominance) order; both arguments must have equal weight.
bool dominance_le(const Partition& lam, const Partition& mu);

// Integer linear combination of complete-homogeneous basis elements h_lambda.
// Equality of HExpr is equality of symmetric functions since the h_lambda
// form a basis.
class HExpr {
public:
    HExpr() = default;

    static HExpr one();
    static HExpr h(long j); // h_j; j = 0 gives 1, j < 0 gives 0

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, ExactInt>& terms() const { return terms_; }

    void add_term(const Partition& key, const ExactInt& coeff);

    friend bool operator==(const HExpr& a, const HExpr& b) { return a.terms_ == b.terms_; }

private:
    std::map<Partition, ExactInt> terms_;
};

HExpr h_add(const HExpr& f, const HExpr& g);
HExpr h_sub(const HExpr& f, const HExpr& g);
HExpr h_scale(const HExpr& f, const ExactInt& c);
HExpr h_mul(const HExpr& f, const HExpr& g);

// Jacobi-Trudi image det(h_{lambda_i - i + j}) expanded over permutations.
HExpr schur_to_h(const Partition& lam, long max_length = 12);

// b_k = a_k^2 - a_{k-1} a_{k+1} on a window of h-expressions.
std::vector<HExpr> l_step_h(const std::vector<HExpr>& s);

// Coefficient of the monomial basis element m_lambda: sum over terms of the
// number of nonnegative integer matrices with row sums mu and column sums
// lambda, counted by memoized depth-first distribution.
ExactInt m_coeff(const HExpr& f, const Partition& lam);

// Componentwise sum of shapes (the dominance-maximal shape of the
// corresponding Schur product).
Partition dominant_partition(const std::vector<Partition>& shapes);

// (s_{k^r})^2 - s_{(k-1)^r} s_{(k+1)^r} == s_{k^{r-1}} s_{k^{r+1}}
bool verify_kirillov(long k, long r);

// One signed product of Schur functions.
struct SchurProduct {
    ExactInt coeff;
    std::vector<Partition> shapes;
};

// The seven-term expansion of the fourth L-iterate of (h_k), built by
// squaring the two-term third iterate and subtracting the shifted product.
std::vector<SchurProduct> l4_table(long k);

HExpr l4_of_hk(long k);

// Coefficient of m_lambda in the fourth iterate at lambda =
// (7k+1, 5k-1, 3k-1, k+1); the expected value is -1.
ExactInt l4_negative_witness(long k);

// Evaluate by substituting a scalar for each h_j (an algebra map since the
// h_j are free generators).
ExactRat specialize(const HExpr& f, const std::function<ExactRat(long)>& h_value);

} // namespace ilc
