#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ilc/polyroots.hpp"
#include "ilc/seq.hpp"

namespace ilc {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols))
    {
        if (rows < 1 || cols < 1)
            throw invalid_input("ExactMatrix: dimensions must be positive");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    ExactRat& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const ExactRat& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<ExactRat> a_;
};

// size x size truncation of the Toeplitz matrix (a_{j-i}).
ExactMatrix toeplitz(const Seq& s, long size);

ExactRat determinant(const ExactMatrix& a);

struct MinorWitness {
    std::vector<long> row_set;
    std::vector<long> col_set;
    ExactRat value;
};

struct MinorScan {
    bool all_nonneg = true;
    std::optional<MinorWitness> witness; // lexicographically least negative minor
};

// Enumerate every minor of order 1..max_order; the total count is guarded.
MinorScan all_minors_nonneg(const ExactMatrix& a, long max_order,
                            long long minor_guard = 10000000);

// Matrix of adjacent 2x2 minors; commutes with the sequence L-operator
// through the Toeplitz construction.
ExactMatrix l_matrix(const ExactMatrix& a);

// The 5x5 one-parameter family whose L-matrix loses total nonnegativity for
// large t even though the matrix itself stays totally nonnegative.
ExactMatrix fallat_example(const ExactRat& t);

// Second compound matrix: all 2x2 minors, rows and columns ordered
// lexicographically by index pair.
ExactMatrix compound2(const ExactMatrix& a);

// Exact positive-semidefiniteness test for symmetric matrices.  Principal
// minors are enumerated exhaustively up to 8x8; beyond that (up to 16x16)
// the equivalent characteristic-polynomial criterion is used: for a matrix
// with real spectrum, PSD is the same as every signed coefficient sum of
// principal minors being nonnegative.
bool is_psd(const ExactMatrix& a);

ExactMatrix mat_mul(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix transpose(const ExactMatrix& a);

// Product of elementary nonnegative bidiagonal factors and a nonnegative
// diagonal; totally nonnegative by construction.  Deterministic per seed.
ExactMatrix random_tnn_matrix(long n, std::uint64_t seed);

// B^T B for a random small integer B.  Deterministic per seed.
ExactMatrix random_psd_matrix(long n, std::uint64_t seed);

struct AswReport {
    bool real_rooted_nonpos = false; // (i) via Sturm on the squarefree part
    bool toeplitz_tnn = false;       // (ii) at the given truncation
    std::optional<MinorWitness> witness;
    bool consistent = true; // (i) implies (ii); false would contradict ASW
};

// Cross-check the Aissen-Schoenberg-Whitney equivalence at a finite
// truncation.  When (i) fails, a negative minor is searched for and
// reported; not finding one at this size is inconclusive, not a conflict.
AswReport asw_crosscheck(const Seq& s, long size);

} // namespace ilc
