#pragma once

#include <vector>

#include "ilc/seq.hpp"

namespace ilc {

enum class Parity { even, odd }; // support length n = 2m (even) or n = 2m+1 (odd)

// Hypersurface parameters.  Coordinates of sampled points are x^{s_k} with
// s_k = d_1 + ... + d_k; to keep them rational the d_i are rationals whose
// common denominator D is absorbed into the base (x here plays the role of
// x^{1/D}, so exponents D*s_k are integers).
struct RegionParams {
    long m = 1;
    Parity parity = Parity::odd;
    ExactRat x{2};
    std::vector<ExactRat> d; // 1 = d_1 > d_2 > ... > d_m > 0

    void validate() const;
};

// A point (a_1,...,a_m) with implicit a_0 = 1; completes symmetrically to a
// sequence of length n+1.
struct RegionPoint {
    std::vector<ExactRat> coords;
};

// Smallest 10^-6-granular rational upper bound for r1 = (1+sqrt(5))/2.
ExactRat r1_upper_bound();

// Membership in the region R via the inequality characterization:
//   (a) 1 = a_0 < a_1 < ... < a_m,
//   (b) a_k^2 >= r0 a_{k-1} a_{k+1} for 1 <= k < m,
//   (c) a_m >= r1 a_{m-1} (n even) or a_m >= 2 a_{m-1} (n odd).
bool in_region(const RegionPoint& p, Parity parity);

// Point of the k-th bounding hypersurface with its k-th coordinate pushed to
// the correct side: the irrational factor r1 is replaced by a rational upper
// substitute and the coordinate is then multiplied by bump > 1.  Sampled
// points are candidates only; membership is re-checked by in_region.
RegionPoint sample_near_hypersurface(const RegionParams& params, long k, const ExactRat& bump);

Seq point_to_sequence(const RegionPoint& p, Parity parity);

} // namespace ilc
