#ifndef FUCHSQ_CONSTRUCT_HPP
#define FUCHSQ_CONSTRUCT_HPP

#include "fuchsq/verify.hpp"

namespace fuchsq {

struct NilpotentPair {
    QMatrix m1;  // upper shift, single Jordan block
    QMatrix m2;  // lower shift, single Jordan block
};

// Verified nilpotent pair: m_i^N = 0, m_i^{N-1} != 0, and the eigenvector
// line of m1 avoids ker(m2^{N-1}).
NilpotentPair nilpotent_pair(int n);

// Default scale with a rational non-integral balancing spectrum, recorded per
// rank (1/4 for N = 2, 343/288 for N = 3).
Rat default_scale(int n);

// Trivial-bundle connection A = R1/(z-q1) + R2/(z-q2) - (R1+R2)/(z-p) with
// nilpotent R1, R2 and screen-certified residue spectrum at p.  For N >= 3
// the second nilpotent gets a corner entry so the balancing residue can have
// a rational simple spectrum at all.
LogConnection irreducible_fuchsian(int n, const Point& q1, const Point& q2,
                                   const Point& p, const Rat& scale);

}  // namespace fuchsq

#endif
