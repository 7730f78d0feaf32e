#ifndef FUCHSQ_RATIONAL_HPP
#define FUCHSQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fuchsq {

// Exact scalars.  mpq_class keeps the canonical form the model relies on:
// fully reduced, denominator >= 1.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline Rat frac_part(const Rat& r) { return r - Rat(floor_int(r)); }

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// All positive divisors, via trial division plus Pollard rho for the large
// cofactors.  Throws if the divisor count would explode.
std::vector<Int> divisors(const Int& n);

}  // namespace fuchsq

#endif
