#include "fuchsq/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fuchsq {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n odd composite.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xf0cc5ul);
    while (true) {
        Int y = rng.get_z_range(n - 2) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    Int d = 41;
    while (n > 1 && d * d <= n && d < 100000) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    Int f = pollard_rho(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

}  // namespace

std::vector<Int> divisors(const Int& n) {
    std::map<Int, int> fac;
    factor_into(abs(n), fac);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        if (base * (e + 1) > 200000)
            throw std::runtime_error("divisor enumeration too large");
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace fuchsq
