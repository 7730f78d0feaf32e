#ifndef FUCHSQ_POLYNOMIAL_HPP
#define FUCHSQ_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "fuchsq/rational.hpp"

namespace fuchsq {

// Dense univariate polynomial over Q.  Coefficient i belongs to z^i; the
// coefficient vector never has a trailing zero (the zero polynomial is the
// empty vector, degree -1).
class Poly {
public:
    Poly() = default;
    Poly(int v) { assign_constant(Rat(v)); }
    Poly(const Rat& v) { assign_constant(v); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& coeff, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    const Rat& leading() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator/(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division; o must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly pow(unsigned e) const;
    // Substitute z -> z + a.
    Poly shift(const Rat& a) const;
    // Coefficient reversal: z^n * p(1/z) for n = degree().
    Poly reversed() const;
    Poly monic() const;

private:
    void assign_constant(const Rat& v) {
        if (v != 0) c_ = {v};
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

// Multiplicity of the root q (0 if p(q) != 0; error on the zero polynomial).
int root_multiplicity(const Poly& p, const Rat& q);

// All rational roots with multiplicity, sorted ascending.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

}  // namespace fuchsq

#endif
