#ifndef FUCHSQ_RATFUN_HPP
#define FUCHSQ_RATFUN_HPP

#include <string>
#include <vector>

#include "fuchsq/point.hpp"
#include "fuchsq/polynomial.hpp"

namespace fuchsq {

// Rational function in one variable, kept canonical: gcd(num, den) = 1 and
// den monic.  Equality is therefore plain component equality.
class RatFun {
public:
    RatFun() = default;
    RatFun(int v) : num_(v), den_(1) {}
    RatFun(const Rat& v) : num_(v), den_(1) {}
    RatFun(const Poly& p) : num_(p), den_(1) {}
    RatFun(Poly num, Poly den);

    static RatFun variable() { return RatFun(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;  // requires is_constant()

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun inverse() const;
    RatFun derivative() const;
    RatFun pow(int e) const;

    bool is_regular_at(const Rat& q) const { return ord_at(q) >= 0; }
    Rat eval(const Rat& q) const;  // requires regularity at q

    // Valuation: multiplicity of (z - q); positive = zero, negative = pole.
    // Infinite for the zero function (reported as a large sentinel).
    int ord_at(const Rat& q) const;
    int ord_at_infinity() const;
    int ord_at(const Point& q) const {
        return q.is_infinity() ? ord_at_infinity() : ord_at(q.value());
    }

    // f(1/w) as a rational function of w.
    RatFun substitute_inverse() const;

private:
    Poly num_;
    Poly den_ = Poly(1);
};

constexpr int kOrdInfinite = 1 << 28;  // ord of the zero function

// Laurent coefficients of (z-q)^k (or w^k at infinity, w = 1/z) for
// k = lowest..highest.
std::vector<Rat> laurent_coefficients(const RatFun& f, const Point& q, int lowest,
                                      int highest);

// Residue of the one-form f(z)dz at q (computed in w = 1/z at infinity).
Rat residue_at(const RatFun& f, const Point& q);

// Parser/printer for expressions over `z` with + - * / ^ ( ) and integer
// literals.  parse(print(f)) == f.
RatFun parse_ratfun(const std::string& text);
std::string to_string(const RatFun& f);
std::string to_string(const Poly& p);

}  // namespace fuchsq

#endif
