#include "fuchsq/polynomial.hpp"

#include <stdexcept>

namespace fuchsq {

Poly Poly::monomial(const Rat& coeff, int degree) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::operator/(const Rat& s) const {
    if (s == 0) throw std::domain_error("polynomial division by zero scalar");
    return *this * (Rat(1) / s);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (degree() < o.degree()) return {Poly(), rem};
    std::vector<Rat> q(degree() - o.degree() + 1, Rat(0));
    const Rat& lead = o.leading();
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        int k = rem.degree() - o.degree();
        Rat f = rem.leading() / lead;
        q[k] = f;
        rem = rem - o * Poly::monomial(f, k);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::shift(const Rat& a) const {
    // Horner on z -> z + a.
    Poly r;
    Poly lin(std::vector<Rat>{a, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
    return r;
}

Poly Poly::reversed() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

int root_multiplicity(const Poly& p, const Rat& q) {
    if (p.is_zero()) throw std::domain_error("root multiplicity of zero polynomial");
    Poly lin(std::vector<Rat>{-q, Rat(1)});
    Poly cur = p;
    int m = 0;
    while (cur.eval(q) == 0) {
        cur = cur / lin;
        ++m;
    }
    return m;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
    std::vector<std::pair<Rat, int>> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    // Clear denominators to an integer polynomial.
    Int lcm = 1;
    for (const Rat& c : p.coeffs()) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    std::vector<Int> ic(p.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) {
        Rat v = p.coeffs()[i] * Rat(lcm);
        ic[i] = v.get_num();
    }
    // Strip the root at zero.
    size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    if (lo > 0) roots.emplace_back(Rat(0), static_cast<int>(lo));
    if (lo + 1 >= ic.size()) return roots;
    Int a0 = ic[lo], an = ic.back();
    Poly cur = p;
    for (const Int& num : divisors(a0)) {
        for (const Int& den : divisors(an)) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * num, den);
                cand.canonicalize();
                if (cand == 0) continue;
                int m = root_multiplicity(cur, cand);
                if (m > 0) roots.emplace_back(cand, m);
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace fuchsq
