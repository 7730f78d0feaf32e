#include "fuchsq/ratfun.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fuchsq/errors.hpp"

namespace fuchsq {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
}

Rat RatFun::constant_value() const {
    if (!is_constant()) throw NotConstantError("rational function is not constant");
    return num_.is_zero() ? Rat(0) : num_.coeff(0);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r(1), b = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Rat RatFun::eval(const Rat& q) const {
    Rat d = den_.eval(q);
    if (d == 0) throw std::domain_error("evaluating rational function at a pole");
    return num_.eval(q) / d;
}

int RatFun::ord_at(const Rat& q) const {
    if (is_zero()) return kOrdInfinite;
    // num and den are coprime, so at most one contributes.
    int n = root_multiplicity(num_, q);
    if (n > 0) return n;
    return -root_multiplicity(den_, q);
}

int RatFun::ord_at_infinity() const {
    if (is_zero()) return kOrdInfinite;
    return den_.degree() - num_.degree();
}

RatFun RatFun::substitute_inverse() const {
    if (is_zero()) return RatFun();
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (dd > dn)
        n = n * Poly::monomial(Rat(1), dd - dn);
    else if (dn > dd)
        d = d * Poly::monomial(Rat(1), dn - dd);
    return RatFun(n, d);
}

std::vector<Rat> laurent_coefficients(const RatFun& f, const Point& q, int lowest,
                                      int highest) {
    if (lowest > highest) return {};
    if (q.is_infinity())
        return laurent_coefficients(f.substitute_inverse(), Point(Rat(0)), lowest, highest);
    std::vector<Rat> out(highest - lowest + 1, Rat(0));
    if (f.is_zero()) return out;
    const Rat& a = q.value();
    Poly n = f.num().shift(a);
    Poly d = f.den().shift(a);
    int vn = 0, vd = 0;
    while (n.coeff(vn) == 0) ++vn;
    while (d.coeff(vd) == 0) ++vd;
    int shift = vn - vd;  // ord of f at q
    int series_len = highest - shift + 1;
    if (series_len <= 0) return out;
    // Power series division of n0 by d0 (both unit at 0) to series_len terms.
    std::vector<Rat> s(series_len, Rat(0));
    Rat d0 = d.coeff(vd);
    for (int k = 0; k < series_len; ++k) {
        Rat acc = n.coeff(vn + k);
        for (int j = 0; j < k; ++j) acc -= s[j] * d.coeff(vd + (k - j));
        s[k] = acc / d0;
    }
    for (int k = lowest; k <= highest; ++k) {
        int idx = k - shift;
        if (idx >= 0 && idx < series_len) out[k - lowest] = s[idx];
    }
    return out;
}

Rat residue_at(const RatFun& f, const Point& q) {
    if (q.is_infinity()) {
        // res_inf(f dz) = res_0(-f(1/w)/w^2 dw)
        RatFun g = f.substitute_inverse();
        RatFun w2(Poly::monomial(Rat(1), 2));
        return residue_at(-(g / w2), Point(Rat(0)));
    }
    return laurent_coefficients(f, q, -1, -1)[0];
}

Point Point::from_string(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return Point::infinity();
    try {
        return Point(rat_from_string(s));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad point literal: '" + s + "' (expected rational or 'inf')");
    }
}

// ---------------------------------------------------------------------------
// Expression parser for rational functions of z.

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) { skip(); }

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    char take() {
        char c = peek();
        ++pos;
        skip();
        return c;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        std::ostringstream os;
        os << "parse error at position " << pos << ": expected " << expected;
        if (pos < text.size())
            os << ", found '" << text[pos] << "'";
        else
            os << ", found end of input";
        throw ParseError(os.str());
    }
};

RatFun parse_expr(Lexer& lx);

long parse_int_literal(Lexer& lx) {
    size_t start = lx.pos;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) digits += lx.take();
    if (digits.empty()) lx.fail("integer");
    try {
        return std::stol(digits);
    } catch (const std::out_of_range&) {
        lx.pos = start;
        lx.fail("integer within range");
    }
}

RatFun parse_atom(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.take();
        RatFun inner = parse_expr(lx);
        if (lx.peek() != ')') lx.fail("')'");
        lx.take();
        return inner;
    }
    if (c == 'z') {
        lx.take();
        return RatFun::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(lx.peek()))) digits += lx.take();
        return RatFun(rat_from_string(digits));
    }
    lx.fail("number, 'z' or '('");
}

RatFun parse_power(Lexer& lx) {
    RatFun base = parse_atom(lx);
    if (lx.peek() == '^') {
        lx.take();
        bool neg = false;
        while (lx.peek() == '-' || lx.peek() == '+') {
            if (lx.take() == '-') neg = !neg;
        }
        long e = parse_int_literal(lx);
        return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
}

RatFun parse_unary(Lexer& lx) {
    bool neg = false;
    while (lx.peek() == '-' || lx.peek() == '+') {
        if (lx.take() == '-') neg = !neg;
    }
    RatFun v = parse_power(lx);
    return neg ? -v : v;
}

RatFun parse_term(Lexer& lx) {
    RatFun v = parse_unary(lx);
    while (lx.peek() == '*' || lx.peek() == '/') {
        char op = lx.take();
        RatFun rhs = parse_unary(lx);
        if (op == '*')
            v = v * rhs;
        else {
            if (rhs.is_zero()) lx.fail("nonzero divisor");
            v = v / rhs;
        }
    }
    return v;
}

RatFun parse_expr(Lexer& lx) {
    RatFun v = parse_term(lx);
    while (lx.peek() == '+' || lx.peek() == '-') {
        char op = lx.take();
        RatFun rhs = parse_term(lx);
        v = (op == '+') ? v + rhs : v - rhs;
    }
    return v;
}

std::string term_body(const Rat& coeff, int k) {
    // |coeff| * z^k without sign.
    Rat a = abs(coeff);
    std::string s;
    if (k == 0) return rat_to_string(a);
    if (a != 1) s = rat_to_string(a) + "*";
    s += "z";
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

RatFun parse_ratfun(const std::string& text) {
    Lexer lx(text);
    if (lx.peek() == '\0') throw ParseError("parse error at position 0: empty expression");
    RatFun v = parse_expr(lx);
    if (lx.peek() != '\0') lx.fail("end of input");
    return v;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? "-" : "+";
        s += term_body(c, k);
    }
    return s;
}

std::string to_string(const RatFun& f) {
    if (f.den() == Poly(1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace fuchsq
