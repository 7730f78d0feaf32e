#include "fuchsq/extension.hpp"

#include <algorithm>

namespace fuchsq {

namespace {

bool is_power_of_z(const Poly& p) {
    for (int k = 0; k < p.degree(); ++k)
        if (p.coeff(k) != 0) return false;
    return true;
}

// q^j with the 0^0 = 1 convention of the moment rows.
Rat rat_pow(const Rat& q, long j) {
    Rat r(1);
    for (long i = 0; i < j; ++i) r *= q;
    return r;
}

void validate_form(const RatFun& d, int deg, bool inf_marked,
                   const std::vector<Point>& marked, const char* name) {
    Poly den = d.den();
    for (const Point& q : marked) {
        if (q.is_infinity()) continue;
        if (d.ord_at(q.value()) < -1)
            throw ValidationError(std::string(name) + " has a pole of order > 1 at " +
                                  q.to_string());
        while (den.eval(q.value()) == 0)
            den = den / Poly(std::vector<Rat>{-q.value(), Rat(1)});
    }
    if (den.degree() > 0)
        throw ValidationError(std::string(name) + " has a pole outside the marked set");
    // Condition at infinity for the connection on O(deg).
    RatFun tail = d.substitute_inverse() +
                  RatFun(Poly(std::vector<Rat>{Rat(0), Rat(deg)}));
    int need = inf_marked ? 1 : 2;
    if (!tail.is_zero() && tail.ord_at(Rat(0)) < need)
        throw ValidationError(std::string(name) +
                              (inf_marked ? " does not vanish at infinity"
                                          : " violates regularity at the unmarked "
                                            "point infinity (residue sum != -degree)"));
}

}  // namespace

bool ExtensionDatum::is_marked(const Point& q) const {
    return std::binary_search(marked.begin(), marked.end(), q);
}

void validate_extension(const ExtensionDatum& ext) {
    if (!std::is_sorted(ext.marked.begin(), ext.marked.end()) ||
        std::adjacent_find(ext.marked.begin(), ext.marked.end()) != ext.marked.end())
        throw ValidationError("marked points must be sorted and distinct");
    if (!is_power_of_z(ext.u.den()))
        throw ValidationError("the cochain u must be regular away from 0 and infinity");
    bool inf_marked = ext.is_marked(Point::infinity());
    validate_form(ext.d_sub, ext.a, inf_marked, ext.marked, "d_S");
    validate_form(ext.d_quot, ext.b, inf_marked, ext.marked, "d_Q");
}

bool ObstructionClass::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Rat& c) { return c == 0; });
}

namespace {

RatFun overlap_cocycle(const ExtensionDatum& ext) {
    return (ext.d_sub - ext.d_quot) * ext.u + ext.u.derivative();
}

// Exponent thresholds of the two-chart splitting.
struct Window {
    int lowest;   // first exponent neither chart absorbs
    int highest;  // last such exponent
    int inf_cut;  // chart-1 absorbs strictly below this exponent
};

Window window_of(const ExtensionDatum& ext) {
    int e = ext.a - ext.b;
    Window w{};
    w.inf_cut = ext.is_marked(Point::infinity()) ? e : e - 1;
    w.lowest = w.inf_cut;
    w.highest = ext.is_marked(Point(Rat(0))) ? -2 : -1;
    return w;
}

// Moment row of the log pole at a finite marked q != 0: exponent k carries
// q^{-k-1}.
std::vector<Rat> moment_row(const Rat& q, int lowest, int highest) {
    std::vector<Rat> row;
    for (int k = lowest; k <= highest; ++k) row.push_back(rat_pow(q, -k - 1));
    return row;
}

}  // namespace

ObstructionClass obstruction_class(const ExtensionDatum& ext) {
    validate_extension(ext);
    Window w = window_of(ext);
    if (w.lowest > w.highest) return {0, {}};
    RatFun phi = overlap_cocycle(ext);
    std::vector<Rat> v =
        laurent_coefficients(phi, Point(Rat(0)), w.lowest, w.highest);
    // Reduce modulo the coboundary classes of log poles at finite marked
    // points away from 0.
    std::vector<std::vector<Rat>> moments;
    for (const Point& q : ext.marked)
        if (!q.is_infinity() && q.value() != 0)
            moments.push_back(moment_row(q.value(), w.lowest, w.highest));
    if (!moments.empty()) {
        Matrix<Rat> m(static_cast<int>(moments.size()),
                      static_cast<int>(v.size()));
        for (size_t r = 0; r < moments.size(); ++r)
            for (size_t c = 0; c < v.size(); ++c)
                m(static_cast<int>(r), static_cast<int>(c)) = moments[r][c];
        auto pivots = rref(m);
        for (size_t r = 0; r < pivots.size(); ++r) {
            Rat factor = v[pivots[r]];
            if (factor == 0) continue;
            for (size_t c = 0; c < v.size(); ++c)
                v[c] -= factor * m(static_cast<int>(r), static_cast<int>(c));
        }
    }
    return {w.lowest, std::move(v)};
}

namespace {

// Coefficients of the expansion of f at infinity: index k holds the
// coefficient of z^k, for k in [lowest, highest].
std::vector<Rat> infinity_expansion(const RatFun& f, int lowest, int highest) {
    std::vector<Rat> out(highest - lowest + 1, Rat(0));
    if (f.is_zero()) return out;
    auto lc = laurent_coefficients(f.substitute_inverse(), Point(Rat(0)), -highest,
                                   -lowest);
    for (int k = lowest; k <= highest; ++k) out[k - lowest] = lc[-k - (-highest)];
    return out;
}

}  // namespace

LogConnection lift_connection(const ExtensionDatum& ext) {
    validate_extension(ext);
    Window w = window_of(ext);
    RatFun phi = overlap_cocycle(ext);
    int top = phi.is_zero() ? w.inf_cut - 1
                            : std::max(-phi.ord_at_infinity(), w.inf_cut - 1);
    std::vector<Rat> phi_coeffs =
        infinity_expansion(phi, std::min(w.inf_cut, 0), top);
    auto phi_at = [&](int k) -> Rat {
        int lo = std::min(w.inf_cut, 0);
        if (k < lo || k > top) return Rat(0);
        return phi_coeffs[k - lo];
    };
    // gamma = sum c_q/(z-q) + sum d_t z^t must cancel every expansion
    // coefficient of phi at infinity from exponent inf_cut upward.
    RatFun gamma;
    for (int t = std::max(w.inf_cut, 0); t <= top; ++t)
        gamma -= RatFun(Poly::monomial(phi_at(t), t));
    std::vector<Rat> finite_points;
    for (const Point& q : ext.marked)
        if (!q.is_infinity()) finite_points.push_back(q.value());
    int nrows = std::max(0, -w.inf_cut);  // exponents inf_cut .. -1
    if (nrows > 0) {
        Matrix<Rat> aug(nrows, static_cast<int>(finite_points.size()) + 1);
        for (int r = 0; r < nrows; ++r) {
            int k = w.inf_cut + r;
            for (size_t c = 0; c < finite_points.size(); ++c)
                aug(r, static_cast<int>(c)) = rat_pow(finite_points[c], -k - 1);
            aug(r, static_cast<int>(finite_points.size())) = -phi_at(k);
        }
        auto pivots = rref(aug);
        std::vector<Rat> sol(finite_points.size(), Rat(0));
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == static_cast<int>(finite_points.size()))
                throw ObstructionNonzeroError(
                    "the obstruction class is nonzero; no lift exists");
            sol[pivots[r]] = aug(static_cast<int>(r),
                                 static_cast<int>(finite_points.size()));
        }
        for (size_t c = 0; c < finite_points.size(); ++c)
            gamma += RatFun(Poly(sol[c]),
                            Poly(std::vector<Rat>{-finite_points[c], Rat(1)}));
    }

    LogConnection out;
    out.rank = 2;
    out.genus = 0;
    out.marked = ext.marked;
    out.A = RatMatrix(2, 2);
    out.A(0, 0) = ext.d_sub;
    out.A(0, 1) = gamma;
    out.A(1, 1) = ext.d_quot;
    RatMatrix frame(2, 2);
    RatFun wvar(Poly::variable());
    frame(0, 0) = wvar.pow(-ext.a);
    frame(0, 1) = ext.u.substitute_inverse() * wvar.pow(-ext.b);
    frame(1, 1) = wvar.pow(-ext.b);
    out.set_frame(Point::infinity(), frame);

    std::string diag;
    if (!is_logarithmic(out, &diag))
        throw InternalAssertionFailure("lift is not logarithmic: " + diag);
    if (degree(out) != long(ext.a) + ext.b)
        throw InternalAssertionFailure("lift degree mismatch");
    return out;
}

long lift_space_dimension(const ExtensionDatum& ext) {
    validate_extension(ext);
    Window w = window_of(ext);
    long dim = std::max(0, w.inf_cut);  // monomials z^t, 0 <= t < inf_cut
    std::vector<Rat> finite_points;
    for (const Point& q : ext.marked)
        if (!q.is_infinity()) finite_points.push_back(q.value());
    int nrows = std::max(0, -w.inf_cut);
    Matrix<Rat> m(nrows, static_cast<int>(finite_points.size()));
    for (int r = 0; r < nrows; ++r) {
        int k = w.inf_cut + r;
        for (size_t c = 0; c < finite_points.size(); ++c)
            m(r, static_cast<int>(c)) = rat_pow(finite_points[c], -k - 1);
    }
    dim += static_cast<long>(finite_points.size()) - rank(m);
    return dim;
}

}  // namespace fuchsq
