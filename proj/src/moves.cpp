#include "fuchsq/moves.hpp"

#include <algorithm>

namespace fuchsq {

namespace {

int pivot_index(const std::vector<Rat>& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) return static_cast<int>(i);
    return -1;
}

std::pair<LogConnection, GaugeRecord> apply_step(const LogConnection& conn, const Point& p,
                                                 const std::vector<Rat>& w,
                                                 const Rat& eigenvalue) {
    QMatrix c = completion_matrix(w);
    RatMatrix s = elementary_gauge_factor(c, p);
    LogConnection out = conn;
    const RatMatrix* g = conn.frame(p);
    out.set_frame(p, g ? *g * s : s);
    GaugeRecord rec{p, {GaugeStep{eigenvalue, w, c}}, s};
    return {std::move(out), std::move(rec)};
}

}  // namespace

QMatrix completion_matrix(const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    int pivot = pivot_index(w);
    if (pivot < 0) throw NotEigenvectorError("zero vector cannot be an eigenvector");
    QMatrix c(n, n);
    for (int i = 0; i < n; ++i) c(i, 0) = w[i];
    int col = 1;
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        c(j, col++) = 1;
    }
    return c;
}

RatMatrix elementary_gauge_factor(const QMatrix& completion, const Point& p) {
    if (p.is_infinity())
        throw InfinitePointError("elementary transformation point must be finite");
    RatMatrix s = lift_to_ratfun(completion);
    RatFun inv(Poly(1), Poly(std::vector<Rat>{-p.value(), Rat(1)}));
    for (int i = 0; i < s.rows(); ++i) s(i, 0) = s(i, 0) * inv;
    return s;
}

std::pair<LogConnection, GaugeRecord> elementary_transformation(
    const LogConnection& conn, const Point& p, const std::vector<Rat>& w) {
    if (p.is_infinity())
        throw InfinitePointError("elementary transformation point must be finite");
    QMatrix gamma = residue(conn, p).gamma;  // also rejects non-logarithmic input
    int pivot = pivot_index(w);
    if (pivot < 0) throw NotEigenvectorError("zero vector cannot be an eigenvector");
    std::vector<Rat> gw = gamma * w;
    Rat lambda = gw[pivot] / w[pivot];
    for (size_t i = 0; i < w.size(); ++i)
        if (gw[i] != lambda * w[i])
            throw NotEigenvectorError("vector is not an eigenvector of the residue at " +
                                      p.to_string());
    return apply_step(conn, p, w, lambda);
}

std::pair<LogConnection, GaugeRecord> elementary_transformation_unchecked(
    const LogConnection& conn, const Point& p, const std::vector<Rat>& w) {
    if (p.is_infinity())
        throw InfinitePointError("elementary transformation point must be finite");
    if (pivot_index(w) < 0)
        throw NotEigenvectorError("zero vector cannot be an eigenvector");
    return apply_step(conn, p, w, Rat(0));
}

std::vector<Rat> spectrum_after(std::vector<Rat> spectrum, const Rat& lambda) {
    auto it = std::find(spectrum.begin(), spectrum.end(), lambda);
    if (it == spectrum.end())
        throw NotInSpectrumError("eigenvalue " + rat_to_string(lambda) +
                                 " is not in the spectrum");
    *it = lambda - 1;
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

namespace {

// det(h) = c * (z-p)^k for some nonzero constant c?
bool det_is_power_of_center(const RatFun& det, const Rat& p) {
    Poly n = det.num().shift(p);
    Poly d = det.den().shift(p);
    auto is_monomial = [](const Poly& q) {
        for (int k = 0; k < q.degree(); ++k)
            if (q.coeff(k) != 0) return false;
        return true;
    };
    return is_monomial(n) && is_monomial(d);
}

bool frames_match_off_p(const LogConnection& a, const LogConnection& b, const Point& p,
                        std::string* diagnostic) {
    std::vector<Point> pts;
    for (const auto& [q, g] : a.frames) pts.push_back(q);
    for (const auto& [q, g] : b.frames) pts.push_back(q);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point& q : pts) {
        if (q == p) continue;
        const RatMatrix* ga = a.frame(q);
        const RatMatrix* gb = b.frame(q);
        RatMatrix id = RatMatrix::identity(a.rank);
        if ((ga ? *ga : id) == (gb ? *gb : id)) continue;
        if (diagnostic) *diagnostic = "frame mismatch at " + q.to_string();
        return false;
    }
    return true;
}

}  // namespace

bool verify_gauge_equivalence(const LogConnection& a, const LogConnection& b,
                              const RatMatrix& h, const Point& p,
                              std::string* diagnostic) {
    if (a.rank != b.rank || a.marked != b.marked) {
        if (diagnostic) *diagnostic = "rank or marked-set mismatch";
        return false;
    }
    RatFun det = determinant(h);
    if (det.is_zero()) {
        if (diagnostic) *diagnostic = "gauge is singular";
        return false;
    }
    if (!p.is_infinity() && !det_is_power_of_center(det, p.value())) {
        if (diagnostic) *diagnostic = "det(gauge) is not c*(z-p)^k";
        return false;
    }
    if (!frames_match_off_p(a, b, p, diagnostic)) return false;
    RatMatrix hi = inverse(h);
    // Mode 1: b is a retrivialization of a by h.
    if (b.A == hi * a.A * h + hi * derivative(h)) return true;
    // Mode 2: same generic matrix, frame updated at p.
    if (a.A == b.A) {
        const RatMatrix* ga = a.frame(p);
        const RatMatrix* gb = b.frame(p);
        RatMatrix id = RatMatrix::identity(a.rank);
        if ((gb ? *gb : id) == (ga ? *ga : id) * h) return true;
        if (diagnostic) *diagnostic = "frame at p does not equal old frame times gauge";
        return false;
    }
    if (diagnostic) *diagnostic = "generic matrices are not gauge-related by h";
    return false;
}

}  // namespace fuchsq
