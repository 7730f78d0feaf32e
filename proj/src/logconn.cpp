#include "fuchsq/logconn.hpp"

#include <algorithm>
#include <map>

namespace fuchsq {

namespace {

// Local coordinate of q: z - q at a finite point, w at infinity.
Rat local_center(const Point& q) { return q.is_infinity() ? Rat(0) : q.value(); }

int min_ord(const RatMatrix& m, const Rat& at) {
    int best = kOrdInfinite;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::min(best, m(i, j).ord_at(at));
    return best;
}

RatMatrix substitute_inverse(const RatMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute_inverse();
    return r;
}

}  // namespace

bool LogConnection::is_marked(const Point& q) const {
    return std::binary_search(marked.begin(), marked.end(), q);
}

const RatMatrix* LogConnection::frame(const Point& q) const {
    auto it = frames.find(q);
    return it == frames.end() ? nullptr : &it->second;
}

void LogConnection::set_frame(const Point& q, RatMatrix g) {
    if (g == RatMatrix::identity(rank))
        frames.erase(q);
    else
        frames[q] = std::move(g);
}

bool LogConnection::operator==(const LogConnection& o) const {
    return rank == o.rank && genus == o.genus && marked == o.marked && A == o.A &&
           frames == o.frames;
}

RatMatrix infinity_chart(const RatMatrix& a) {
    RatFun w2inv(Poly(-1), Poly::monomial(Rat(1), 2));
    return substitute_inverse(a).map([&](const RatFun& f) { return f * w2inv; });
}

RatMatrix localized_matrix(const LogConnection& conn, const Point& q) {
    RatMatrix base = q.is_infinity() ? infinity_chart(conn.A) : conn.A;
    const RatMatrix* g = conn.frame(q);
    if (!g) return base;
    RatMatrix gi = inverse(*g);
    return gi * base * *g + gi * derivative(*g);
}

ResidueData residue(const LogConnection& conn, const Point& q) {
    RatMatrix local = localized_matrix(conn, q);
    Rat c = local_center(q);
    if (min_ord(local, c) < -1)
        throw NotLogarithmicError("pole of order > 1 at " + q.to_string());
    QMatrix gamma(conn.rank, conn.rank);
    for (int i = 0; i < conn.rank; ++i)
        for (int j = 0; j < conn.rank; ++j)
            gamma(i, j) = laurent_coefficients(local(i, j), Point(c), -1, -1)[0];
    return ResidueData{q, std::move(gamma)};
}

std::vector<Rat> residue_spectrum(const LogConnection& conn, const Point& q) {
    return spectrum_multiset(residue(conn, q).gamma);
}

bool is_logarithmic(const LogConnection& conn, std::string* diagnostic) {
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    // Points where a local frame or marking demands inspection.
    std::vector<Point> special = conn.marked;
    for (const auto& [q, g] : conn.frames) special.push_back(q);
    std::sort(special.begin(), special.end());
    special.erase(std::unique(special.begin(), special.end()), special.end());
    bool saw_infinity = false;
    for (const Point& q : special) {
        saw_infinity = saw_infinity || q.is_infinity();
        int allowed = conn.is_marked(q) ? -1 : 0;
        if (min_ord(localized_matrix(conn, q), local_center(q)) < allowed)
            return fail("pole of order > " + std::to_string(-allowed) + " at " +
                        q.to_string());
    }
    if (!saw_infinity &&
        min_ord(localized_matrix(conn, Point::infinity()), Rat(0)) < 0)
        return fail("pole at the unmarked point inf");
    // Any remaining pole of A sits at a point that is neither marked nor framed.
    for (int i = 0; i < conn.A.rows(); ++i)
        for (int j = 0; j < conn.A.cols(); ++j) {
            Poly d = conn.A(i, j).den();
            for (const Point& q : special)
                if (!q.is_infinity())
                    while (d.eval(q.value()) == 0)
                        d = d / Poly(std::vector<Rat>{-q.value(), Rat(1)});
            if (d.degree() > 0) return fail("pole at an unmarked, unframed point");
        }
    return true;
}

long degree(const LogConnection& conn) {
    long deg = 0;
    for (const auto& [q, g] : conn.frames)
        deg -= determinant(g).ord_at(local_center(q));
    return deg;
}

Rat fuchs_degree(const LogConnection& conn) {
    Rat total(0);
    for (const Point& q : conn.marked) {
        QMatrix gamma = residue(conn, q).gamma;
        for (int i = 0; i < conn.rank; ++i) total -= gamma(i, i);
    }
    return total;
}

std::vector<Section> global_sections(const LogConnection& conn, int m) {
    const int n = conn.rank;
    // Denominator allowance at each framed finite point.
    struct FiniteFrame {
        Rat q;
        RatMatrix ginv;
    };
    std::vector<FiniteFrame> ffs;
    Poly D(1);
    for (const auto& [pt, g] : conn.frames) {
        if (pt.is_infinity()) continue;
        int e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!g(i, j).is_zero()) e = std::max(e, -g(i, j).ord_at(pt.value()));
        if (e > 0)
            D = D * Poly(std::vector<Rat>{-pt.value(), Rat(1)}).pow(unsigned(e));
        ffs.push_back({pt.value(), inverse(g)});
    }
    int growth = 0;  // extra degree allowance from the frame at infinity
    const RatMatrix* ginf = conn.frame(Point::infinity());
    if (ginf) {
        growth = -kOrdInfinite;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(*ginf)(i, j).is_zero())
                    growth = std::max(growth, -(*ginf)(i, j).ord_at(Rat(0)));
    }
    const long bound = long(m) + D.degree() + growth;
    if (bound < 0) return {};
    const int T = static_cast<int>(bound);  // per-component degree cap
    const int ncols = n * (T + 1);
    auto column = [&](int k, int t) { return k * (T + 1) + t; };
    std::vector<std::vector<Rat>> rows;
    RatFun Dinv(Poly(1), D);
    Poly zvar = Poly::variable();
    // Lattice membership at each framed finite point.
    for (const auto& ff : ffs) {
        for (int i = 0; i < n; ++i) {
            std::vector<RatFun> h(n);
            int pole = 0;
            for (int k = 0; k < n; ++k) {
                h[k] = ff.ginv(i, k) * Dinv;
                if (!h[k].is_zero()) pole = std::max(pole, -h[k].ord_at(ff.q));
            }
            if (pole <= 0) continue;
            std::vector<std::vector<Rat>> local(pole, std::vector<Rat>(ncols, Rat(0)));
            for (int k = 0; k < n; ++k) {
                if (h[k].is_zero()) continue;
                for (int t = 0; t <= T; ++t) {
                    auto lc = laurent_coefficients(h[k] * RatFun(zvar).pow(t),
                                                   Point(ff.q), -pole, -1);
                    for (int r = 0; r < pole; ++r) local[r][column(k, t)] = lc[r];
                }
            }
            for (auto& r : local) rows.push_back(std::move(r));
        }
    }
    // Growth condition at infinity: w^m * ginf^{-1} * v(1/w) regular at w = 0.
    {
        RatMatrix gi = ginf ? inverse(*ginf) : RatMatrix::identity(n);
        RatFun wvar(Poly::variable());
        RatFun dw = RatFun(D).substitute_inverse();
        for (int i = 0; i < n; ++i) {
            std::vector<RatFun> base(n);
            int pole = 0;
            for (int k = 0; k < n; ++k) {
                base[k] = wvar.pow(m) * gi(i, k) / dw;
                if (!base[k].is_zero())
                    pole = std::max(pole, -base[k].ord_at(Rat(0)) + T);
            }
            if (pole <= 0) continue;
            std::vector<std::vector<Rat>> local(pole, std::vector<Rat>(ncols, Rat(0)));
            for (int k = 0; k < n; ++k) {
                if (base[k].is_zero()) continue;
                for (int t = 0; t <= T; ++t) {
                    auto lc = laurent_coefficients(base[k] * wvar.pow(-t),
                                                   Point(Rat(0)), -pole, -1);
                    for (int r = 0; r < pole; ++r) local[r][column(k, t)] = lc[r];
                }
            }
            for (auto& r : local) rows.push_back(std::move(r));
        }
    }
    Matrix<Rat> constraint(static_cast<int>(rows.size()), ncols);
    for (int r = 0; r < constraint.rows(); ++r)
        for (int c = 0; c < ncols; ++c) constraint(r, c) = rows[r][c];
    std::vector<Section> sections;
    for (const auto& x : kernel_basis(constraint)) {
        Section v(n);
        for (int k = 0; k < n; ++k) {
            std::vector<Rat> coeffs(T + 1);
            for (int t = 0; t <= T; ++t) coeffs[t] = x[column(k, t)];
            v[k] = RatFun(Poly(std::move(coeffs)), D);
        }
        sections.push_back(std::move(v));
    }
    return sections;
}

std::vector<int> splitting_type(const LogConnection& conn) {
    const int n = conn.rank;
    const long deg = degree(conn);
    std::map<int, int> h0_cache;
    auto h0 = [&](int m) {
        auto it = h0_cache.find(m);
        if (it != h0_cache.end()) return it->second;
        int v = static_cast<int>(global_sections(conn, m).size());
        h0_cache[m] = v;
        return v;
    };
    auto jump = [&](int m) { return h0(m) - h0(m - 1); };  // #{a_i >= -m}
    int hi = 0;
    while (jump(hi) < n) ++hi;
    int lo = hi;
    while (h0(lo) > 0) --lo;
    std::vector<int> parts;
    for (int m = lo + 1; m <= hi; ++m)
        for (int c = jump(m) - jump(m - 1); c > 0; --c) parts.push_back(-m);
    long sum = 0;
    for (int a : parts) sum += a;
    if (static_cast<int>(parts.size()) != n || sum != deg)
        throw InternalInconsistencyError("h^0 profile matches no splitting multiset");
    return parts;  // descending by construction
}

SlopeProfile hn_slopes(const LogConnection& conn) {
    SlopeProfile p;
    for (int a : splitting_type(conn)) {
        if (!p.slopes.empty() && p.slopes.back().first == Rat(a))
            ++p.slopes.back().second;
        else
            p.slopes.emplace_back(Rat(a), 1);
    }
    return p;
}

std::vector<std::vector<Rat>> hn_max_sub_fiber(const LogConnection& conn, const Point& q) {
    auto st = splitting_type(conn);
    if (st.empty() || st.front() != 0)
        throw NotNormalizedError("maximal slope is not 0");
    auto sections = global_sections(conn, 0);
    const int n = conn.rank;
    const RatMatrix* g = conn.frame(q);
    Matrix<Rat> stack(static_cast<int>(sections.size()), n);
    for (size_t s = 0; s < sections.size(); ++s) {
        Section v = sections[s];
        if (q.is_infinity())
            for (auto& f : v) f = f.substitute_inverse();
        if (g) {
            RatMatrix gi = inverse(*g);
            std::vector<RatFun> w(n, RatFun(0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) w[i] += gi(i, k) * v[k];
            v = std::move(w);
        }
        for (int i = 0; i < n; ++i) stack(static_cast<int>(s), i) = v[i].eval(local_center(q));
    }
    auto pivots = rref(stack);
    std::vector<std::vector<Rat>> basis;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Rat> row(n);
        for (int i = 0; i < n; ++i) row[i] = stack(static_cast<int>(r), i);
        basis.push_back(std::move(row));
    }
    return basis;
}

LogConnection twist(const LogConnection& conn, long ell, const Point& p) {
    if (p.is_infinity()) throw InfinitePointError("twist point must be finite");
    LogConnection out = conn;
    if (ell == 0) return out;
    RatFun factor =
        RatFun(Poly(std::vector<Rat>{-p.value(), Rat(1)})).pow(static_cast<int>(-ell));
    const RatMatrix* g = conn.frame(p);
    RatMatrix ng = g ? *g : RatMatrix::identity(conn.rank);
    out.set_frame(p, ng.map([&](const RatFun& f) { return f * factor; }));
    return out;
}

}  // namespace fuchsq
