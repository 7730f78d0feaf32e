#include "fuchsq/construct.hpp"

#include <algorithm>

namespace fuchsq {

namespace {

QMatrix matrix_power(const QMatrix& m, int e) {
    QMatrix r = QMatrix::identity(m.rows());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

void check_nilpotent_pair(const NilpotentPair& p, int n) {
    for (const QMatrix* m : {&p.m1, &p.m2}) {
        if (!matrix_power(*m, n).is_zero())
            throw InternalAssertionFailure("matrix is not nilpotent of order N");
        if (matrix_power(*m, n - 1).is_zero())
            throw InternalAssertionFailure("matrix is not a single Jordan block");
    }
    // Eigenvector line of m1 vs ker(m2^{N-1}).
    auto line = kernel_basis(p.m1);
    if (line.size() != 1)
        throw InternalAssertionFailure("m1 does not have a unique eigenvector line");
    std::vector<Rat> image = matrix_power(p.m2, n - 1) * line.front();
    if (std::all_of(image.begin(), image.end(), [](const Rat& x) { return x == 0; }))
        throw InternalAssertionFailure("eigenvector of m1 lies in ker(m2^{N-1})");
}

}  // namespace

NilpotentPair nilpotent_pair(int n) {
    if (n < 2) throw RankTooSmallError("rank must be at least 2");
    NilpotentPair p{QMatrix(n, n), QMatrix(n, n)};
    for (int i = 0; i + 1 < n; ++i) {
        p.m1(i, i + 1) = 1;
        p.m2(i + 1, i) = 1;
    }
    check_nilpotent_pair(p, n);
    return p;
}

Rat default_scale(int n) {
    if (n == 2) return Rat(1, 4);
    if (n == 3) return Rat(343, 288);
    return Rat(1, 4);
}

LogConnection irreducible_fuchsian(int n, const Point& q1, const Point& q2,
                                   const Point& p, const Rat& scale) {
    for (const Point* q : {&q1, &q2, &p})
        if (q->is_infinity()) throw InfinitePointError("marked points must be finite");
    if (q1 == q2 || q1 == p || q2 == p)
        throw PreconditionError("marked points must be distinct");
    NilpotentPair pair = nilpotent_pair(n);
    QMatrix r1 = pair.m1;
    QMatrix r2 = pair.m2;
    // A pure shift pair makes the balancing matrix's characteristic polynomial
    // an odd/even split with a forced zero root for odd N; the corner entry
    // restores the chance of a simple rational spectrum.
    if (n >= 3) r2(n - 1, 0) = 1;
    r2 = r2 * scale;
    QMatrix r3(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r3(i, j) = -(r1(i, j) + r2(i, j));

    LogConnection conn;
    conn.rank = n;
    conn.genus = 0;
    conn.marked = {q1, q2, p};
    std::sort(conn.marked.begin(), conn.marked.end());
    conn.A = RatMatrix(n, n);
    auto add_pole = [&](const QMatrix& r, const Point& q) {
        RatFun pole(Poly(1), Poly(std::vector<Rat>{-q.value(), Rat(1)}));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) conn.A(i, j) += RatFun(r(i, j)) * pole;
    };
    add_pole(r1, q1);
    add_pole(r2, q2);
    add_pole(r3, p);

    ScreenReport screen = irreducibility_screen(conn);  // NonRationalSpectrum may escape
    if (!screen.certified)
        throw ScreenFailedError(
            "scale " + rat_to_string(scale) +
            " produced an integer-summing eigenvalue selection; pick another scale");
    return conn;
}

}  // namespace fuchsq
