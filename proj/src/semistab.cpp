#include "fuchsq/semistab.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsq {

std::pair<long, long> spacing_bounds(int n, int g, int sigma) {
    return {-long(n) - long(n) * n * (2L * g - 2 + sigma), 0L};
}

std::pair<LogConnection, long> normalize_twist(const LogConnection& conn, const Point& p) {
    long mu1 = splitting_type(conn).front();
    long ell = -mu1;
    return {twist(conn, ell, p), ell};
}

namespace {

bool in_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v) {
    const int n = static_cast<int>(v.size());
    Matrix<Rat> with(static_cast<int>(basis.size()) + 1, n);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < n; ++c) with(static_cast<int>(r), c) = basis[r][c];
    for (int c = 0; c < n; ++c) with(static_cast<int>(basis.size()), c) = v[c];
    return rank(with) == static_cast<int>(basis.size());
}

void require_spread_spectrum(const std::vector<Rat>& spectrum, long gap) {
    for (size_t i = 0; i < spectrum.size(); ++i)
        for (size_t j = i + 1; j < spectrum.size(); ++j) {
            Rat d = abs(spectrum[j] - spectrum[i]);
            if (d == 0)
                throw PreconditionError("residue spectrum at p is not simple");
            if (is_integer(d) && d < gap)
                throw PreconditionError(
                    "integer-difference eigenvalue pair closer than the required gap");
        }
}

}  // namespace

std::vector<Rat> choose_eigenvector(const LogConnection& conn, const Point& p) {
    auto st = splitting_type(conn);
    auto eigs = rational_spectrum(residue(conn, p).gamma);  // ascending
    if (st.front() > 0) throw NotNormalizedError("maximal splitting part is positive");
    if (st.front() < 0) return eigs.front().space.front();
    auto fiber = hn_max_sub_fiber(conn, p);
    for (const Eigenpair& ep : eigs)
        if (!in_span(fiber, ep.space.front())) return ep.space.front();
    throw NoEligibleEigenvectorError(
        "every eigenvector lies in the maximal-HN-sub fiber");
}

std::pair<LogConnection, StepLog> semistabilize(const LogConnection& conn, const Point& p) {
    if (conn.genus != 0) throw PreconditionError("genus must be 0");
    if (p.is_infinity()) throw InfinitePointError("working point must be finite");
    const long gap = required_gap(conn.rank, conn.genus, conn.sigma());
    require_spread_spectrum(residue_spectrum(conn, p), gap);
    auto bounds = spacing_bounds(conn.rank, conn.genus, conn.sigma());
    LogConnection cur = conn;
    long deg = degree(cur);
    if (deg > 0) throw PreconditionError("degree must be <= 0 after normalization");
    if (splitting_type(cur).front() != 0)
        throw NotNormalizedError("maximal splitting part is not 0");
    StepLog log;
    long stepno = 0;
    while (deg < 0) {
        if (deg < bounds.first)
            throw SpacingViolationError(
                "degree fell below the spacing bound (stabilized-subsheaf evidence)");
        std::vector<Rat> w = choose_eigenvector(cur, p);
        QMatrix gamma = residue(cur, p).gamma;
        std::vector<Rat> gw = gamma * w;
        int pivot = 0;
        while (w[pivot] == 0) ++pivot;
        Rat lambda = gw[pivot] / w[pivot];
        auto [next, rec] = elementary_transformation(cur, p, w);
        cur = std::move(next);
        ++deg;
        ++stepno;
        if (splitting_type(cur).front() != 0)
            throw InternalAssertionFailure("loop invariant broke: maximal part left 0");
        if (degree(cur) != deg)
            throw InternalAssertionFailure("degree did not increase by 1");
        log.steps.push_back({stepno, lambda, w, residue_spectrum(cur, p), deg});
    }
    auto st = splitting_type(cur);
    if (std::any_of(st.begin(), st.end(), [](int a) { return a != 0; }))
        throw InternalAssertionFailure("terminated without the trivial splitting type");
    return {std::move(cur), std::move(log)};
}

std::pair<std::map<Point, QMatrix>, RatMatrix> to_fuchsian(const LogConnection& conn) {
    if (conn.genus != 0) throw PreconditionError("genus must be 0");
    const int n = conn.rank;
    if (degree(conn) != 0)
        throw NotTrivialBundleError("degree is not 0");
    auto st = splitting_type(conn);
    if (std::any_of(st.begin(), st.end(), [](int a) { return a != 0; }))
        throw NotTrivialBundleError("splitting type is not all-zero");
    auto sections = global_sections(conn, 0);
    if (static_cast<int>(sections.size()) != n)
        throw InternalAssertionFailure("trivial bundle without a full section basis");
    RatMatrix v(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) v(i, j) = sections[j][i];
    RatFun detv = determinant(v);
    if (detv.is_zero() || !detv.is_constant())
        throw InternalAssertionFailure("section basis is not a global trivialization");
    RatMatrix vi = inverse(v);
    RatMatrix b = vi * conn.A * v + vi * derivative(v);
    std::map<Point, QMatrix> residues;
    RatMatrix reconstructed(n, n);
    for (const Point& q : conn.marked) {
        if (q.is_infinity()) continue;
        QMatrix bq(n, n);
        RatFun pole(Poly(1), Poly(std::vector<Rat>{-q.value(), Rat(1)}));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bq(i, j) = residue_at(b(i, j), q);
                reconstructed(i, j) += RatFun(bq(i, j)) * pole;
            }
        residues[q] = std::move(bq);
    }
    if (!(b == reconstructed))
        throw InternalAssertionFailure(
            "transformed matrix is not a sum of simple poles at the marked points");
    if (!conn.is_marked(Point::infinity())) {
        QMatrix total(n, n);
        for (const auto& [q, bq] : residues) total = total + bq;
        if (!total.is_zero())
            throw InternalAssertionFailure(
                "finite residues do not cancel although infinity is unmarked");
    }
    return {std::move(residues), std::move(v)};
}

PipelineReport pipeline(const LogConnection& conn, const Point& p) {
    if (conn.genus != 0) throw PreconditionError("genus must be 0");
    if (p.is_infinity()) throw InfinitePointError("working point must be finite");
    if (!conn.is_marked(p)) throw PreconditionError("working point must be marked");
    PipelineReport report;
    {
        std::ostringstream os;
        os << "rank=" << conn.rank << " sigma=" << conn.sigma()
           << " degree=" << degree(conn);
        report.input_summary = os.str();
    }
    const long gap = required_gap(conn.rank, conn.genus, conn.sigma());
    auto [spread, glog] = run_gabber(conn, p, gap);
    report.gabber_log = std::move(glog);
    auto [normalized, ell] = normalize_twist(spread, p);
    report.normalization_twist = ell;
    auto bounds = spacing_bounds(conn.rank, conn.genus, conn.sigma());
    long deg = degree(normalized);
    if (deg < bounds.first || deg > bounds.second)
        throw SpacingViolationError(
            "post-normalization degree outside the spacing window "
            "(stabilized-subsheaf evidence)");
    auto [trivial, slog] = semistabilize(normalized, p);
    report.semistab_log = std::move(slog);
    report.final_splitting = splitting_type(trivial);
    auto [residues, v] = to_fuchsian(trivial);
    report.fuchsian_residues = residues;
    report.gauge = v;
    LogConnection out;
    out.rank = conn.rank;
    out.genus = 0;
    out.marked = conn.marked;
    out.A = RatMatrix(conn.rank, conn.rank);
    for (const auto& [q, bq] : residues) {
        RatFun pole(Poly(1), Poly(std::vector<Rat>{-q.value(), Rat(1)}));
        for (int i = 0; i < conn.rank; ++i)
            for (int j = 0; j < conn.rank; ++j)
                out.A(i, j) += RatFun(bq(i, j)) * pole;
    }
    report.output = out;

    auto all_zero = [](const std::vector<int>& st) {
        return std::all_of(st.begin(), st.end(), [](int a) { return a == 0; });
    };
    report.checks.emplace_back("final splitting type all zero",
                               all_zero(report.final_splitting));
    report.checks.emplace_back("final degree zero", degree(trivial) == 0);
    report.checks.emplace_back("fuchs relation on the output",
                               fuchs_degree(out) == Rat(0));
    report.checks.emplace_back("output is logarithmic", is_logarithmic(out));
    report.checks.emplace_back(
        "gauge equivalence to the input off p",
        verify_gauge_equivalence(conn, out, v, p));
    bool spectra_ok = true;
    for (const Point& q : conn.marked)
        if (!(q == p) && residue_spectrum(conn, q) != residue_spectrum(out, q))
            spectra_ok = false;
    report.checks.emplace_back("residue spectra away from p preserved", spectra_ok);
    for (const auto& [name, ok] : report.checks)
        if (!ok) throw InternalAssertionFailure("pipeline check failed: " + name);
    return report;
}

}  // namespace fuchsq
