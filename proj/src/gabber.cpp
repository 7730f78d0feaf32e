#include "fuchsq/gabber.hpp"

#include <algorithm>

namespace fuchsq {

long required_gap(int n, int g, int sigma) {
    long raw = long(n) + long(n) * n * (2L * g - 2 + sigma);
    return std::max(1L, raw);
}

EigenClassPartition partition_classes(std::vector<Rat> spectrum) {
    if (spectrum.empty()) throw PreconditionError("empty spectrum");
    std::sort(spectrum.begin(), spectrum.end());
    EigenClassPartition part;
    for (const Rat& v : spectrum) {
        bool placed = false;
        for (auto& cls : part.classes)
            if (is_integer(v - cls.front())) {
                cls.push_back(v);
                placed = true;
                break;
            }
        if (!placed) part.classes.push_back({v});
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
                  Rat fa = frac_part(a.front()), fb = frac_part(b.front());
                  if (fa != fb) return fa < fb;
                  return a.front() < b.front();
              });
    return part;
}

TransformationPlan plan_schedule(const EigenClassPartition& partition, long gap) {
    if (gap < 1) throw PreconditionError("gap must be >= 1");
    TransformationPlan plan;
    for (size_t j = 0; j < partition.classes.size(); ++j) {
        long m = static_cast<long>(partition.classes[j].size());
        for (long i = 0; i < m; ++i) {
            long r = (m - 1 - i) * gap;
            plan.items.push_back({static_cast<int>(j), static_cast<int>(i), r});
            plan.total_steps += r;
        }
    }
    return plan;
}

namespace {

// s^{-1} L s + s^{-1} s' for s = C * diag((z-p)^{-1}, 1, ..., 1), kept in
// closed form so the local matrix stays small while frames grow.
RatMatrix local_update(const RatMatrix& local, const QMatrix& completion, const Rat& p) {
    RatMatrix m =
        lift_to_ratfun(inverse(completion)) * local * lift_to_ratfun(completion);
    RatFun zp{Poly(std::vector<Rat>{-p, Rat(1)})};
    int n = m.rows();
    for (int j = 1; j < n; ++j) m(0, j) = m(0, j) * zp;
    for (int i = 1; i < n; ++i) m(i, 0) = m(i, 0) / zp;
    m(0, 0) = m(0, 0) - RatFun(1) / zp;
    return m;
}

QMatrix residue_of_local(const RatMatrix& local, const Rat& p) {
    QMatrix gamma(local.rows(), local.cols());
    for (int i = 0; i < local.rows(); ++i)
        for (int j = 0; j < local.cols(); ++j) {
            if (local(i, j).ord_at(p) < -1)
                throw InternalAssertionFailure("local matrix acquired a higher-order pole");
            gamma(i, j) = laurent_coefficients(local(i, j), Point(p), -1, -1)[0];
        }
    return gamma;
}

Poly poly_from_roots(const std::vector<Rat>& roots) {
    Poly p(1);
    for (const Rat& r : roots) p = p * Poly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

}  // namespace

std::pair<LogConnection, StepLog> run_gabber(const LogConnection& conn, const Point& p,
                                             long gap) {
    if (p.is_infinity()) throw InfinitePointError("working point must be finite");
    if (gap < 1) throw PreconditionError("gap must be >= 1");
    const Rat pc = p.value();
    const int n = conn.rank;
    std::vector<Rat> spectrum = residue_spectrum(conn, p);
    EigenClassPartition part = partition_classes(spectrum);
    TransformationPlan plan = plan_schedule(part, gap);
    const long degree0 = degree(conn);

    RatMatrix local = localized_matrix(conn, p);
    RatMatrix cumulative = RatMatrix::identity(n);
    StepLog log;
    long stepno = 0;
    for (const PlanItem& item : plan.items) {
        Rat value = part.classes[item.cls][item.index];
        for (long r = 0; r < item.reduction; ++r) {
            QMatrix gamma = residue_of_local(local, pc);
            QMatrix shifted = gamma;
            for (int i = 0; i < n; ++i) shifted(i, i) -= value;
            auto kb = kernel_basis(shifted);
            if (kb.empty())
                throw InternalAssertionFailure("scheduled eigenvalue lost its eigenvector");
            const std::vector<Rat>& w = kb.front();
            QMatrix c = completion_matrix(w);
            local = local_update(local, c, pc);
            cumulative = cumulative * elementary_gauge_factor(c, p);
            spectrum = spectrum_after(spectrum, value);
            ++stepno;
            if (char_poly(residue_of_local(local, pc)) != poly_from_roots(spectrum))
                throw InternalAssertionFailure(
                    "residue spectrum disagrees with the predicted multiset");
            log.steps.push_back({stepno, value, w, spectrum, degree0 + stepno});
            value -= 1;
        }
    }

    LogConnection out = conn;
    if (stepno > 0) {
        const RatMatrix* g = conn.frame(p);
        out.set_frame(p, g ? *g * cumulative : cumulative);
    }

    // Theorem conditions, checked exactly.
    std::vector<Rat> sorted = spectrum;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            Rat d = sorted[j] - sorted[i];
            if (d == 0)
                throw InternalAssertionFailure("output spectrum is not simple");
            if (is_integer(d) && d < gap)
                throw InternalAssertionFailure("integer-difference pair below the gap");
        }
    if (stepno != plan.total_steps ||
        2 * stepno > static_cast<long>(n) * n * n * gap)
        throw InternalAssertionFailure("step count exceeds the planned bound");
    if (degree(out) != degree0 + stepno)
        throw InternalAssertionFailure("degree did not increase by the step count");
    std::string diag;
    if (stepno > 0 && !verify_gauge_equivalence(conn, out, cumulative, p, &diag))
        throw InternalAssertionFailure("gauge equivalence check failed: " + diag);
    return {std::move(out), std::move(log)};
}

}  // namespace fuchsq
