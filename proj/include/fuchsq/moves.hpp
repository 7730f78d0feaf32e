#ifndef FUCHSQ_MOVES_HPP
#define FUCHSQ_MOVES_HPP

#include "fuchsq/logconn.hpp"

namespace fuchsq {

// Audit trail of elementary transformations performed at one point.
struct GaugeStep {
    Rat eigenvalue;
    std::vector<Rat> eigenvector;  // in the local frame at p
    QMatrix completion;            // C: eigenvector first, pivot-skip basis after
};

struct GaugeRecord {
    Point point;
    std::vector<GaugeStep> steps;
    RatMatrix cumulative_gauge;  // ordered product of C * diag((z-p)^{-1}, 1, ..., 1)
};

// The frame factor of one elementary transformation.
RatMatrix elementary_gauge_factor(const QMatrix& completion, const Point& p);

// Deterministic completion of w to a basis: w first, then standard basis
// vectors in index order, skipping the index of w's first nonzero entry.
QMatrix completion_matrix(const std::vector<Rat>& w);

// Elementary G-transformation at the finite point p along the eigenvector w
// (in the local frame at p) of the residue there.  Degree goes up by 1; the
// chosen eigenvalue drops by 1 in the residue spectrum at p.
std::pair<LogConnection, GaugeRecord> elementary_transformation(
    const LogConnection& conn, const Point& p, const std::vector<Rat>& w);

// Same frame update without the eigenvector check (for negative testing).
std::pair<LogConnection, GaugeRecord> elementary_transformation_unchecked(
    const LogConnection& conn, const Point& p, const std::vector<Rat>& w);

// Bookkeeping predictor: one copy of lambda replaced by lambda - 1.
std::vector<Rat> spectrum_after(std::vector<Rat> spectrum, const Rat& lambda);

// True iff a and b coincide away from p through the gauge h: either b's
// generic matrix is h^{-1} A_a h + h^{-1} h' (retrivialization), or the
// generic matrices agree and b's frame at p is a's frame times h (frame
// update); in both modes all frames away from p must match and det(h) must
// be c * (z-p)^k.
bool verify_gauge_equivalence(const LogConnection& a, const LogConnection& b,
                              const RatMatrix& h, const Point& p,
                              std::string* diagnostic = nullptr);

}  // namespace fuchsq

#endif
