#ifndef FUCHSQ_LOGCONN_HPP
#define FUCHSQ_LOGCONN_HPP

#include <map>
#include <string>
#include <vector>

#include "fuchsq/matrix.hpp"

namespace fuchsq {

// Logarithmic connection nabla = d + A(z)dz on a rank-N bundle over P^1,
// modelled by a generic trivialization plus local frames (lattices) at
// finitely many points.  The frame stored at a finite point q is a matrix in
// z; the frame stored at infinity is a matrix in the local coordinate
// w = 1/z.  An absent frame means the standard lattice.
struct LogConnection {
    int rank = 0;
    int genus = 0;
    std::vector<Point> marked;          // sorted, distinct
    RatMatrix A;                        // N x N
    std::map<Point, RatMatrix> frames;  // identity frames are never stored

    int sigma() const { return static_cast<int>(marked.size()); }
    bool is_marked(const Point& q) const;
    // nullptr = identity frame.
    const RatMatrix* frame(const Point& q) const;
    // Canonical insertion: drops identity frames so equality is structural.
    void set_frame(const Point& q, RatMatrix g);

    bool operator==(const LogConnection& o) const;
};

struct ResidueData {
    Point point;
    QMatrix gamma;
};

struct SlopeProfile {
    // (slope, multiplicity), strictly decreasing slopes.
    std::vector<std::pair<Rat, int>> slopes;
};

// A section of E (or of E(m*infinity)) as a vector of rational functions of z.
using Section = std::vector<RatFun>;

// The connection matrix rewritten in the chart at infinity: -A(1/w)/w^2.
RatMatrix infinity_chart(const RatMatrix& a);

// g^{-1} A g + g^{-1} g' in the local frame at q (in w at infinity).
RatMatrix localized_matrix(const LogConnection& conn, const Point& q);

// Entrywise residue of the localized matrix; NotLogarithmic on a pole of
// order > 1 at q.
ResidueData residue(const LogConnection& conn, const Point& q);
std::vector<Rat> residue_spectrum(const LogConnection& conn, const Point& q);

// True iff the localized matrix has pole order <= 1 at every marked point
// and is regular at every other point (including infinity and all framed
// points).  On failure, *diagnostic names the offending point.
bool is_logarithmic(const LogConnection& conn, std::string* diagnostic = nullptr);

// deg E = -sum over framed points q of ord_q(det g_q).
long degree(const LogConnection& conn);

// -sum over marked q of trace(residue(q)); equals degree on consistent models.
Rat fuchs_degree(const LogConnection& conn);

// Basis of H^0(E(m*infinity)), deterministic (RREF-normalized coefficients).
std::vector<Section> global_sections(const LogConnection& conn, int m);

// Birkhoff-Grothendieck multiset {a_1 >= ... >= a_N}, recovered from the
// h^0 profile; InternalInconsistency if the profile matches no multiset.
std::vector<int> splitting_type(const LogConnection& conn);

SlopeProfile hn_slopes(const LogConnection& conn);

// Basis (RREF) of the fiber at q of the maximal-slope HN subbundle, valid
// when the maximal slope is exactly 0 (NotNormalized otherwise).
std::vector<std::vector<Rat>> hn_max_sub_fiber(const LogConnection& conn, const Point& q);

// E(ell * p): frame at p multiplied by (z-p)^{-ell}.
LogConnection twist(const LogConnection& conn, long ell, const Point& p);

}  // namespace fuchsq

#endif
