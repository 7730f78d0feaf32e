#ifndef FUCHSQ_EXTENSION_HPP
#define FUCHSQ_EXTENSION_HPP

#include "fuchsq/logconn.hpp"

namespace fuchsq {

// Extension 0 -> S -> E -> Q -> 0 of line bundles on P^1 in the two-chart
// model: S = O(a), Q = O(b), both trivialized over the affine chart, glued at
// infinity by z^a and z^b.  The extension class is the overlap cochain u
// (regular away from 0 and infinity), the connections on S and Q are the
// one-form coefficients d_S, d_Q on the affine chart with log poles in the
// marked set.
struct ExtensionDatum {
    int a = 0;
    int b = 0;
    std::vector<Point> marked;  // sorted, distinct
    RatFun u;                   // Cech 1-cochain in H^1(O(a-b)), poles only at 0/inf
    RatFun d_sub;               // connection form of S
    RatFun d_quot;              // connection form of Q

    int sigma() const { return static_cast<int>(marked.size()); }
    bool is_marked(const Point& q) const;
};

// ValidationError unless u and the two connection forms have legal poles and
// each line bundle's residue bookkeeping matches its degree.
void validate_extension(const ExtensionDatum& ext);

// Canonical representative of the obstruction du in
// H^1(Omega^1(log marked) tensor O(a-b)): coefficients of z^k dz for k in the
// window no chart can absorb, reduced modulo the classes of log poles at the
// finite marked points away from 0.  Empty == zero class == liftable.
struct ObstructionClass {
    int lowest = 0;  // exponent of the first coefficient
    std::vector<Rat> coefficients;  // all zero iff the class vanishes

    bool is_zero() const;
};

ObstructionClass obstruction_class(const ExtensionDatum& ext);

// Rank-2 logarithmic connection on the extension bundle restricting to d_S on
// the sub and inducing d_Q on the quotient; ObstructionNonzero when no lift
// exists.
LogConnection lift_connection(const ExtensionDatum& ext);

// dim H^0(Omega^1(log marked) tensor O(a-b)) = max(0, a-b+sigma-1), computed
// by exact section enumeration.
long lift_space_dimension(const ExtensionDatum& ext);

}  // namespace fuchsq

#endif
