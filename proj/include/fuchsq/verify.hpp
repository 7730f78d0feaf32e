#ifndef FUCHSQ_VERIFY_HPP
#define FUCHSQ_VERIFY_HPP

#include "fuchsq/logconn.hpp"

namespace fuchsq {

// One eigenvalue selection flagged by the screen: r eigenvalues per marked
// point whose grand total is an integer.
struct FlaggedSelection {
    int rank = 0;                             // r
    std::vector<std::vector<Rat>> choices;    // one multiset per marked point
    Rat total;
};

struct ScreenReport {
    bool certified = false;
    std::vector<FlaggedSelection> flagged;
};

// True iff nabla maps the span of the generators into itself over Q(z)
// (an invariant subsheaf candidate check).
bool check_invariant_subsheaf(const LogConnection& conn,
                              const std::vector<Section>& generators);

// Rank-1 residue bookkeeping: the residue sum equals -degree, and with a
// single marked point the lone residue is that integer.
bool residue_integrality_rank1(const LogConnection& conn);

// Necessary-condition certificate: no choice of r residue eigenvalues per
// marked point (r < N) sums to an integer.
ScreenReport irreducibility_screen(const LogConnection& conn);

}  // namespace fuchsq

#endif
