#ifndef FUCHSQ_SEMISTAB_HPP
#define FUCHSQ_SEMISTAB_HPP

#include "fuchsq/gabber.hpp"

namespace fuchsq {

struct PipelineReport {
    std::string input_summary;
    StepLog gabber_log;
    long normalization_twist = 0;
    StepLog semistab_log;
    std::vector<int> final_splitting;
    std::map<Point, QMatrix> fuchsian_residues;  // finite marked points
    RatMatrix gauge;                             // retrivialization V
    std::vector<std::pair<std::string, bool>> checks;
    LogConnection output;                        // Fuchsian system on the trivial bundle
};

// Degree window (-N - N^2 (2g-2+sigma), 0) of the induction.
std::pair<long, long> spacing_bounds(int n, int g, int sigma);

// Twist at p so the maximal splitting part becomes exactly 0; returns the
// twist amount.
std::pair<LogConnection, long> normalize_twist(const LogConnection& conn, const Point& p);

// The eigenvector of the smallest admissible eigenvalue of the residue at p:
// smallest overall when every splitting part is negative, otherwise the
// smallest whose eigenvector avoids the maximal-HN-sub fiber.
std::vector<Rat> choose_eigenvector(const LogConnection& conn, const Point& p);

// Raise the degree to 0 by elementary transformations at p, keeping the
// maximal splitting part at 0; ends on the trivial bundle.
std::pair<LogConnection, StepLog> semistabilize(const LogConnection& conn, const Point& p);

// Rewrite a degree-0 trivial-bundle connection in a global section basis V:
// the result is exactly sum of B_q/(z-q) over finite marked q.
std::pair<std::map<Point, QMatrix>, RatMatrix> to_fuchsian(const LogConnection& conn);

// Full chain: gabber -> normalize -> semistabilize -> fuchsian form.
PipelineReport pipeline(const LogConnection& conn, const Point& p);

}  // namespace fuchsq

#endif
