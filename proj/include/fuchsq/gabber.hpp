#ifndef FUCHSQ_GABBER_HPP
#define FUCHSQ_GABBER_HPP

#include "fuchsq/moves.hpp"

namespace fuchsq {

// Integer-difference classes of a rational spectrum, each sorted ascending;
// classes ordered by (fractional part of minimum, minimum).
struct EigenClassPartition {
    std::vector<std::vector<Rat>> classes;
};

struct PlanItem {
    int cls = 0;        // class index
    int index = 0;      // element index within the class (0-based)
    long reduction = 0; // how many unit eigenvalue shifts to apply
};

struct TransformationPlan {
    std::vector<PlanItem> items;
    long total_steps = 0;
};

struct StepRecord {
    long step = 0;
    Rat eigenvalue_before;
    std::vector<Rat> eigenvector;
    std::vector<Rat> spectrum_after;
    long degree_after = 0;
};

struct StepLog {
    std::vector<StepRecord> steps;
};

// M* = max(1, N + N^2 (2g - 2 + sigma)).
long required_gap(int n, int g, int sigma);

EigenClassPartition partition_classes(std::vector<Rat> spectrum);

// Within each class of size m, element i (0-based) is lowered by (m-1-i)*M
// unit steps; total = sum m(m-1)/2 * M.
TransformationPlan plan_schedule(const EigenClassPartition& partition, long gap);

// Eigenvalue spreading at p: after the run the residue spectrum at p is
// simple and every integer-difference pair is separated by at least `gap`.
std::pair<LogConnection, StepLog> run_gabber(const LogConnection& conn, const Point& p,
                                             long gap);

}  // namespace fuchsq

#endif
