#include "fuchsq/verify.hpp"

#include <algorithm>

namespace fuchsq {

namespace {

Matrix<RatFun> columns_matrix(const std::vector<Section>& cols, int n) {
    Matrix<RatFun> m(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    return m;
}

// Distinct r-element sub-multisets of a sorted multiset.
void sub_multisets(const std::vector<Rat>& sorted, int r, size_t from,
                   std::vector<Rat>& cur, std::vector<std::vector<Rat>>& out) {
    if (r == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i + r <= sorted.size() + 0u; ++i) {
        if (i > from && sorted[i] == sorted[i - 1]) continue;
        cur.push_back(sorted[i]);
        sub_multisets(sorted, r - 1, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool check_invariant_subsheaf(const LogConnection& conn,
                              const std::vector<Section>& generators) {
    const int n = conn.rank;
    Matrix<RatFun> gens = columns_matrix(generators, n);
    int r = rank(gens);
    if (r == 0) throw ZeroSubsheafError("generators span the zero subsheaf");
    if (r >= n) throw FullRankError("generators span the full space");
    for (const Section& v : generators) {
        Section image(n, RatFun(0));
        for (int i = 0; i < n; ++i) {
            image[i] = v[i].derivative();
            for (int k = 0; k < n; ++k) image[i] += conn.A(i, k) * v[k];
        }
        std::vector<Section> extended = generators;
        extended.push_back(image);
        if (rank(columns_matrix(extended, n)) != r) return false;
    }
    return true;
}

bool residue_integrality_rank1(const LogConnection& conn) {
    if (conn.rank != 1) throw NotRankOneError("connection is not rank 1");
    const long deg = degree(conn);
    Rat sum(0);
    for (const Point& q : conn.marked) sum += residue(conn, q).gamma(0, 0);
    if (sum != Rat(-deg)) return false;
    if (conn.sigma() == 1) {
        Rat r = residue(conn, conn.marked.front()).gamma(0, 0);
        if (!is_integer(r) || r != Rat(-deg)) return false;
    }
    return true;
}

ScreenReport irreducibility_screen(const LogConnection& conn) {
    const int n = conn.rank;
    std::vector<std::vector<Rat>> spectra;
    for (const Point& q : conn.marked) spectra.push_back(residue_spectrum(conn, q));
    ScreenReport report;
    for (int r = 1; r < n; ++r) {
        // Per-point distinct r-sub-multisets.
        std::vector<std::vector<std::vector<Rat>>> options;
        for (const auto& spec : spectra) {
            std::vector<std::vector<Rat>> subs;
            std::vector<Rat> cur;
            sub_multisets(spec, r, 0, cur, subs);
            options.push_back(std::move(subs));
        }
        std::vector<size_t> idx(options.size(), 0);
        while (true) {
            Rat total(0);
            std::vector<std::vector<Rat>> choice;
            for (size_t q = 0; q < options.size(); ++q) {
                choice.push_back(options[q][idx[q]]);
                for (const Rat& x : options[q][idx[q]]) total += x;
            }
            if (is_integer(total))
                report.flagged.push_back({r, std::move(choice), total});
            size_t q = 0;
            while (q < idx.size() && ++idx[q] == options[q].size()) idx[q++] = 0;
            if (q == idx.size()) break;
        }
    }
    report.certified = report.flagged.empty();
    return report;
}

}  // namespace fuchsq
