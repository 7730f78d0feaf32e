#include "fuchsq/io.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsq {

namespace {

struct Lines {
    std::vector<std::string> lines;
    size_t next = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            // Trim trailing carriage returns and surrounding blanks.
            size_t b = line.find_first_not_of(" \t\r");
            size_t e = line.find_last_not_of(" \t\r");
            lines.push_back(b == std::string::npos ? std::string()
                                                   : line.substr(b, e - b + 1));
        }
    }

    std::string take(const char* what) {
        while (next < lines.size() && lines[next].empty()) ++next;
        if (next >= lines.size())
            throw ParseError(std::string("unexpected end of file, expected ") + what);
        return lines[next++];
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + s + "'");
    }
}

RatMatrix parse_matrix_rows(Lines& in, int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        auto row = tokens(in.take("matrix row"));
        if (static_cast<int>(row.size()) != n)
            throw ParseError("matrix row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) m(i, j) = parse_ratfun(row[j]);
    }
    return m;
}

std::string print_matrix_rows(const RatMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::vector<Point> parse_marked(const std::vector<std::string>& toks) {
    std::vector<Point> marked;
    for (size_t i = 1; i < toks.size(); ++i) marked.push_back(Point::from_string(toks[i]));
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
        throw ValidationError("marked points must be distinct");
    return marked;
}

void expect_keyword(const std::vector<std::string>& toks, const char* kw, size_t arity) {
    if (toks.empty() || toks[0] != kw || toks.size() != arity + 1)
        throw ParseError(std::string("expected '") + kw + "' line");
}

}  // namespace

LogConnection parse_instance(const std::string& text) {
    Lines in(text);
    if (in.take("header") != "fuchsq 1")
        throw ParseError("expected header 'fuchsq 1'");
    LogConnection conn;
    auto rank = tokens(in.take("rank"));
    expect_keyword(rank, "rank", 1);
    conn.rank = static_cast<int>(parse_long(rank[1], "rank"));
    if (conn.rank < 1) throw ValidationError("rank must be positive");
    auto genus = tokens(in.take("genus"));
    expect_keyword(genus, "genus", 1);
    conn.genus = static_cast<int>(parse_long(genus[1], "genus"));
    auto marked = tokens(in.take("marked"));
    if (marked.empty() || marked[0] != "marked")
        throw ParseError("expected 'marked' line");
    conn.marked = parse_marked(marked);
    if (in.take("A") != "A") throw ParseError("expected 'A' line");
    conn.A = parse_matrix_rows(in, conn.rank);
    for (std::string line = in.take("frame or end"); line != "end";
         line = in.take("frame or end")) {
        auto toks = tokens(line);
        expect_keyword(toks, "frame", 1);
        Point p = Point::from_string(toks[1]);
        if (conn.frames.count(p))
            throw ValidationError("duplicate frame at " + p.to_string());
        RatMatrix g = parse_matrix_rows(in, conn.rank);
        if (determinant(g).is_zero())
            throw ValidationError("frame at " + p.to_string() + " is singular");
        conn.set_frame(p, std::move(g));
    }
    std::string diag;
    if (!is_logarithmic(conn, &diag))
        throw ValidationError("connection is not logarithmic: " + diag);
    return conn;
}

std::string print_instance(const LogConnection& conn) {
    std::string out = "fuchsq 1\n";
    out += "rank " + std::to_string(conn.rank) + "\n";
    out += "genus " + std::to_string(conn.genus) + "\n";
    out += "marked";
    for (const Point& q : conn.marked) out += " " + q.to_string();
    out += "\nA\n" + print_matrix_rows(conn.A);
    for (const auto& [q, g] : conn.frames)
        out += "frame " + q.to_string() + "\n" + print_matrix_rows(g);
    out += "end\n";
    return out;
}

GaugeFile parse_gauge(const std::string& text) {
    Lines in(text);
    if (in.take("header") != "fuchsq-gauge 1")
        throw ParseError("expected header 'fuchsq-gauge 1'");
    auto pt = tokens(in.take("point"));
    expect_keyword(pt, "point", 1);
    auto size = tokens(in.take("size"));
    expect_keyword(size, "size", 1);
    int n = static_cast<int>(parse_long(size[1], "size"));
    GaugeFile gf{Point::from_string(pt[1]), parse_matrix_rows(in, n)};
    if (in.take("end") != "end") throw ParseError("expected 'end'");
    return gf;
}

std::string print_gauge(const Point& p, const RatMatrix& h) {
    std::string out = "fuchsq-gauge 1\n";
    out += "point " + p.to_string() + "\n";
    out += "size " + std::to_string(h.rows()) + "\n";
    out += print_matrix_rows(h);
    out += "end\n";
    return out;
}

ExtensionDatum parse_extension(const std::string& text) {
    Lines in(text);
    if (in.take("header") != "fuchsq-ext 1")
        throw ParseError("expected header 'fuchsq-ext 1'");
    ExtensionDatum ext;
    auto a = tokens(in.take("sub-degree"));
    expect_keyword(a, "sub-degree", 1);
    ext.a = static_cast<int>(parse_long(a[1], "sub-degree"));
    auto b = tokens(in.take("quot-degree"));
    expect_keyword(b, "quot-degree", 1);
    ext.b = static_cast<int>(parse_long(b[1], "quot-degree"));
    auto marked = tokens(in.take("marked"));
    if (marked.empty() || marked[0] != "marked")
        throw ParseError("expected 'marked' line");
    ext.marked = parse_marked(marked);
    auto u = tokens(in.take("cochain"));
    expect_keyword(u, "cochain", 1);
    ext.u = parse_ratfun(u[1]);
    auto ds = tokens(in.take("d-sub"));
    expect_keyword(ds, "d-sub", 1);
    ext.d_sub = parse_ratfun(ds[1]);
    auto dq = tokens(in.take("d-quot"));
    expect_keyword(dq, "d-quot", 1);
    ext.d_quot = parse_ratfun(dq[1]);
    if (in.take("end") != "end") throw ParseError("expected 'end'");
    validate_extension(ext);
    return ext;
}

std::string print_extension(const ExtensionDatum& ext) {
    std::string out = "fuchsq-ext 1\n";
    out += "sub-degree " + std::to_string(ext.a) + "\n";
    out += "quot-degree " + std::to_string(ext.b) + "\n";
    out += "marked";
    for (const Point& q : ext.marked) out += " " + q.to_string();
    out += "\ncochain " + to_string(ext.u) + "\n";
    out += "d-sub " + to_string(ext.d_sub) + "\n";
    out += "d-quot " + to_string(ext.d_quot) + "\n";
    out += "end\n";
    return out;
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += rat_to_string(v[i]);
    }
    return out;
}

std::string print_step_log(const StepLog& log) {
    std::string out = "steps " + std::to_string(log.steps.size()) + "\n";
    for (const StepRecord& s : log.steps) {
        out += "step " + std::to_string(s.step);
        out += " value " + rat_to_string(s.eigenvalue_before);
        out += " vector " + join_rats(s.eigenvector);
        out += " spectrum " + join_rats(s.spectrum_after);
        out += " degree " + std::to_string(s.degree_after) + "\n";
    }
    return out;
}

std::string print_screen_report(const ScreenReport& report) {
    std::string out = "screen-report\n";
    out += std::string("verdict ") + (report.certified ? "Certified" : "Inconclusive") +
           "\n";
    out += "flagged " + std::to_string(report.flagged.size()) + "\n";
    for (const FlaggedSelection& f : report.flagged) {
        out += "selection rank " + std::to_string(f.rank) + " total " +
               rat_to_string(f.total) + " choices";
        for (const auto& c : f.choices) out += " " + join_rats(c);
        out += "\n";
    }
    out += "end\n";
    return out;
}

std::string print_pipeline_report(const PipelineReport& report) {
    std::string out = "pipeline-report\n";
    out += "input " + report.input_summary + "\n";
    out += "gabber-steps " + std::to_string(report.gabber_log.steps.size()) + "\n";
    out += "twist " + std::to_string(report.normalization_twist) + "\n";
    out += "semistab-steps " + std::to_string(report.semistab_log.steps.size()) + "\n";
    out += "splitting ";
    for (size_t i = 0; i < report.final_splitting.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(report.final_splitting[i]);
    }
    out += "\n";
    for (const auto& [q, bq] : report.fuchsian_residues) {
        out += "residue " + q.to_string() + "\n";
        for (int i = 0; i < bq.rows(); ++i) {
            for (int j = 0; j < bq.cols(); ++j) {
                if (j) out += ' ';
                out += rat_to_string(bq(i, j));
            }
            out += '\n';
        }
    }
    out += "gauge\n" + print_matrix_rows(report.gauge);
    for (const auto& [name, ok] : report.checks)
        out += std::string("check ") + (ok ? "pass " : "fail ") + name + "\n";
    out += "end\n";
    return out;
}

std::string print_obstruction(const ObstructionClass& oc) {
    std::string out = "obstruction ";
    if (oc.coefficients.empty()) return out + "empty-window\n";
    out += "lowest " + std::to_string(oc.lowest) + " coefficients " +
           join_rats(oc.coefficients) + "\n";
    return out;
}

}  // namespace fuchsq
