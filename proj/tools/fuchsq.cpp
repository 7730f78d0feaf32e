#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fuchsq/construct.hpp"
#include "fuchsq/io.hpp"

namespace {

using namespace fuchsq;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

std::string splitting_to_string(const std::vector<int>& st) {
    std::string s;
    for (size_t i = 0; i < st.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(st[i]);
    }
    return s;
}

void cmd_inspect(const std::string& file) {
    LogConnection conn = parse_instance(read_file(file));
    std::cout << "rank " << conn.rank << "\n";
    std::cout << "genus " << conn.genus << "\n";
    std::cout << "marked";
    for (const Point& q : conn.marked) std::cout << " " << q.to_string();
    std::cout << "\n";
    std::cout << "degree " << degree(conn) << "\n";
    std::cout << "fuchs-degree " << rat_to_string(fuchs_degree(conn)) << "\n";
    std::cout << "splitting " << splitting_to_string(splitting_type(conn)) << "\n";
    std::cout << "hn-slopes";
    for (const auto& [mu, r] : hn_slopes(conn).slopes)
        std::cout << " " << rat_to_string(mu) << "x" << r;
    std::cout << "\n";
    for (const Point& q : conn.marked) {
        std::cout << "spectrum " << q.to_string() << " ";
        try {
            std::cout << join_rats(residue_spectrum(conn, q));
        } catch (const NonRationalSpectrumError&) {
            std::cout << "nonrational";
        }
        std::cout << "\n";
    }
}

void cmd_transform(const std::string& file, const std::string& point,
                   const std::string& eigenvalue, int which, const std::string& out,
                   const std::string& gauge_out) {
    LogConnection conn = parse_instance(read_file(file));
    Point p = Point::from_string(point);
    Rat lambda = rat_from_string(eigenvalue);
    auto eigs = rational_spectrum(residue(conn, p).gamma);
    const Eigenpair* match = nullptr;
    for (const auto& ep : eigs)
        if (ep.value == lambda) match = &ep;
    if (!match)
        throw NotInSpectrumError("eigenvalue " + eigenvalue +
                                 " is not in the residue spectrum at " + point);
    if (which < 0 || which >= static_cast<int>(match->space.size()))
        throw PreconditionError("--which is out of range for the eigenspace");
    auto [next, rec] = elementary_transformation(conn, p, match->space[which]);
    write_file(out, print_instance(next));
    write_file(gauge_out, print_gauge(p, rec.cumulative_gauge));
    std::cout << "degree " << degree(next) << "\n";
    std::cout << "spectrum " << p.to_string() << " "
              << join_rats(residue_spectrum(next, p)) << "\n";
}

void cmd_gabber(const std::string& file, const std::string& point, long gap,
                const std::string& out, const std::string& log_out) {
    LogConnection conn = parse_instance(read_file(file));
    Point p = Point::from_string(point);
    if (gap <= 0) gap = required_gap(conn.rank, conn.genus, conn.sigma());
    auto [next, log] = run_gabber(conn, p, gap);
    write_file(out, print_instance(next));
    write_file(log_out, print_step_log(log));
    std::cout << "gap " << gap << "\n";
    std::cout << "steps " << log.steps.size() << "\n";
    std::cout << "spectrum " << p.to_string() << " "
              << join_rats(residue_spectrum(next, p)) << "\n";
}

void cmd_semistabilize(const std::string& file, const std::string& point,
                       const std::string& out, const std::string& log_out) {
    LogConnection conn = parse_instance(read_file(file));
    Point p = Point::from_string(point);
    auto [normalized, ell] = normalize_twist(conn, p);
    auto [next, log] = semistabilize(normalized, p);
    write_file(out, print_instance(next));
    write_file(log_out, print_step_log(log));
    std::cout << "twist " << ell << "\n";
    std::cout << "steps " << log.steps.size() << "\n";
    std::cout << "splitting " << splitting_to_string(splitting_type(next)) << "\n";
}

void cmd_pipeline(const std::string& file, const std::string& point,
                  const std::string& out, const std::string& report_out) {
    LogConnection conn = parse_instance(read_file(file));
    Point p = Point::from_string(point);
    PipelineReport report = pipeline(conn, p);
    write_file(out, print_instance(report.output));
    write_file(report_out, print_pipeline_report(report));
    std::cout << print_pipeline_report(report);
}

void cmd_screen(const std::string& file) {
    LogConnection conn = parse_instance(read_file(file));
    std::cout << print_screen_report(irreducibility_screen(conn));
}

void cmd_verify_equiv(const std::string& file_a, const std::string& file_b,
                      const std::string& gauge_file, const std::string& point) {
    LogConnection a = parse_instance(read_file(file_a));
    LogConnection b = parse_instance(read_file(file_b));
    GaugeFile gf = parse_gauge(read_file(gauge_file));
    Point p = point.empty() ? gf.point : Point::from_string(point);
    std::string diag;
    if (verify_gauge_equivalence(a, b, gf.h, p, &diag))
        std::cout << "equivalent\n";
    else
        std::cout << "not-equivalent " << diag << "\n";
}

void cmd_lift_ext(const std::string& file, const std::string& out) {
    ExtensionDatum ext = parse_extension(read_file(file));
    ObstructionClass oc = obstruction_class(ext);
    std::cout << print_obstruction(oc);
    if (!oc.is_zero())
        throw ObstructionNonzeroError("the obstruction class is nonzero; no lift exists");
    LogConnection lift = lift_connection(ext);
    write_file(out, print_instance(lift));
    std::cout << "lift-degree " << degree(lift) << "\n";
    std::cout << "lift-space-dimension " << lift_space_dimension(ext) << "\n";
}

void cmd_construct(int rank, const std::string& points, const std::string& scale,
                   const std::string& out) {
    std::vector<Point> pts;
    std::istringstream in(points);
    std::string tok;
    while (std::getline(in, tok, ',')) pts.push_back(Point::from_string(tok));
    if (pts.size() != 3)
        throw ParseError("--points expects exactly three comma-separated points");
    Rat s = scale.empty() ? default_scale(rank) : rat_from_string(scale);
    LogConnection conn = irreducible_fuchsian(rank, pts[0], pts[1], pts[2], s);
    std::string text = print_instance(conn);
    if (out.empty())
        std::cout << text;
    else {
        write_file(out, text);
        std::cout << "scale " << rat_to_string(s) << "\n";
        std::cout << "written " << out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for logarithmic connections on P^1"};
    app.require_subcommand(1);

    std::string file, file_b, gauge_file, point, eigenvalue, out, log_out, gauge_out,
        report_out, points, scale;
    int which = 0, rank = 2;
    long gap = 0;

    auto* inspect = app.add_subcommand("inspect", "Summarize an instance file");
    inspect->add_option("file", file)->required();

    auto* transform =
        app.add_subcommand("transform", "Apply one elementary transformation");
    transform->add_option("file", file)->required();
    transform->add_option("--point", point)->required();
    transform->add_option("--eigenvalue", eigenvalue)->required();
    transform->add_option("--which", which);
    transform->add_option("-o,--output", out);
    transform->add_option("--gauge-out", gauge_out);

    auto* gabber = app.add_subcommand("gabber", "Spread the residue spectrum at a point");
    gabber->add_option("file", file)->required();
    gabber->add_option("--point", point)->required();
    gabber->add_option("--gap", gap);
    gabber->add_option("-o,--output", out);
    gabber->add_option("--log", log_out);

    auto* semistabilize =
        app.add_subcommand("semistabilize", "Normalize and raise the degree to 0");
    semistabilize->add_option("file", file)->required();
    semistabilize->add_option("--point", point)->required();
    semistabilize->add_option("-o,--output", out);
    semistabilize->add_option("--log", log_out);

    auto* pipeline = app.add_subcommand("pipeline", "Full reduction to Fuchsian form");
    pipeline->add_option("file", file)->required();
    pipeline->add_option("--point", point)->required();
    pipeline->add_option("-o,--output", out);
    pipeline->add_option("--report", report_out);

    auto* screen = app.add_subcommand("screen", "Irreducibility screen report");
    screen->add_option("file", file)->required();

    auto* verify_equiv =
        app.add_subcommand("verify-equiv", "Check gauge equivalence away from a point");
    verify_equiv->add_option("file_a", file)->required();
    verify_equiv->add_option("file_b", file_b)->required();
    verify_equiv->add_option("gauge_file", gauge_file)->required();
    verify_equiv->add_option("--point", point);

    auto* lift_ext = app.add_subcommand("lift-ext", "Obstruction class and lift");
    lift_ext->add_option("file", file)->required();
    lift_ext->add_option("-o,--output", out);

    auto* construct = app.add_subcommand("construct", "Generate a certified instance");
    construct->add_option("--rank", rank)->required();
    construct->add_option("--points", points)->required();
    construct->add_option("--scale", scale);
    construct->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*inspect) cmd_inspect(file);
        if (*transform)
            cmd_transform(file, point, eigenvalue, which,
                          out.empty() ? file + ".out" : out,
                          gauge_out.empty() ? file + ".gauge" : gauge_out);
        if (*gabber)
            cmd_gabber(file, point, gap, out.empty() ? file + ".out" : out,
                       log_out.empty() ? file + ".steps" : log_out);
        if (*semistabilize)
            cmd_semistabilize(file, point, out.empty() ? file + ".out" : out,
                              log_out.empty() ? file + ".steps" : log_out);
        if (*pipeline)
            cmd_pipeline(file, point, out.empty() ? file + ".out" : out,
                         report_out.empty() ? file + ".report" : report_out);
        if (*screen) cmd_screen(file);
        if (*verify_equiv) cmd_verify_equiv(file, file_b, gauge_file, point);
        if (*lift_ext) cmd_lift_ext(file, out.empty() ? file + ".out" : out);
        if (*construct) cmd_construct(rank, points, scale, out);
    } catch (const fuchsq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fuchsq::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fuchsq::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fuchsq::InternalAssertionFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
