#include <doctest.h>

#include <algorithm>

#include "fuchsq/construct.hpp"
#include "fuchsq/io.hpp"

using namespace fuchsq;

namespace {

RatFun rf(const char* s) { return parse_ratfun(s); }

const char* kInstance =
    "fuchsq 1\n"
    "rank 2\n"
    "genus 0\n"
    "marked 0 inf\n"
    "A\n"
    "2/z 0\n"
    "0 0\n"
    "end\n";

}  // namespace

TEST_CASE("instance round trip") {
    LogConnection c = parse_instance(kInstance);
    CHECK(c.rank == 2);
    CHECK(c.marked == std::vector<Point>{Point(Rat(0)), Point::infinity()});
    CHECK(c.A(0, 0) == rf("2/z"));
    CHECK(parse_instance(print_instance(c)) == c);

    // A generated instance with a frame also survives the round trip.
    LogConnection g = irreducible_fuchsian(3, Point(Rat(0)), Point(Rat(1)),
                                           Point(Rat(2)), Rat(343, 288));
    RatMatrix fr = RatMatrix::identity(3);
    fr(0, 0) = rf("1/(z-5)");
    g.set_frame(Point(Rat(5)), fr);
    g.marked.push_back(Point(Rat(5)));
    std::sort(g.marked.begin(), g.marked.end());
    REQUIRE(is_logarithmic(g));
    CHECK(parse_instance(print_instance(g)) == g);
}

TEST_CASE("instance parse errors") {
    CHECK_THROWS_AS(parse_instance("nonsense\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("fuchsq 1\nrank 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("fuchsq 1\nrank two\n"), ParseError);
    // Duplicate marked points are rejected.
    CHECK_THROWS_AS(
        parse_instance("fuchsq 1\nrank 1\ngenus 0\nmarked 0 0\nA\n0\nend\n"),
        ValidationError);
    // A double pole at a marked point fails validation.
    CHECK_THROWS_AS(
        parse_instance("fuchsq 1\nrank 1\ngenus 0\nmarked 0 inf\nA\n1/z^2\nend\n"),
        ValidationError);
    // Singular frames are rejected.
    CHECK_THROWS_AS(parse_instance("fuchsq 1\nrank 1\ngenus 0\nmarked 0 inf\nA\n2/z\n"
                                   "frame 1\n0\nend\n"),
                    ValidationError);
}

TEST_CASE("gauge round trip") {
    RatMatrix h = RatMatrix::identity(2);
    h(0, 1) = rf("1/(z-3)");
    GaugeFile gf = parse_gauge(print_gauge(Point(Rat(3)), h));
    CHECK(gf.point == Point(Rat(3)));
    CHECK(gf.h == h);
}

TEST_CASE("extension round trip") {
    ExtensionDatum ext;
    ext.a = -2;
    ext.b = 0;
    ext.marked = {Point(Rat(0))};
    ext.u = rf("1/z");
    ext.d_sub = rf("2/z");
    ext.d_quot = RatFun(0);
    ExtensionDatum back = parse_extension(print_extension(ext));
    CHECK(back.a == ext.a);
    CHECK(back.b == ext.b);
    CHECK(back.marked == ext.marked);
    CHECK(back.u == ext.u);
    CHECK(back.d_sub == ext.d_sub);
    CHECK(back.d_quot == ext.d_quot);
}

TEST_CASE("report printers") {
    CHECK(join_rats({Rat(1, 2), Rat(-3)}) == "1/2,-3");
    LogConnection c = irreducible_fuchsian(2, Point(Rat(0)), Point(Rat(1)),
                                           Point(Rat(2)), Rat(1, 4));
    std::string screen = print_screen_report(irreducibility_screen(c));
    CHECK(screen.find("verdict Certified") != std::string::npos);
    PipelineReport rep = pipeline(c, Point(Rat(2)));
    std::string text = print_pipeline_report(rep);
    CHECK(text.find("splitting 0,0") != std::string::npos);
    CHECK(text.find("check fail") == std::string::npos);
    // Printing is deterministic.
    CHECK(text == print_pipeline_report(rep));
}
