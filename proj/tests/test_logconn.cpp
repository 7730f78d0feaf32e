#include <doctest.h>

#include "fuchsq/logconn.hpp"

using namespace fuchsq;

namespace {

RatFun rf(const char* s) { return parse_ratfun(s); }

// Trivial rank-2 bundle, A = diag(2,0)/z, marked {0, inf}.
LogConnection diag_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0)), Point::infinity()};
    c.A = RatMatrix(2, 2);
    c.A(0, 0) = rf("2/z");
    return c;
}

// O(1) + O: A = 0, marked {0}, frame diag(1/z, 1) at 0.
LogConnection split_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0))};
    c.A = RatMatrix(2, 2);
    RatMatrix g(2, 2);
    g(0, 0) = rf("1/z");
    g(1, 1) = RatFun(1);
    c.set_frame(Point(Rat(0)), g);
    return c;
}

// O + O(-1): A = 0, marked {0}, frame diag(z, 1) at 0.
LogConnection negative_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0))};
    c.A = RatMatrix(2, 2);
    RatMatrix g(2, 2);
    g(0, 0) = rf("z");
    g(1, 1) = RatFun(1);
    c.set_frame(Point(Rat(0)), g);
    return c;
}

}  // namespace

TEST_CASE("frame bookkeeping") {
    LogConnection c = diag_example();
    CHECK(c.is_marked(Point(Rat(0))));
    CHECK(c.is_marked(Point::infinity()));
    CHECK(!c.is_marked(Point(Rat(1))));
    CHECK(c.frame(Point(Rat(0))) == nullptr);
    c.set_frame(Point(Rat(0)), RatMatrix::identity(2));
    // Identity frames are never stored, so equality stays structural.
    CHECK(c.frames.empty());
    CHECK(c == diag_example());
}

TEST_CASE("infinity chart and localized matrix") {
    LogConnection c = diag_example();
    RatMatrix inf = infinity_chart(c.A);
    CHECK(inf(0, 0) == rf("-2/z"));  // -A(1/w)/w^2 with w written as z
    CHECK(inf(1, 1) == RatFun(0));
    CHECK(localized_matrix(c, Point(Rat(0))) == c.A);
    CHECK(localized_matrix(c, Point::infinity()) == inf);

    LogConnection s = split_example();
    RatMatrix loc = localized_matrix(s, Point(Rat(0)));
    CHECK(loc(0, 0) == rf("-1/z"));  // g^{-1} g' for g = diag(1/z, 1)
    CHECK(loc(1, 1) == RatFun(0));
}

TEST_CASE("residues and logarithmicity") {
    LogConnection c = diag_example();
    CHECK(residue(c, Point(Rat(0))).gamma == QMatrix(2, 2, {Rat(2), Rat(0), Rat(0), Rat(0)}));
    CHECK(residue_spectrum(c, Point::infinity()) == std::vector<Rat>{Rat(-2), Rat(0)});
    CHECK(is_logarithmic(c));

    // Double pole at a marked point is rejected.
    LogConnection bad = c;
    bad.A(1, 1) = rf("1/z^2");
    std::string diag;
    CHECK(!is_logarithmic(bad, &diag));
    CHECK_THROWS_AS(residue(bad, Point(Rat(0))), NotLogarithmicError);

    // Simple pole at an unmarked point is rejected too.
    LogConnection off = c;
    off.A(1, 1) = rf("1/(z-1)");
    CHECK(!is_logarithmic(off));
}

TEST_CASE("degree and fuchs degree") {
    CHECK(degree(diag_example()) == 0);
    CHECK(fuchs_degree(diag_example()) == Rat(0));
    CHECK(degree(split_example()) == 1);
    CHECK(fuchs_degree(split_example()) == Rat(1));
    CHECK(degree(negative_example()) == -1);
    CHECK(fuchs_degree(negative_example()) == Rat(-1));
}

TEST_CASE("global sections") {
    // O(1) + O has h^0 = 3; the pole of the first coordinate at 0 is allowed.
    LogConnection s = split_example();
    CHECK(global_sections(s, 0).size() == 3);
    CHECK(global_sections(s, 1).size() == 5);
    CHECK(global_sections(s, -1).size() == 1);
    CHECK(global_sections(s, -2).empty());

    LogConnection n = negative_example();
    CHECK(global_sections(n, 0).size() == 1);
    auto basis = global_sections(n, 0);
    CHECK(basis[0] == Section{RatFun(0), RatFun(1)});

    CHECK(global_sections(diag_example(), 0).size() == 2);
}

TEST_CASE("splitting type and slopes") {
    CHECK(splitting_type(diag_example()) == std::vector<int>{0, 0});
    CHECK(splitting_type(split_example()) == std::vector<int>{1, 0});
    CHECK(splitting_type(negative_example()) == std::vector<int>{0, -1});
    auto hp = hn_slopes(split_example());
    REQUIRE(hp.slopes.size() == 2);
    CHECK(hp.slopes[0] == std::pair<Rat, int>{Rat(1), 1});
    CHECK(hp.slopes[1] == std::pair<Rat, int>{Rat(0), 1});
    auto hd = hn_slopes(diag_example());
    REQUIRE(hd.slopes.size() == 1);
    CHECK(hd.slopes[0] == std::pair<Rat, int>{Rat(0), 2});
}

TEST_CASE("maximal HN fiber") {
    // Maximal slope of O(1) + O is 1, so the fiber query is rejected.
    CHECK_THROWS_AS(hn_max_sub_fiber(split_example(), Point(Rat(1))), NotNormalizedError);
    // For O + O(-1) the degree-0 part is spanned by e2 everywhere.
    LogConnection n = negative_example();
    auto fiber = hn_max_sub_fiber(n, Point(Rat(1)));
    CHECK(fiber == std::vector<std::vector<Rat>>{{Rat(0), Rat(1)}});
    auto at0 = hn_max_sub_fiber(n, Point(Rat(0)));
    CHECK(at0 == std::vector<std::vector<Rat>>{{Rat(0), Rat(1)}});
}

TEST_CASE("twist") {
    LogConnection c = diag_example();
    Point p(Rat(0));
    LogConnection t = twist(c, -1, p);
    CHECK(degree(t) == -2);
    // Twisting by E(-p) shifts the residue at p by +Id.
    CHECK(residue(t, p).gamma == QMatrix(2, 2, {Rat(3), Rat(0), Rat(0), Rat(1)}));
    CHECK(splitting_type(t) == std::vector<int>{-1, -1});
    // Group law: opposite twists cancel exactly.
    CHECK(twist(t, 1, p) == c);
    CHECK(twist(twist(c, 2, p), -2, p) == c);
    CHECK_THROWS_AS(twist(c, 1, Point::infinity()), InfinitePointError);
}
