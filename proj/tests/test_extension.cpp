#include <doctest.h>

#include "fuchsq/extension.hpp"

using namespace fuchsq;

namespace {

RatFun rf(const char* s) { return parse_ratfun(s); }

// O(-2) -> E -> O with d_S = 2/z, d_Q = 0 and the marked set {0}.
ExtensionDatum base_datum(const RatFun& u) {
    ExtensionDatum ext;
    ext.a = -2;
    ext.b = 0;
    ext.marked = {Point(Rat(0))};
    ext.u = u;
    ext.d_sub = rf("2/z");
    ext.d_quot = RatFun(0);
    return ext;
}

}  // namespace

TEST_CASE("extension validation") {
    ExtensionDatum ok = base_datum(rf("1/z"));
    CHECK_NOTHROW(validate_extension(ok));

    // The cochain must be supported on the chart overlap.
    ExtensionDatum bad_u = ok;
    bad_u.u = rf("1/(z-1)");
    CHECK_THROWS_AS(validate_extension(bad_u), ValidationError);

    // A double pole in a connection form is rejected.
    ExtensionDatum bad_d = ok;
    bad_d.d_sub = rf("2/z^2");
    CHECK_THROWS_AS(validate_extension(bad_d), ValidationError);

    // The residue sum must match minus the degree of the line bundle.
    ExtensionDatum bad_deg = ok;
    bad_deg.d_sub = rf("1/z");
    CHECK_THROWS_AS(validate_extension(bad_deg), ValidationError);

    // Poles outside the marked set are rejected.
    ExtensionDatum off = ok;
    off.d_sub = rf("1/z + 1/(z-1)");
    CHECK_THROWS_AS(validate_extension(off), ValidationError);
}

TEST_CASE("obstruction class of the base family") {
    // phi = (d_S - d_Q) u + u' = (2/z)(c/z) - c/z^2 = c/z^2 for u = c/z, and
    // the window of unabsorbable exponents is [-3, -2].
    for (int c : {0, 1, 3}) {
        ExtensionDatum ext = base_datum(rf("1/z") * RatFun(c));
        ObstructionClass oc = obstruction_class(ext);
        CHECK(oc.lowest == -3);
        REQUIRE(oc.coefficients.size() == 2);
        CHECK(oc.coefficients[0] == Rat(0));
        CHECK(oc.coefficients[1] == Rat(c));
        CHECK(oc.is_zero() == (c == 0));
    }
}

TEST_CASE("moment reduction by marked points away from zero") {
    // Adding the marked point 1 contributes the coboundary of its log pole,
    // which kills one dimension of the window.
    ExtensionDatum ext;
    ext.a = -1;
    ext.b = 0;
    ext.marked = {Point(Rat(0)), Point(Rat(1))};
    ext.u = rf("1/z");
    ext.d_sub = rf("(1/2)/z + (1/2)/(z-1)");
    ext.d_quot = RatFun(0);
    ObstructionClass oc = obstruction_class(ext);
    CHECK(oc.is_zero());
    LogConnection lift = lift_connection(ext);
    CHECK(is_logarithmic(lift));
    CHECK(degree(lift) == -1);
    CHECK(lift.A(0, 0) == ext.d_sub);
    CHECK(lift.A(1, 1) == ext.d_quot);
    CHECK(lift.A(1, 0) == RatFun(0));
    CHECK(lift_space_dimension(ext) == 0);
}

TEST_CASE("lift exists exactly when the class vanishes") {
    ExtensionDatum zero = base_datum(RatFun(0));
    LogConnection lift = lift_connection(zero);
    // A split datum lifts to the block-diagonal direct sum.
    CHECK(lift.A(0, 1) == RatFun(0));
    CHECK(degree(lift) == -2);
    CHECK(splitting_type(lift) == std::vector<int>{0, -2});

    ExtensionDatum blocked = base_datum(rf("1/z"));
    CHECK(!obstruction_class(blocked).is_zero());
    CHECK_THROWS_AS(lift_connection(blocked), ObstructionNonzeroError);
}

TEST_CASE("lift space dimension formula") {
    // dim = max(0, a - b + sigma - 1) over the tested grid.
    for (int e = -3; e <= 0; ++e) {
        for (int sigma : {1, 2, 3}) {
            ExtensionDatum ext;
            ext.a = e;
            ext.b = 0;
            std::vector<Point> pts = {Point(Rat(0)), Point(Rat(1)), Point(Rat(2))};
            ext.marked.assign(pts.begin(), pts.begin() + sigma);
            ext.u = RatFun(0);
            ext.d_sub = RatFun(Poly(Rat(-e)), Poly(std::vector<Rat>{Rat(0), Rat(1)}));
            ext.d_quot = RatFun(0);
            CHECK(lift_space_dimension(ext) ==
                  std::max(0, ext.a - ext.b + sigma - 1));
        }
    }
}
