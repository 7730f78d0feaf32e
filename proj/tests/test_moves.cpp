#include <doctest.h>

#include "fuchsq/moves.hpp"

using namespace fuchsq;

namespace {

RatFun rf(const char* s) { return parse_ratfun(s); }

LogConnection diag_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0)), Point::infinity()};
    c.A = RatMatrix(2, 2);
    c.A(0, 0) = rf("2/z");
    return c;
}

LogConnection nilpotent_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0)), Point::infinity()};
    c.A = RatMatrix(2, 2);
    c.A(0, 1) = rf("1/z");
    return c;
}

}  // namespace

TEST_CASE("completion matrix") {
    QMatrix c = completion_matrix({Rat(0), Rat(3), Rat(1)});
    // The vector goes first; the standard basis follows, skipping the pivot row.
    CHECK(c == QMatrix(3, 3, {Rat(0), Rat(1), Rat(0), Rat(3), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)}));
    CHECK(determinant(c) != 0);
    CHECK_THROWS_AS(completion_matrix({Rat(0), Rat(0)}), PreconditionError);
}

TEST_CASE("elementary gauge factor") {
    RatMatrix s = elementary_gauge_factor(QMatrix::identity(2), Point(Rat(3)));
    CHECK(s(0, 0) == rf("1/(z-3)"));
    CHECK(s(1, 1) == RatFun(1));
    CHECK(s(0, 1) == RatFun(0));
}

TEST_CASE("elementary transformation along an eigenvector") {
    LogConnection c = diag_example();
    Point p(Rat(0));
    auto [next, rec] = elementary_transformation(c, p, {Rat(1), Rat(0)});
    CHECK(degree(next) == 1);
    CHECK(residue_spectrum(next, p) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(is_logarithmic(next));
    CHECK(rec.point == p);
    REQUIRE(rec.steps.size() == 1);
    CHECK(rec.steps[0].eigenvalue == Rat(2));
    // The audit gauge reproduces the transformation.
    CHECK(verify_gauge_equivalence(c, next, rec.cumulative_gauge, p));

    // A non-eigenvector is rejected.
    CHECK_THROWS_AS(elementary_transformation(c, p, {Rat(1), Rat(1)}), NotEigenvectorError);
}

TEST_CASE("unchecked transformation can leave the logarithmic class") {
    LogConnection c = nilpotent_example();
    Point p(Rat(0));
    // (0,1) is not an eigenvector of [[0,1],[0,0]].
    auto [next, rec] = elementary_transformation_unchecked(c, p, {Rat(0), Rat(1)});
    CHECK(!is_logarithmic(next));
    // Along the actual eigenvector everything stays logarithmic.
    auto [good, rec2] = elementary_transformation(c, p, {Rat(1), Rat(0)});
    CHECK(is_logarithmic(good));
    CHECK(residue_spectrum(good, p) == std::vector<Rat>{Rat(-1), Rat(0)});
}

TEST_CASE("spectrum predictor") {
    CHECK(spectrum_after({Rat(0), Rat(2)}, Rat(2)) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(spectrum_after({Rat(1, 2), Rat(1, 2)}, Rat(1, 2)) ==
          std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(spectrum_after({Rat(0)}, Rat(1)), NotInSpectrumError);
}

TEST_CASE("gauge equivalence verifier") {
    LogConnection c = diag_example();
    Point p(Rat(0));
    auto [next, rec] = elementary_transformation(c, p, {Rat(1), Rat(0)});
    std::string diag;
    CHECK(verify_gauge_equivalence(c, next, rec.cumulative_gauge, p, &diag));
    // A connection with a different generic matrix is not equivalent.
    LogConnection other = c;
    other.A(1, 1) = rf("1/z");
    CHECK(!verify_gauge_equivalence(c, other, RatMatrix::identity(2), p, &diag));
    CHECK(!diag.empty());
    // A gauge whose determinant has a zero away from p is rejected.
    RatMatrix h = RatMatrix::identity(2);
    h(0, 0) = rf("z-1");
    CHECK(!verify_gauge_equivalence(c, c, h, p, &diag));
    // Self-equivalence through the identity holds.
    CHECK(verify_gauge_equivalence(c, c, RatMatrix::identity(2), p));
}
