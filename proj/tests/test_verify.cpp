#include <doctest.h>

#include "fuchsq/construct.hpp"
#include "fuchsq/verify.hpp"

using namespace fuchsq;

namespace {

RatFun rf(const char* s) { return parse_ratfun(s); }

// Upper-triangular system: e1 spans an invariant line.
LogConnection triangular_example() {
    LogConnection c;
    c.rank = 2;
    c.marked = {Point(Rat(0)), Point::infinity()};
    c.A = RatMatrix(2, 2);
    c.A(0, 0) = rf("1/z");
    c.A(0, 1) = rf("1/z");
    c.A(1, 1) = rf("2/z");
    return c;
}

LogConnection rank1_example(const char* entry, std::vector<Point> marked) {
    LogConnection c;
    c.rank = 1;
    c.marked = std::move(marked);
    c.A = RatMatrix(1, 1);
    c.A(0, 0) = rf(entry);
    return c;
}

}  // namespace

TEST_CASE("invariant subsheaf check") {
    LogConnection c = triangular_example();
    CHECK(check_invariant_subsheaf(c, {Section{RatFun(1), RatFun(0)}}));
    CHECK(!check_invariant_subsheaf(c, {Section{RatFun(0), RatFun(1)}}));
    CHECK_THROWS_AS(check_invariant_subsheaf(c, {}), ZeroSubsheafError);
    CHECK_THROWS_AS(check_invariant_subsheaf(c, {Section{RatFun(0), RatFun(0)}}),
                    ZeroSubsheafError);
    CHECK_THROWS_AS(check_invariant_subsheaf(
                        c, {Section{RatFun(1), RatFun(0)}, Section{RatFun(0), RatFun(1)}}),
                    FullRankError);
    // No invariant line through a generically cyclic vector of the certified
    // generator instance.
    LogConnection irr = irreducible_fuchsian(2, Point(Rat(0)), Point(Rat(1)),
                                             Point(Rat(2)), Rat(1, 4));
    CHECK(!check_invariant_subsheaf(irr, {Section{RatFun(1), RatFun(0)}}));
    CHECK(!check_invariant_subsheaf(irr, {Section{RatFun(0), RatFun(1)}}));
}

TEST_CASE("rank-1 residue bookkeeping") {
    CHECK(residue_integrality_rank1(
        rank1_example("2/z", {Point(Rat(0)), Point::infinity()})));
    CHECK(residue_integrality_rank1(
        rank1_example("(1/2)/z", {Point(Rat(0)), Point::infinity()})));
    // A single marked point forces an integer residue.
    LogConnection one = rank1_example("2/z", {Point(Rat(0))});
    RatMatrix g(1, 1);
    g(0, 0) = rf("z^2");
    one.set_frame(Point::infinity(), g);
    CHECK(degree(one) == -2);
    CHECK(residue_integrality_rank1(one));
    CHECK_THROWS_AS(residue_integrality_rank1(triangular_example()), NotRankOneError);
}

TEST_CASE("irreducibility screen certifies the generator fixtures") {
    for (int n : {2, 3}) {
        LogConnection c = irreducible_fuchsian(n, Point(Rat(0)), Point(Rat(1)),
                                               Point(Rat(2)), default_scale(n));
        ScreenReport rep = irreducibility_screen(c);
        CHECK(rep.certified);
        CHECK(rep.flagged.empty());
    }
}

TEST_CASE("irreducibility screen flags integer totals") {
    // All-integer spectra are always flagged.
    ScreenReport rep = irreducibility_screen(triangular_example());
    CHECK(!rep.certified);
    REQUIRE(!rep.flagged.empty());
    for (const FlaggedSelection& f : rep.flagged) {
        CHECK(f.rank >= 1);
        CHECK(f.rank < 2);
        CHECK(is_integer(f.total));
        CHECK(f.choices.size() == 2);  // one multiset per marked point
    }
}
