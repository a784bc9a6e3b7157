#include "doctest.h"
#include "lieinv/catalog.hpp"
#include "lieinv/gelfand.hpp"
#include "lieinv/invariance.hpp"
#include "support.hpp"

using namespace lieinv;
using testing::P;

namespace {

const MultiPoly& entry(const MatrixRecipe& r, int i, int j) { return r.base(i - 1, j - 1); }

}  // namespace

TEST_CASE("so(p,q) matrix")
{
    const PolyMatrix m = gelfand_matrix_so(3, 0);
    for (int i = 0; i < 3; ++i) CHECK(m(i, i).is_zero());
    CHECK(m(0, 1) == -m(1, 0));

    const MultiPoly p = charpoly(m);
    const Universe u = merge_universes(p.universe(), make_universe({"e12", "e13", "e23", "T"}));
    CHECK(p.over(u) == P("T^3 + (e12^2 + e13^2 + e23^2)*T", u));

    // Lorentzian signature: the timelike block changes sign.
    const MultiPoly l = charpoly(gelfand_matrix_so(2, 1));
    CHECK(l.coefficient("T", 1) == P("e12^2 - e13^2 - e23^2"));
    CHECK_THROWS_AS(gelfand_matrix_so(1, 1), BadSignature);
}

TEST_CASE("kinematical matrix entries")
{
    const MatrixRecipe ads = kinematical_matrix("so32");
    CHECK(entry(ads, 1, 4) == P("-k1"));
    CHECK(entry(ads, 5, 4) == P("-h"));
    CHECK(entry(ads, 2, 5) == P("-p2"));
    CHECK(ads.combine == Combine::plain);

    const MatrixRecipe c = kinematical_matrix("carroll");
    CHECK(entry(c, 4, 4) == P("T"));
    CHECK(entry(c, 5, 5) == P("T"));
    CHECK(c.t_dependent);

    const MatrixRecipe s = kinematical_matrix("static");
    CHECK(entry(s, 1, 5) == P("p1*T"));
    CHECK(entry(s, 4, 5) == P("-h*T"));
    CHECK(entry(s, 5, 4) == P("-h"));

    const MatrixRecipe i = isp_matrix(2);
    CHECK(i.base.rows() == 5);
    CHECK(entry(i, 1, 5) == P("p1*T"));
    CHECK(entry(i, 5, 1) == P("-q1"));
    CHECK(entry(i, 5, 3) == P("p1"));
    CHECK(i.combine == Combine::plus_T_times_minor);
    CHECK(i.minor_row == 5);

    CHECK(kinematical_matrix("iso31").minor_row == 5);
    CHECK(kinematical_matrix("iso4").minor_row == 4);
    CHECK_THROWS_AS(kinematical_matrix("so(2,2)"), UnknownName);
    CHECK_THROWS_AS(isp_matrix(1), BadParams);
}

TEST_CASE("evaluate and extract")
{
    testing::Kin k;
    const MultiPoly ads = evaluate_recipe(kinematical_matrix("so32"));
    CHECK(ads.degree_in("T") == 5);
    CHECK(ads.coefficient("T", 4).is_zero());
    CHECK(ads.coefficient("T", 0).is_zero());

    const InvariantSet s = extract_invariants(ads, catalog("so32"));
    REQUIRE(s.size() == 2);
    CHECK(s.members[0].degree == 2);
    CHECK(s.members[0].poly == k.jj() - k.pp() - k.kk() + k.h() * k.h());
    CHECK(s.members[1].degree == 4);
    CHECK(s.members[0].provenance == "coefficient of T^3");

    // T^5 alone carries nothing.
    const LieAlgebra ab = make_algebra("ab", {"A"}, {});
    CHECK(extract_invariants(P("T^5"), ab).size() == 0);

    const MultiPoly gal = evaluate_recipe(kinematical_matrix("galilei"));
    CHECK(gal.coefficient("T", 5) == MultiPoly(1L));
    CHECK(gal.coefficient("T", 1) == -(k.pp() * k.kk() - k.pk() * k.pk()));
}

TEST_CASE("static: simplification recovers the quadratic basis")
{
    testing::Kin k;
    const MultiPoly p = evaluate_recipe(kinematical_matrix("static"));
    CHECK(p.coefficient("T", 4) == k.pp() - k.h() * k.h());
    CHECK(p.coefficient("T", 3) == -k.kk());
    CHECK(p.coefficient("T", 2) == -(k.pp() * k.kk() - k.pk() * k.pk()));

    const InvariantSet s = invariants_from_recipe(kinematical_matrix("static"), catalog("static"));
    REQUIRE(s.size() == 4);
    CHECK(s.members[0].poly == k.pp());
    CHECK(s.members[1].poly == k.h() * k.h());
    CHECK(s.members[0].provenance == "part of coefficient of T^4");
    CHECK(independence_rank(s.polys()) == 4);
}

TEST_CASE("composite recipes")
{
    testing::Kin k;
    const MultiPoly iso31 = evaluate_recipe(kinematical_matrix("iso31"));
    CHECK(iso31.coefficient("T", 5) == MultiPoly(1L));
    CHECK(iso31.coefficient("T", 3) == k.h() * k.h() - k.pp());

    const InvariantSet iso4 = invariants_from_recipe(kinematical_matrix("iso4"), catalog("iso4"));
    REQUIRE(iso4.size() == 2);
    CHECK(iso4.members[0].poly == -k.h() * k.h() - k.kk());

    const InvariantSet isp = invariants_from_recipe(isp_matrix(2), isp_algebra(2));
    REQUIRE(isp.size() == 2);
    CHECK(isp.members[0].degree == 3);
    CHECK(isp.members[1].degree == 5);
    CHECK(isp.members[1].provenance == "coefficient of T^1");
}

TEST_CASE("de Sitter coefficient signs")
{
    testing::Kin k;
    const MultiPoly ds = evaluate_recipe(kinematical_matrix("so41"));
    const MultiPoly ads = evaluate_recipe(kinematical_matrix("so32"));
    CHECK(ds.coefficient("T", 3) == k.jj() + k.pp() - k.kk() - k.h() * k.h());
    CHECK(ads.coefficient("T", 3) == k.jj() - k.pp() - k.kk() + k.h() * k.h());
}

TEST_CASE("a coefficient outside the kernel is rejected")
{
    // The (5,5) minor of the iso(4) matrix gives a non-invariant quadratic.
    MatrixRecipe r = kinematical_matrix("iso4");
    r.minor_row = r.minor_col = 5;
    try {
        extract_invariants(evaluate_recipe(r), catalog("iso4"));
        FAIL("expected NonInvariantCoefficient");
    } catch (const NonInvariantCoefficient& e) {
        CHECK(e.power == 3);
    }
    CHECK_THROWS_AS(extract_invariants(P("x1*T"), make_algebra("g", {"X1", "X2"}, {{0, 1, {{1, Rational(1)}}}})),
                    NonInvariantCoefficient);
}

TEST_CASE("block parts")
{
    const auto parts = block_parts(P("p1^2 + p2^2 - h^2 + j1*k1"));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == P("p1^2 + p2^2"));
    CHECK(parts[1] == P("h^2"));
    CHECK(parts[2] == P("j1*k1"));
    CHECK(block_parts(P("x_1_1*p1 + x_m1_1*q1")).size() == 2);
}

TEST_CASE("matrix D1 is a representation")
{
    for (const char* n : {"iso31", "iso4", "carroll"}) {
        CAPTURE(n);
        const auto d = d1_decomposition(n);
        REQUIRE(d);
        CHECK_FALSE(homomorphism_defect(catalog(n), d->first));
        CHECK(equal(PolyMatrix(d->first + d->second), kinematical_matrix(n).base));
    }
    // iso(3,1): D2 is a single row.
    const auto d = d1_decomposition("iso31");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) CHECK(d->second(i, j).is_zero());

    CHECK_FALSE(homomorphism_defect(catalog("so32"), kinematical_matrix("so32").base));
    CHECK_FALSE(d1_decomposition("galilei"));
}

TEST_CASE("matrices that are not representations")
{
    for (const char* n : {"newton_plus", "newton_minus", "galilei", "static"}) {
        CAPTURE(n);
        CHECK(homomorphism_defect(catalog(n), kinematical_matrix(n).base));
    }
}

TEST_CASE("recipe lookup")
{
    CHECK(recipe_for("adS").algebra == "so32");
    CHECK(recipe_for("isp4").algebra == "isp(4)");
    CHECK(recipe_for("so(2,2)").base.rows() == 4);
    CHECK_THROWS_AS(recipe_for("su(2)"), UnknownName);
}
