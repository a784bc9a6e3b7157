#include "doctest.h"
#include "lieinv/catalog.hpp"
#include "lieinv/contraction.hpp"
#include "lieinv/invariance.hpp"
#include "support.hpp"

using namespace lieinv;
using testing::P;

namespace {

LieAlgebra so3()
{
    return make_algebra("so3", {"J1", "J2", "J3"},
                        {{0, 1, {{2, Rational(1)}}}, {1, 2, {{0, Rational(1)}}}, {2, 0, {{1, Rational(1)}}}});
}

}  // namespace

TEST_CASE("net degrees of the rescaled brackets")
{
    const ContractionSpec s{"e2", so3(), {0, 1, 1}};
    const auto terms = transformed_structure(s);
    REQUIRE(terms.size() == 3);
    for (const auto& t : terms) {
        if (t.i == 1 && t.j == 2)
            CHECK(t.net_degree == 2);
        else
            CHECK(t.net_degree == 0);
    }

    const LieAlgebra e2 = contract_algebra(s);
    CHECK(e2.name() == "e2");
    CHECK(e2.bracket(1, 2).empty());
    CHECK(e2.structure(0, 1, 2) == Rational(1));
    CHECK(e2.structure(0, 2, 1) == Rational(-1));
    CHECK(num_invariants(e2) == 1);
}

TEST_CASE("divergent rescaling")
{
    try {
        contract_algebra(ContractionSpec{"", so3(), {1, 0, 0}});
        FAIL("expected DivergentContraction");
    } catch (const DivergentContraction& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 2);
        CHECK(e.k == 0);
    }
    CHECK_THROWS_AS(contract_algebra(ContractionSpec{"", so3(), {0, 0}}), BadParams);
}

TEST_CASE("make_spec by generator and block")
{
    const LieAlgebra g = catalog("so32");
    const ContractionSpec s = make_spec(g, {{"P", 1}, {"H", 2}, {"K3", 5}});
    CHECK(s.exponents == std::vector<int>{0, 0, 0, 1, 1, 1, 0, 0, 5, 2});
    CHECK_THROWS_AS(make_spec(g, {{"Q", 1}}), UnknownName);
    CHECK(contract_algebra(make_spec(g, {})).table() == g.table());
    CHECK(contract_algebra(make_spec(g, {})).name() == "so32'");
}

TEST_CASE("eps limit of a polynomial")
{
    const EpsLimit l = contract_charpoly(P("T^3 + eps^2*x*T + eps*y"));
    CHECK(l.alpha == 2);
    CHECK(l.limit == P("x*T"));
    const EpsLimit c = contract_charpoly(P("T^2 + x"));
    CHECK(c.alpha == 0);
    CHECK(c.limit == P("T^2 + x"));
}

TEST_CASE("rescale")
{
    const ContractionSpec s = make_spec(catalog("so32"), {{"P", 1}, {"H", 2}});
    CHECK(rescale(P("p1*h + j1"), s) == P("eps^3*p1*h + j1"));
    CHECK_THROWS_AS(rescale(P("p1"), ContractionSpec{"", catalog("so32"), std::vector<int>(10, -1)}), BadParams);
}

TEST_CASE("so(3,2) to iso(3,1)")
{
    testing::Kin k;
    const ContractionSpec s = named_contraction("so32_to_iso31");
    const PipelineResult r = contraction_pipeline(s, kinematical_matrix("so32"));
    CHECK(r.contracted.table() == catalog("iso31").table());
    CHECK(r.alpha == 2);
    CHECK(r.limit.coefficient("T", 5).is_zero());
    REQUIRE(r.invariants.size() == 2);
    CHECK(r.invariants.members[0].poly == k.h() * k.h() - k.pp());
    const MultiPoly c4 = k.h() * k.h() * k.jj() - k.jp() * k.jp() - Rational(2) * k.h() * k.M() + k.pp() * k.kk() -
                         k.pk() * k.pk();
    CHECK(r.invariants.members[1].poly == c4);
}

TEST_CASE("so(4,1) to iso(4)")
{
    testing::Kin k;
    const PipelineResult r = contraction_pipeline(named_contraction("so41_to_iso4"), kinematical_matrix("so41"));
    CHECK(r.contracted.table() == catalog("iso4").table());
    REQUIRE(r.invariants.size() == 2);
    CHECK(r.invariants.members[0].poly == -(k.kk() + k.h() * k.h()));
    for (const auto& m : r.invariants.members) CHECK(is_invariant(catalog("iso4"), m.poly));
}

TEST_CASE("named contractions reach their targets")
{
    CHECK(named_contractions().size() == 9);
    for (const auto& n : named_contractions()) {
        CAPTURE(n);
        const ContractionSpec s = named_contraction(n);
        const LieAlgebra c = contract_algebra(s);
        CHECK(c.table() == catalog(named_contraction_target(n)).table());
        CHECK(c.name() == named_contraction_target(n));
        CHECK_FALSE(jacobi_witness(c));
    }
    CHECK_THROWS_AS(named_contraction("so32_to_so41"), UnknownName);
}

TEST_CASE("contractions that change the count or lose independence")
{
    CHECK_THROWS_AS(contraction_pipeline(named_contraction("so32_to_static"), kinematical_matrix("so32")),
                    CountMismatch);
    for (const char* n : {"so32_to_newton_minus", "so41_to_newton_plus", "so32_to_galilei", "iso31_to_galilei"}) {
        CAPTURE(n);
        const ContractionSpec s = named_contraction(n);
        CHECK_THROWS_AS(contraction_pipeline(s, kinematical_matrix(s.algebra.name())), DependentInvariants);
    }
}

TEST_CASE("two steps equal one")
{
    const PipelineResult direct = contraction_pipeline(named_contraction("so32_to_carroll"), kinematical_matrix("so32"));
    const PipelineResult second = contraction_pipeline(named_contraction("iso31_to_carroll"), kinematical_matrix("iso31"));
    CHECK(direct.contracted.table() == second.contracted.table());
    CHECK(direct.alpha == 4);
    REQUIRE(direct.invariants.size() == second.invariants.size());
    for (std::size_t i = 0; i < direct.invariants.size(); ++i)
        CHECK(direct.invariants.members[i].poly == second.invariants.members[i].poly);
    CHECK(direct.invariants.members[0].poly == P("h^2"));
}
