#include "doctest.h"
#include "lieinv/catalog.hpp"
#include "lieinv/invariance.hpp"
#include "lieinv/mlp.hpp"
#include "support.hpp"

using namespace lieinv;
using testing::P;

namespace {

std::vector<int> all_indices(const LieAlgebra& g)
{
    std::vector<int> v(static_cast<std::size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

bool flagged(const MLPReport& r, const std::string& f)
{
    return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end();
}

}  // namespace

TEST_CASE("missing label counts")
{
    for (const auto& n : kinematical_names()) {
        CAPTURE(n);
        const LieAlgebra g = catalog(n);
        const auto [lo, hi] = missing_label_count(g, subalgebra(g, rotation_indices()), 0);
        CHECK(lo == (n == "static" ? 1 : 2));
        CHECK(hi == 2 * lo);
    }
    const LieAlgebra st = catalog("static");
    const SubalgebraSelection jh = subalgebra(st, {0, 1, 2, 9});
    CHECK(missing_label_count(st, jh, 1) == std::pair{1, 2});

    const LieAlgebra ab = make_algebra("ab", {"A", "B"}, {});
    CHECK_THROWS_AS(missing_label_count(ab, subalgebra(ab, {0, 1}), 0), NegativeCount);
}

TEST_CASE("l prime")
{
    const LieAlgebra st = catalog("static");
    const InvariantSet cas = invariants_from_recipe(kinematical_matrix("static"), st);
    CHECK(compute_l_prime(cas, subalgebra(st, rotation_indices())) == 0);
    CHECK(compute_l_prime(cas, subalgebra(st, {0, 1, 2, 9})) == 1);
}

TEST_CASE("solutions free of the subalgebra variables")
{
    for (const auto& n : kinematical_names()) {
        CAPTURE(n);
        const LieAlgebra g = catalog(n);
        CHECK(reduced_solution_count(g, subalgebra(g, rotation_indices())) == 4);
    }
    const LieAlgebra g = catalog("so41");
    CHECK(reduced_solution_count(g, subalgebra(g, all_indices(g))) == 0);
    const LieAlgebra ab = make_algebra("ab", {"A", "B", "C", "D", "E"}, {});
    CHECK(reduced_solution_count(ab, subalgebra(ab, {})) == 5);
}

TEST_CASE("reduced recipe")
{
    const LieAlgebra g = catalog("iso31");
    const MatrixRecipe r = reduced_recipe(kinematical_matrix("iso31"), subalgebra(g, rotation_indices()));
    CHECK(r.combine == Combine::plain);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.base(i, j).is_zero());
    CHECK(r.base(0, 3) == P("-k1"));

    testing::Kin k;
    const MultiPoly p = evaluate_recipe(reduced_recipe(kinematical_matrix("so32"), subalgebra(catalog("so32"), {0, 1, 2})));
    CHECK(p.coefficient("T", 3) == -k.pp() - k.kk() + k.h() * k.h());
    CHECK(p.coefficient("T", 1) == k.pp() * k.kk() - k.pk() * k.pk());
}

TEST_CASE("functional equivalence")
{
    CHECK(functionally_equivalent({P("x")}, {P("x^3 + 1")}, {}));
    CHECK_FALSE(functionally_equivalent({P("x")}, {P("y")}, {}));
    CHECK(functionally_equivalent({P("x*y")}, {P("y")}, {P("x")}));
    CHECK(functionally_equivalent({}, {}, {P("x")}));
}

TEST_CASE("labels for the rotation chain")
{
    testing::Kin k;
    const auto& f = kinematical_functions();
    for (const char* n : {"so41", "so32", "iso31", "iso4"}) {
        CAPTURE(n);
        const MLPReport r = mlp_analyze(n);
        CHECK(r.n == 2);
        CHECK(r.m == 4);
        CHECK(r.n_prime == 4);
        REQUIRE(r.accepted_labels.size() == 3);
        CHECK_FALSE(r.method_fails);
        CHECK(functionally_equivalent(r.accepted_labels, {f.I2, f.I3, f.I5}, r.casimirs.polys()));
    }
    for (const char* n : {"newton_plus", "newton_minus"}) {
        CAPTURE(n);
        const MLPReport r = mlp_analyze(n);
        REQUIRE(r.accepted_labels.size() == 1);
        CHECK(r.accepted_labels[0] == k.pp());
    }
    const MLPReport carroll = mlp_analyze("carroll");
    CHECK(carroll.accepted_labels.size() == 1);
    CHECK(flagged(carroll, "published_label_discrepancy"));
    CHECK_FALSE(carroll.method_fails);

    const MLPReport gal = mlp_analyze("galilei");
    CHECK(gal.accepted_labels.empty());
    CHECK(gal.method_fails);
    CHECK(gal.surviving_casimirs == 2);
    CHECK(flagged(gal, "method_fails"));

    const MLPReport st = mlp_analyze("static");
    CHECK(st.n == 1);
    CHECK(st.m == 2);
    CHECK(st.accepted_labels.empty());
    CHECK(st.method_fails);
    CHECK_FALSE(flagged(st, "published_label_discrepancy"));
}

TEST_CASE("every accepted label passes the gate")
{
    for (const auto& n : kinematical_names()) {
        CAPTURE(n);
        const MLPReport r = mlp_analyze(n);
        const LieAlgebra g = catalog(n);
        const SubalgebraSelection h = subalgebra(g, rotation_indices());
        std::vector<MultiPoly> base = r.casimirs.polys();
        for (const auto& c : r.subalgebra_casimirs.polys()) base.push_back(c);
        for (const auto& v : r.verdicts) {
            CHECK(v.accepted == (v.annihilated && v.raises_rank));
            if (v.accepted) CHECK(annihilated_by_subalgebra(h, v.poly));
        }
        std::vector<MultiPoly> all = base;
        for (const auto& l : r.accepted_labels) all.push_back(l);
        CHECK(independence_rank(all) == independence_rank(base) + static_cast<int>(r.accepted_labels.size()));
    }
}

TEST_CASE("overrides and errors")
{
    const MLPReport r = mlp_analyze("so32", std::nullopt, 1);
    CHECK(r.l_prime == 1);
    CHECK(r.n == 3);
    CHECK(r.m == 6);
    CHECK_THROWS_AS(mlp_analyze("so32", std::vector<int>{0, 4}), NotClosed);
    CHECK_THROWS_AS(mlp_analyze("su3"), UnknownName);
}

TEST_CASE("published rows")
{
    const auto row = published_label_row("dS");
    REQUIRE(row);
    CHECK(row->algebra == "so41");
    CHECK(row->casimirs.size() == 2);
    CHECK(row->reduced_yield.size() == 3);
    CHECK(published_label_row("static")->reduced_yield.empty());
    CHECK_FALSE(published_label_row("isp4"));
}
