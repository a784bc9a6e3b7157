#include "doctest.h"
#include "lieinv/catalog.hpp"
#include "lieinv/contraction.hpp"
#include "lieinv/gelfand.hpp"
#include "lieinv/invariance.hpp"
#include "support.hpp"

using namespace lieinv;
using testing::Gen;

namespace {

std::vector<LieAlgebra> catalog_algebras()
{
    std::vector<LieAlgebra> out;
    for (const auto& n : catalog_listing()) out.push_back(catalog(n));
    for (const char* n : {"so(2,1)", "so(3,0)", "so(2,2)", "so(3,1)", "so(4,0)", "so(3,2)", "so(5,0)", "isp(6)"})
        out.push_back(catalog(n));
    return out;
}

std::vector<std::vector<Rational>> numeric(const PolyMatrix& m, const std::map<std::string, Rational>& pt)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), pt);
    return out;
}

}  // namespace

TEST_CASE("ring axioms")
{
    Gen gen(11);
    const Universe u = make_universe({"x", "y", "z"});
    for (int n = 0; n < 1000; ++n) {
        const MultiPoly a = gen.poly(u, 4, 3), b = gen.poly(u, 4, 3), c = gen.poly(u, 4, 3);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * MultiPoly(1L) == a);
        REQUIRE((a * MultiPoly::zero(u)).is_zero());
    }
}

TEST_CASE("product and chain rules")
{
    Gen gen(12);
    const Universe u = make_universe({"x", "y", "z"});
    const Universe xz = make_universe({"x", "z"});
    for (int n = 0; n < 1000; ++n) {
        const MultiPoly a = gen.poly(u, 4, 3), b = gen.poly(u, 4, 3);
        REQUIRE(differentiate(a * b, "x") == differentiate(a, "x") * b + a * differentiate(b, "x"));
        // d/dx f(x, g(x, z), z) = f_x(...) + f_y(...) g_x
        const MultiPoly g = gen.poly(xz, 3, 2);
        const std::map<std::string, MultiPoly> at{{"y", g}};
        const MultiPoly lhs = differentiate(substitute(a, at), "x");
        const MultiPoly rhs = substitute(differentiate(a, "x"), at) + substitute(differentiate(a, "y"), at) * differentiate(g, "x");
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("printing round-trips")
{
    Gen gen(13);
    const Universe u = make_universe({"x", "y", "z"});
    for (int n = 0; n < 300; ++n) {
        const MultiPoly a = gen.poly(u, 5, 4);
        REQUIRE(parse_poly(a.to_string(), u) == a);
    }
}

TEST_CASE("Bareiss and cofactor agree")
{
    Gen gen(21);
    const Universe u = make_universe({"x", "y"});
    for (int n = 0; n < 240; ++n) {
        const int size = 1 + n % 5;
        const PolyMatrix m = gen.matrix(u, size, 2, 2);
        REQUIRE(determinant_bareiss(m) == determinant_cofactor(m));
    }
}

TEST_CASE("determinant and charpoly against numeric elimination")
{
    Gen gen(22);
    const Universe u = make_universe({"x", "y"});
    for (int n = 0; n < 100; ++n) {
        const int size = 1 + n % 5;
        const PolyMatrix m = gen.matrix(u, size, 2, 2);
        const std::map<std::string, Rational> pt{{"x", gen.rational()}, {"y", gen.rational()}};
        auto num = numeric(m, pt);
        REQUIRE(evaluate(determinant(m), pt) == testing::gauss_det(num));

        const Rational t = gen.rational();
        for (int i = 0; i < size; ++i) num[i][i] -= t;
        std::map<std::string, Rational> with_t = pt;
        with_t["T"] = t;
        const Rational sign = size % 2 ? Rational(-1) : Rational(1);
        REQUIRE(evaluate(charpoly(m), with_t) == sign * testing::gauss_det(num));
    }
}

TEST_CASE("symbolic rank equals evaluated rank on the catalog")
{
    for (const auto& g : catalog_algebras()) {
        CAPTURE(g.name());
        const PolyMatrix a = commutator_matrix(g);
        const GenericRank r = generic_rank(a);
        if (r.symbolic) CHECK(*r.symbolic == r.evaluated);
        const auto vars = *matrix_universe(a);
        const int seeded = static_cast<int>(testing::gauss_rank(numeric(a, sample_point({vars.begin(), vars.end()}, 97))));
        CHECK(seeded <= r.evaluated);
    }
}

TEST_CASE("catalog structure")
{
    for (const auto& g : catalog_algebras()) {
        CAPTURE(g.name());
        CHECK(testing::brute_jacobi(g));
        const PolyMatrix a = commutator_matrix(g);
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) {
                CHECK(a(i, j) == -a(j, i));
                CHECK((a(i, j).is_zero() || (a(i, j).is_homogeneous() && a(i, j).total_degree() == 1)));
            }
        const int n = num_invariants(g);
        CHECK((g.dim() - n) % 2 == 0);
        CHECK(n >= 0);
    }
}

TEST_CASE("so(p,q) rank")
{
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q) {
            if (p + q < 3) continue;
            CAPTURE(p);
            CAPTURE(q);
            const LieAlgebra g = so_algebra(p, q);
            CHECK(g.dim() == (p + q) * (p + q - 1) / 2);
            CHECK(num_invariants(g) == (p + q) / 2);
            for (const auto& m : invariants_from_recipe(so_recipe(p, q), g).members) CHECK(is_invariant(g, m.poly));
        }
}

TEST_CASE("random contractions of kinematical algebras")
{
    Gen gen(31);
    int kept = 0;
    for (int n = 0; n < 200; ++n) {
        const std::string src = kinematical_names()[static_cast<std::size_t>(gen.integer(0, 7))];
        const LieAlgebra g = kinematical_algebra(src);
        const std::map<std::string, int> e{
            {"J", gen.integer(0, 1)}, {"P", gen.integer(0, 2)}, {"K", gen.integer(0, 2)}, {"H", gen.integer(0, 2)}};
        const ContractionSpec s = make_spec(g, e, "c");
        CAPTURE(src);
        bool diverges = false;
        for (const auto& t : transformed_structure(s)) diverges = diverges || t.net_degree < 0;
        if (diverges) {
            CHECK_THROWS_AS(contract_algebra(s), DivergentContraction);
            continue;
        }
        ++kept;
        const LieAlgebra c = contract_algebra(s);
        CHECK(c.dim() == g.dim());
        CHECK(c.generators() == g.generators());
        CHECK(testing::brute_jacobi(c));
        CHECK(num_invariants(c) >= num_invariants(g));
    }
    CHECK(kept > 20);
}

TEST_CASE("contraction composes additively")
{
    Gen gen(32);
    int composed = 0;
    for (int n = 0; n < 400; ++n) {
        const LieAlgebra g = kinematical_algebra(kinematical_names()[static_cast<std::size_t>(gen.integer(0, 7))]);
        std::map<std::string, int> a, b, ab;
        for (const char* block : {"J", "P", "K", "H"}) {
            a[block] = gen.integer(0, 2);
            b[block] = gen.integer(0, 2);
            ab[block] = a[block] + b[block];
        }
        const ContractionSpec sa = make_spec(g, a, "x"), sb = make_spec(g, b, "x");
        bool ok = true;
        for (const auto& t : transformed_structure(sa)) ok = ok && t.net_degree >= 0;
        for (const auto& t : transformed_structure(sb)) ok = ok && t.net_degree >= 0;
        if (!ok) continue;
        ++composed;
        const LieAlgebra first = contract_algebra(sa);
        CHECK(contract_algebra(ContractionSpec{"x", first, sb.exponents}).table() ==
              contract_algebra(make_spec(g, ab, "x")).table());
    }
    CHECK(composed >= 20);
}

TEST_CASE("pipeline invariants are invariants of the limit algebra")
{
    for (const auto& n : named_contractions()) {
        CAPTURE(n);
        const ContractionSpec s = named_contraction(n);
        try {
            const PipelineResult r = contraction_pipeline(s, kinematical_matrix(s.algebra.name()));
            for (const auto& m : r.invariants.members) CHECK(is_invariant(catalog(named_contraction_target(n)), m.poly));
            CHECK(num_invariants(r.contracted) == num_invariants(s.algebra));
        } catch (const CountMismatch&) {
            CHECK(num_invariants(contract_algebra(s)) != num_invariants(s.algebra));
        } catch (const DependentInvariants&) {
            CHECK(num_invariants(contract_algebra(s)) == num_invariants(s.algebra));
        }
    }
}

TEST_CASE("recipe invariants are annihilated")
{
    for (const auto& n : catalog_listing()) {
        CAPTURE(n);
        const LieAlgebra g = catalog(n);
        const InvariantSet s = invariants_from_recipe(recipe_for(n), g);
        CHECK(static_cast<int>(s.size()) == num_invariants(g));
        CHECK(independence_rank(s.polys()) == num_invariants(g));
        for (const auto& m : s.members)
            for (const auto& op : coadjoint_operators(g)) CHECK(op.apply(m.poly).is_zero());
    }
}
