#include "lieinv/contraction.hpp"

#include <array>
#include <cctype>

#include "lieinv/catalog.hpp"
#include "lieinv/invariance.hpp"

namespace lieinv {

namespace {

std::string strip_digits(const std::string& s)
{
    std::string out = s;
    while (!out.empty() && std::isdigit(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
}

struct NamedContraction {
    const char* name;
    const char* source;
    const char* target;
    std::array<int, 4> jpkh;
};

constexpr NamedContraction kNamed[] = {
    {"so32_to_iso31", "so32", "iso31", {0, 1, 0, 1}},
    {"so41_to_iso4", "so41", "iso4", {0, 0, 1, 1}},
    {"so32_to_static", "so32", "static", {0, 1, 1, 1}},
    {"so32_to_newton_minus", "so32", "newton_minus", {0, 1, 1, 0}},
    {"so41_to_newton_plus", "so41", "newton_plus", {0, 1, 1, 0}},
    {"iso31_to_carroll", "iso31", "carroll", {0, 0, 1, 1}},
    {"so32_to_carroll", "so32", "carroll", {0, 1, 1, 2}},
    {"so32_to_galilei", "so32", "galilei", {0, 2, 1, 1}},
    {"iso31_to_galilei", "iso31", "galilei", {0, 1, 1, 0}},
};

const NamedContraction& find_named(std::string_view name)
{
    for (const auto& n : kNamed)
        if (name == n.name) return n;
    throw UnknownName("unknown contraction '" + std::string(name) + "'");
}

}  // namespace

ContractionSpec make_spec(const LieAlgebra& g, const std::map<std::string, int>& exponents, std::string name)
{
    ContractionSpec s{std::move(name), g, std::vector<int>(static_cast<std::size_t>(g.dim()), 0)};
    for (const auto& [key, a] : exponents) {
        if (auto i = g.index_of_generator(key)) {
            s.exponents[static_cast<std::size_t>(*i)] = a;
            continue;
        }
        bool matched = false;
        for (int i = 0; i < g.dim(); ++i)
            if (strip_digits(g.generators()[i]) == key) {
                s.exponents[static_cast<std::size_t>(i)] = a;
                matched = true;
            }
        if (!matched) throw UnknownName("no generator or block '" + key + "' in " + g.name());
    }
    return s;
}

std::vector<ScaledTerm> transformed_structure(const ContractionSpec& spec)
{
    std::vector<ScaledTerm> out;
    for (const auto& [ij, terms] : spec.algebra.table())
        for (const auto& [k, c] : terms)
            out.push_back({ij.first, ij.second, k, c,
                           spec.exponents[ij.first] + spec.exponents[ij.second] - spec.exponents[k]});
    return out;
}

LieAlgebra contract_algebra(const ContractionSpec& spec)
{
    const LieAlgebra& g = spec.algebra;
    if (static_cast<int>(spec.exponents.size()) != g.dim()) throw BadParams("exponent count differs from dimension");
    std::vector<Bracket> kept;
    for (const auto& t : transformed_structure(spec)) {
        if (t.net_degree < 0)
            throw DivergentContraction("bracket [" + g.generators()[t.i] + ", " + g.generators()[t.j] + "] term " +
                                           g.generators()[t.k] + " diverges (net degree " +
                                           std::to_string(t.net_degree) + ")",
                                       t.i, t.j, t.k);
        if (t.net_degree == 0) kept.push_back({t.i, t.j, {{t.k, t.c}}});
    }
    std::vector<std::string> coords(g.coordinates()->begin(), g.coordinates()->end());
    return make_algebra(spec.name.empty() ? g.name() + "'" : spec.name, g.generators(), kept, coords);
}

EpsLimit contract_charpoly(const MultiPoly& p_eps, std::string_view eps)
{
    EpsLimit r;
    r.alpha = static_cast<int>(p_eps.degree_in(eps));
    r.limit = p_eps.coefficient(eps, static_cast<unsigned>(r.alpha));
    return r;
}

MultiPoly rescale(const MultiPoly& p, const ContractionSpec& spec, std::string_view eps)
{
    const Universe u = merge_universes(spec.algebra.coordinates(), make_universe({std::string(eps)}));
    const MultiPoly e = MultiPoly::variable(u, eps);
    std::map<std::string, MultiPoly> bindings;
    for (int i = 0; i < spec.algebra.dim(); ++i) {
        const int a = spec.exponents[static_cast<std::size_t>(i)];
        if (a < 0) throw BadParams("rescale needs nonnegative exponents");
        if (a) bindings.emplace(spec.algebra.coordinate_name(i), spec.algebra.coordinate(i).over(u) * pow(e, a));
    }
    return substitute(p, bindings);
}

PipelineResult contraction_pipeline(const ContractionSpec& spec, const MatrixRecipe& recipe)
{
    PipelineResult r;
    r.contracted = contract_algebra(spec);
    const int n_g = num_invariants(spec.algebra);
    const int n_c = num_invariants(r.contracted);
    if (n_g != n_c)
        throw CountMismatch("N(g) = " + std::to_string(n_g) + " but the contraction has N = " + std::to_string(n_c));
    r.p = evaluate_recipe(recipe);
    r.p_eps = rescale(r.p, spec);
    const EpsLimit lim = contract_charpoly(r.p_eps);
    r.alpha = lim.alpha;
    r.limit = lim.limit;
    r.invariants = extract_invariants(r.limit, r.contracted, recipe.t);
    const int rank = independence_rank(r.invariants.polys());
    if (rank < n_c)
        throw DependentInvariants("limit coefficients have rank " + std::to_string(rank) + " < N(g') = " +
                                  std::to_string(n_c));
    return r;
}

ContractionSpec named_contraction(std::string_view name)
{
    const auto& n = find_named(name);
    const LieAlgebra g = kinematical_algebra(n.source);
    return make_spec(g, {{"J", n.jpkh[0]}, {"P", n.jpkh[1]}, {"K", n.jpkh[2]}, {"H", n.jpkh[3]}}, n.target);
}

std::string named_contraction_target(std::string_view name) { return find_named(name).target; }

std::vector<std::string> named_contractions()
{
    std::vector<std::string> out;
    for (const auto& n : kNamed) out.emplace_back(n.name);
    return out;
}

}  // namespace lieinv
