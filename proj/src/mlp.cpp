#include "lieinv/mlp.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lieinv/catalog.hpp"
#include "lieinv/invariance.hpp"

namespace lieinv {

const KinematicalFunctions& kinematical_functions()
{
    static const KinematicalFunctions f = [] {
        const LieAlgebra g = kinematical_algebra("static");
        const Universe& u = g.coordinates();
        auto p = [&](const char* s) { return parse_poly(s, u); };
        return KinematicalFunctions{p("h"),
                                    p("p1^2 + p2^2 + p3^2"),
                                    p("k1^2 + k2^2 + k3^2"),
                                    p("j1^2 + j2^2 + j3^2"),
                                    p("k1*p1 + k2*p2 + k3*p3"),
                                    p("j1*k1 + j2*k2 + j3*k3"),
                                    p("j1*p1 + j2*p2 + j3*p3"),
                                    p("j1*p2*k3 - j1*p3*k2 + j2*p3*k1 - j2*p1*k3 + j3*p1*k2 - j3*p2*k1")};
    }();
    return f;
}

std::optional<PublishedLabelRow> published_label_row(std::string_view algebra)
{
    const std::string canon = canonical_kinematical_name(algebra);
    const auto& f = kinematical_functions();
    const MultiPoly I1 = f.I1, I2 = f.I2, I3 = f.I3, I4 = f.I4, I5 = f.I5, I6 = f.I6, I7 = f.I7, M = f.M;
    const MultiPoly two(2L);
    const MultiPoly I1sq = I1 * I1;
    const MultiPoly quartic = I2 * I3 - I5 * I5;
    if (canon == "so41")
        return PublishedLabelRow{canon,
                         {I1sq - I2 + I3 - I4, I1sq * I4 + I2 * I3 - I5 * I5 + I6 * I6 - I7 * I7 - two * I1 * M},
                         {I2, I3, I5, I6},
                         {I2, I3, I5}};
    if (canon == "so32")
        return PublishedLabelRow{canon,
                         {I1sq - I2 - I3 + I4, I1sq * I4 + I2 * I3 - I5 * I5 - I6 * I6 - I7 * I7 - two * I1 * M},
                         {I2, I3, I5, I6},
                         {I2, I3, I5}};
    if (canon == "iso31")
        return PublishedLabelRow{canon, {I1sq - I2, I1sq * I4 + I2 * I3 - I5 * I5 - I7 * I7 - two * I1 * M}, {I2, I3, I5, I7}, {I2, I3, I5}};
    if (canon == "iso4")
        return PublishedLabelRow{canon, {I1sq + I2, I1sq * I4 + I2 * I3 - I5 * I5 + I6 * I6 - two * I1 * M}, {I2, I3, I5, I6}, {I2, I3, I5}};
    if (canon == "newton_plus") return PublishedLabelRow{canon, {I2 - I3, quartic}, {I1, I2, I6, I7}, {I2}};
    if (canon == "newton_minus") return PublishedLabelRow{canon, {I2 + I3, quartic}, {I1, I2, I6, I7}, {I2}};
    if (canon == "carroll")
        return PublishedLabelRow{canon, {I1sq, I1sq * I4 + I2 * I3 - I5 * I5 - two * I1 * M}, {I2, I3, I5, I6}, {I2 * I3}};
    if (canon == "galilei") return PublishedLabelRow{canon, {I2, quartic}, {I1, I3, I6, I7}, {quartic}};
    if (canon == "static") return PublishedLabelRow{canon, {I1, I2, I3, I5}, {I6, I7}, {}};
    return std::nullopt;
}

std::pair<int, int> missing_label_count(const LieAlgebra& g, const SubalgebraSelection& h, int l_prime)
{
    const LieAlgebra sub = h.as_algebra();
    const int twice = g.dim() - num_invariants(g) - sub.dim() - num_invariants(sub);
    if (twice % 2) throw BadParams("dim g - N(g) - dim h - N(h) is odd");
    const int n = twice / 2 + l_prime;
    if (n < 0) throw NegativeCount("missing label count is negative (" + std::to_string(n) + ")");
    return {n, 2 * n};
}

int compute_l_prime(const InvariantSet& g_invariants, const SubalgebraSelection& h)
{
    std::vector<std::string> sub_vars;
    for (int i : h.indices()) sub_vars.push_back(h.parent().coordinate_name(i));
    int count = 0;
    for (const auto& m : g_invariants.members) {
        const auto support = m.poly.support();
        if (std::all_of(support.begin(), support.end(), [&](const std::string& v) {
                return std::find(sub_vars.begin(), sub_vars.end(), v) != sub_vars.end();
            }))
            ++count;
    }
    return count;
}

int reduced_solution_count(const LieAlgebra& g, const SubalgebraSelection& h)
{
    std::vector<int> rest;
    for (int j = 0; j < g.dim(); ++j)
        if (!h.contains(j)) rest.push_back(j);
    if (rest.empty()) return 0;
    if (h.indices().empty()) return static_cast<int>(rest.size());
    const PolyMatrix a = commutator_matrix(g);
    PolyMatrix sys(static_cast<Eigen::Index>(h.indices().size()), static_cast<Eigen::Index>(rest.size()));
    for (std::size_t r = 0; r < h.indices().size(); ++r)
        for (std::size_t c = 0; c < rest.size(); ++c)
            sys(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(h.indices()[r], rest[c]);
    return static_cast<int>(rest.size()) - rank_over_function_field(sys);
}

MatrixRecipe reduced_recipe(const MatrixRecipe& r, const SubalgebraSelection& h)
{
    std::map<std::string, MultiPoly> zero;
    for (int i : h.indices()) zero.emplace(h.parent().coordinate_name(i), MultiPoly(0L));
    MatrixRecipe out = r;
    out.base = substitute(r.base, zero);
    out.combine = Combine::plain;
    out.minor_row = out.minor_col = 0;
    return out;
}

bool functionally_equivalent(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                             const std::vector<MultiPoly>& base)
{
    auto join = [](std::vector<MultiPoly> x, const std::vector<MultiPoly>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    const int ra = independence_rank(join(base, a));
    const int rb = independence_rank(join(base, b));
    const int rab = independence_rank(join(join(base, a), b));
    return ra == rab && rb == rab;
}

MLPReport mlp_analyze(std::string_view algebra, std::optional<std::vector<int>> h_indices,
                      std::optional<int> l_prime_override)
{
    const LieAlgebra g = catalog(algebra);
    if (!h_indices) {
        if (!is_kinematical(algebra)) throw BadParams("a subalgebra is required for " + g.name());
        h_indices = rotation_indices();
    }
    return mlp_analyze(g, recipe_for(algebra), *h_indices, l_prime_override);
}

MLPReport mlp_analyze(const LieAlgebra& g, const MatrixRecipe& recipe, const std::vector<int>& h_indices,
                      std::optional<int> l_prime_override)
{
    const std::string_view algebra = g.name();
    const SubalgebraSelection h = subalgebra(g, h_indices);

    MLPReport rep;
    rep.algebra = g.name();
    rep.subalgebra_indices = h.indices();
    rep.casimirs = invariants_from_recipe(recipe, g);

    rep.subalgebra_casimirs.algebra = g.name() + " subalgebra";
    for (const auto& p : polynomial_invariants(h.as_algebra()))
        rep.subalgebra_casimirs.members.push_back({p.over(g.coordinates()), p.total_degree(), "subalgebra invariant"});

    rep.l_prime = l_prime_override ? *l_prime_override : compute_l_prime(rep.casimirs, h);
    std::tie(rep.n, rep.m) = missing_label_count(g, h, rep.l_prime);
    rep.n_prime = reduced_solution_count(g, h);

    const MatrixRecipe reduced = reduced_recipe(recipe, h);
    rep.reduced_polynomial = evaluate_recipe(reduced);

    // Candidate pool: coefficients by descending T power, then their block parts.
    std::vector<std::pair<MultiPoly, std::string>> pool;
    const unsigned d = rep.reduced_polynomial.degree_in(reduced.t);
    std::vector<std::pair<MultiPoly, std::string>> parts;
    for (unsigned k = d + 1; k-- > 0;) {
        MultiPoly c = rep.reduced_polynomial.coefficient(reduced.t, k);
        if (c.is_constant()) continue;
        c = sign_normalized(c.over(g.coordinates()));
        rep.reduced_candidates.push_back(c);
        const std::string origin = "coefficient of " + reduced.t + "^" + std::to_string(k);
        pool.emplace_back(c, origin);
        const auto split = block_parts(c);
        if (split.size() > 1)
            for (const auto& q : split) parts.emplace_back(q, "part of " + origin);
    }
    pool.insert(pool.end(), parts.begin(), parts.end());

    std::vector<MultiPoly> have = rep.casimirs.polys();
    for (const auto& s : rep.subalgebra_casimirs.members) have.push_back(s.poly);
    const std::vector<MultiPoly> base = have;
    int rank = independence_rank(have);
    for (const auto& [poly, origin] : pool) {
        LabelVerdict v{poly, origin, false, false, false, ""};
        v.annihilated = annihilated_by_subalgebra(h, poly);
        if (!v.annihilated) {
            v.reason = "not annihilated by the subalgebra operators";
        } else {
            have.push_back(poly);
            const int r = independence_rank(have);
            v.raises_rank = r > rank;
            if (v.raises_rank) {
                rank = r;
                v.accepted = true;
                v.reason = "independent of the Casimirs and the labels accepted so far";
                rep.accepted_labels.push_back(poly);
            } else {
                have.pop_back();
                v.reason = "functionally dependent on the Casimirs and the labels accepted so far";
            }
        }
        rep.verdicts.push_back(std::move(v));
    }

    std::map<std::string, MultiPoly> zero;
    for (int i : h.indices()) zero.emplace(g.coordinate_name(i), MultiPoly(0L));
    std::vector<MultiPoly> reduced_casimirs;
    for (const auto& c : rep.casimirs.members) {
        MultiPoly r = substitute(c.poly, zero);
        if (!r.is_constant()) reduced_casimirs.push_back(r);
    }
    rep.surviving_casimirs = static_cast<int>(independent_basis(reduced_casimirs, rep.accepted_labels).size());

    if (static_cast<int>(rep.accepted_labels.size()) > rep.m) rep.flags.push_back("more_labels_than_available");
    if (rep.accepted_labels.empty()) {
        rep.method_fails = true;
        rep.flags.push_back("method_fails");
        rep.notes.push_back("the reduced matrix yields no label independent of the Casimir operators");
    }
    if (auto row = published_label_row(algebra); row && !row->reduced_yield.empty()) {
        if (rep.accepted_labels.size() != row->reduced_yield.size() ||
            !functionally_equivalent(rep.accepted_labels, row->reduced_yield, base)) {
            rep.flags.push_back("published_label_discrepancy");
            std::string listed;
            for (const auto& p : row->reduced_yield) listed += (listed.empty() ? "" : ", ") + p.to_string();
            rep.notes.push_back("the published reduced-matrix yield {" + listed +
                                "} is not functionally equivalent to the computed labels");
        }
    }
    if (is_kinematical(algebra) && canonical_kinematical_name(algebra) == "static")
        rep.notes.push_back("h is itself central; the recipe produces h^2");

    // One universe for every polynomial so that printing is stable.
    const Universe u = merge_universes(g.coordinates(), make_universe({reduced.t}));
    for (auto& m : rep.casimirs.members) m.poly = m.poly.over(u);
    for (auto& m : rep.subalgebra_casimirs.members) m.poly = m.poly.over(u);
    rep.reduced_polynomial = rep.reduced_polynomial.over(u);
    for (auto& p : rep.reduced_candidates) p = p.over(u);
    for (auto& v : rep.verdicts) v.poly = v.poly.over(u);
    for (auto& p : rep.accepted_labels) p = p.over(u);
    return rep;
}

}  // namespace lieinv
