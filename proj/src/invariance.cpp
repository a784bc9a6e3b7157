#include "lieinv/invariance.hpp"

#include <algorithm>
#include <map>

namespace lieinv {

CoadjointOperator::CoadjointOperator(const LieAlgebra& g, int generator) : generator_(generator)
{
    if (generator < 0 || generator >= g.dim()) throw IndexError("generator index out of range");
    for (int j = 0; j < g.dim(); ++j) {
        MultiPoly c = MultiPoly::zero(g.coordinates());
        for (const auto& t : g.bracket(generator, j)) c -= g.coordinate(t.k) * t.c;
        if (!c.is_zero()) components_.emplace_back(g.coordinate_name(j), std::move(c));
    }
}

MultiPoly CoadjointOperator::apply(const MultiPoly& f) const
{
    MultiPoly out = MultiPoly::zero(f.universe());
    for (const auto& [var, c] : components_) {
        MultiPoly d = differentiate(f, var);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

std::vector<CoadjointOperator> coadjoint_operators(const LieAlgebra& g)
{
    std::vector<CoadjointOperator> ops;
    ops.reserve(static_cast<std::size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) ops.emplace_back(g, i);
    return ops;
}

MultiPoly apply(const CoadjointOperator& op, const MultiPoly& f) { return op.apply(f); }

std::vector<int> failing_generators(const LieAlgebra& g, const MultiPoly& f)
{
    std::vector<int> out;
    for (int i = 0; i < g.dim(); ++i)
        if (!CoadjointOperator(g, i).apply(f).is_zero()) out.push_back(i);
    return out;
}

bool is_invariant(const LieAlgebra& g, const MultiPoly& f)
{
    for (int i = 0; i < g.dim(); ++i)
        if (!CoadjointOperator(g, i).apply(f).is_zero()) return false;
    return true;
}

bool annihilated_by_subalgebra(const SubalgebraSelection& h, const MultiPoly& f)
{
    for (int i : h.indices())
        if (!CoadjointOperator(h.parent(), i).apply(f).is_zero()) return false;
    return true;
}

PolyMatrix jacobian(const std::vector<MultiPoly>& polys)
{
    Universe u = make_universe({});
    for (const auto& p : polys) u = merge_universes(u, p.universe());
    PolyMatrix jm(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(u->size()));
    for (std::size_t a = 0; a < polys.size(); ++a) {
        const MultiPoly f = polys[a].over(u);
        for (std::size_t b = 0; b < u->size(); ++b)
            jm(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = differentiate(f, (*u)[b]);
    }
    return jm;
}

int independence_rank(const std::vector<MultiPoly>& polys)
{
    if (polys.empty()) return 0;
    return rank_over_function_field(jacobian(polys));
}

std::vector<MultiPoly> independent_basis(const std::vector<MultiPoly>& polys, const std::vector<MultiPoly>& already_have)
{
    std::vector<MultiPoly> pool = already_have;
    std::vector<MultiPoly> chosen;
    int rank = independence_rank(pool);
    for (const auto& p : polys) {
        pool.push_back(p);
        const int r = independence_rank(pool);
        if (r > rank) {
            rank = r;
            chosen.push_back(p);
        } else {
            pool.pop_back();
        }
    }
    return chosen;
}

namespace {

void monomials_of_degree(std::size_t nvars, unsigned degree, std::size_t start, Monomial& cur,
                         std::vector<Monomial>& out)
{
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = start; v < nvars; ++v) {
        cur.set_exponent(v, cur.exponent(v) + 1);
        monomials_of_degree(nvars, degree - 1, v, cur, out);
        cur.set_exponent(v, cur.exponent(v) - 1);
    }
}

/// Basis of the kernel of the linear map whose columns are `images`.
std::vector<std::vector<Rational>> kernel(const std::vector<MultiPoly>& images)
{
    const std::size_t ncols = images.size();
    // Rows indexed by (result monomial); sparse rows keyed by column.
    std::map<std::string, std::map<std::size_t, Rational>> rows;
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& t : images[c].terms()) rows[t.monomial.key()][c] += t.coeff;

    std::vector<std::map<std::size_t, Rational>> reduced;  // each with a distinct pivot = first key
    for (auto& [key, row] : rows) {
        std::map<std::size_t, Rational> r = row;
        for (const auto& piv : reduced) {
            const std::size_t pc = piv.begin()->first;
            auto it = r.find(pc);
            if (it == r.end()) continue;
            const Rational f = it->second;
            for (const auto& [col, v] : piv) {
                Rational& x = r[col];
                x -= f * v;
                if (x.is_zero()) r.erase(col);
            }
        }
        if (r.empty()) continue;
        const Rational lead = r.begin()->second;
        for (auto& [col, v] : r) v /= lead;
        // Keep earlier rows reduced against the new pivot.
        const std::size_t pc = r.begin()->first;
        for (auto& piv : reduced) {
            auto it = piv.find(pc);
            if (it == piv.end()) continue;
            const Rational f = it->second;
            for (const auto& [col, v] : r) {
                Rational& x = piv[col];
                x -= f * v;
                if (x.is_zero()) piv.erase(col);
            }
        }
        reduced.push_back(std::move(r));
    }
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& r : reduced) is_pivot[r.begin()->first] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = Rational(1);
        for (const auto& r : reduced)
            if (auto it = r.find(free); it != r.end()) v[r.begin()->first] = -it->second;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<MultiPoly> polynomial_invariants(const LieAlgebra& g, int max_degree)
{
    const int target = num_invariants(g);
    const Universe& u = g.coordinates();
    const auto ops = coadjoint_operators(g);
    std::vector<MultiPoly> found;
    for (int d = 1; d <= max_degree && static_cast<int>(found.size()) < target; ++d) {
        std::vector<Monomial> monos;
        Monomial cur(u->size());
        monomials_of_degree(u->size(), static_cast<unsigned>(d), 0, cur, monos);
        std::vector<MultiPoly> basis;
        basis.reserve(monos.size());
        for (const auto& m : monos) basis.push_back(MultiPoly::from_terms(u, {{m, Rational(1)}}));

        // Stack the images under all operators into one polynomial per column by tagging
        // each operator with a fresh variable.
        std::vector<std::string> tags;
        for (std::size_t i = 0; i < ops.size(); ++i) tags.push_back("__op" + std::to_string(i));
        const Universe tagged = merge_universes(u, make_universe(tags));
        std::vector<MultiPoly> images;
        images.reserve(basis.size());
        for (const auto& b : basis) {
            MultiPoly img = MultiPoly::zero(tagged);
            for (std::size_t i = 0; i < ops.size(); ++i) {
                const MultiPoly r = ops[i].apply(b);
                if (!r.is_zero()) img += r * MultiPoly::variable(tagged, tags[i]);
            }
            images.push_back(img);
        }
        std::vector<MultiPoly> candidates;
        for (const auto& v : kernel(images)) {
            MultiPoly p = MultiPoly::zero(u);
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) p += basis[c] * v[c];
            candidates.push_back(sign_normalized(p));
        }
        for (auto& p : independent_basis(candidates, found)) {
            if (static_cast<int>(found.size()) >= target) break;
            found.push_back(std::move(p));
        }
    }
    return found;
}

}  // namespace lieinv
